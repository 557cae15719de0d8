#include "ccm/farey.hpp"

#include <algorithm>

namespace ccm {

namespace {

const Rational kZero(0, 1);
const Rational kOne(1, 1);
const Rational kHalf(1, 2);

bool interior(const Rational& r) { return r > kZero && r < kOne; }

void check_code(std::string_view code, const FareyLimits& limits) {
    if (code.size() > limits.max_code_length)
        throw LimitExceeded("Farey code longer than the configured limit");
    for (char c : code)
        if (c != 'L' && c != 'R')
            throw std::invalid_argument("Farey code may contain only 'L' and 'R'");
}

/// Mediant-navigation state: cur together with its current Farey neighbors.
struct Node {
    Rational lo, cur, hi;

    static Node root() { return {kZero, kHalf, kOne}; }

    void left() {
        hi = cur;
        cur = mediant(lo, cur);
    }
    void right() {
        lo = cur;
        cur = mediant(cur, hi);
    }
};

} // namespace

FareyDomain::FareyDomain(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!(lo_ < hi_))
        throw std::invalid_argument("FareyDomain: requires lo < hi");
    if (!is_farey_neighbor(lo_, hi_))
        throw std::invalid_argument("FareyDomain: endpoints are not Farey neighbors");
    if (interior(lo_) && interior(hi_)) {
        // Tree edges satisfy 1/2 <= Q/Q' <= 2; determinant-one pairs that
        // violate this (such as 2/5 and 1/2) are not subdivision cells.
        if (lo_.den() > 2 * hi_.den() || hi_.den() > 2 * lo_.den())
            throw std::invalid_argument("FareyDomain: denominator ratio outside [1/2, 2]");
    }
}

std::pair<Rational, Rational> daughters(const Rational& r) {
    if (!interior(r))
        throw std::domain_error("daughters: argument must lie strictly inside (0, 1)");
    Node node = Node::root();
    while (node.cur != r) {
        if (r < node.cur)
            node.left();
        else
            node.right();
    }
    return {mediant(node.lo, node.cur), mediant(node.cur, node.hi)};
}

Rational code_to_rational(std::string_view code, const FareyLimits& limits) {
    check_code(code, limits);
    Node node = Node::root();
    for (char c : code) {
        if (c == 'L')
            node.left();
        else
            node.right();
    }
    return node.cur;
}

std::string rational_to_code(const Rational& r, const FareyLimits& limits) {
    if (!interior(r))
        throw std::domain_error("rational_to_code: argument must lie strictly inside (0, 1)");
    std::string code;
    Node node = Node::root();
    while (node.cur != r) {
        if (code.size() >= limits.max_code_length)
            throw LimitExceeded("rational_to_code: code exceeds the configured length limit");
        if (r < node.cur) {
            code.push_back('L');
            node.left();
        } else {
            code.push_back('R');
            node.right();
        }
    }
    return code;
}

std::vector<std::size_t> turning_points(std::string_view code) {
    std::vector<std::size_t> points;
    std::size_t i = 1; // 1-based; compares a_i with a_{i+1}
    while (i < code.size()) {
        if (code[i - 1] != code[i]) {
            points.push_back(i);
            i += 2; // next admissible index is > m + 1
        } else {
            ++i;
        }
    }
    return points;
}

std::size_t degree(std::string_view code) { return turning_points(code).size() + 1; }

std::vector<BigInt> closest_return_denominators(std::string_view code,
                                                const FareyLimits& limits) {
    check_code(code, limits);
    std::vector<std::size_t> points = turning_points(code);
    std::vector<BigInt> dens;
    dens.reserve(points.size());
    Node node = Node::root();
    std::size_t next = 0;
    for (std::size_t i = 1; i <= code.size() && next < points.size(); ++i) {
        if (code[i - 1] == 'L')
            node.left();
        else
            node.right();
        if (i == points[next]) {
            dens.push_back(node.cur.den());
            ++next;
        }
    }
    return dens;
}

Rational harmonic_endpoint(const FareyDomain& d, long long n, const FareyLimits& limits) {
    if (n > limits.max_pick || n < -limits.max_pick)
        throw LimitExceeded("harmonic_endpoint: |n| exceeds the configured pick limit");
    const BigInt &p = d.lo().num(), &q = d.lo().den();
    const BigInt &pp = d.hi().num(), &qq = d.hi().den();
    if (n >= 0) {
        BigInt m = BigInt(n) + 1;
        return Rational(m * p + pp, m * q + qq);
    }
    BigInt m = BigInt(1) - n;
    return Rational(p + m * pp, q + m * qq);
}

FareyDomain harmonic_refine(const FareyDomain& d, long long pick, const FareyLimits& limits) {
    Rational a = harmonic_endpoint(d, pick, limits);
    Rational b = harmonic_endpoint(d, pick + 1, limits);
    if (b < a)
        std::swap(a, b);
    return FareyDomain(a, b);
}

} // namespace ccm
