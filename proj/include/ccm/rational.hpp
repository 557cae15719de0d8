#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <string>

namespace ccm {

using BigInt = boost::multiprecision::cpp_int;

/// Exact reduced fraction in [0, 1]. Denominators grow without bound along
/// harmonic codes, so the components are arbitrary-precision integers.
class Rational {
public:
    Rational() : num_(0), den_(1) {}

    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ <= 0)
            throw std::domain_error("Rational: denominator must be positive");
        if (num_ < 0 || num_ > den_)
            throw std::domain_error("Rational: value outside [0, 1]");
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    double to_double() const {
        namespace mp = boost::multiprecision;
        return mp::cpp_rational(num_, den_).convert_to<double>();
    }

    std::string str() const { return num_.str() + "/" + den_.str(); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        BigInt lhs = a.num_ * b.den_;
        BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.num_ << '/' << r.den_;
    }

private:
    BigInt num_;
    BigInt den_;
};

/// (P+P')/(Q+Q'), the smallest-denominator rational strictly between
/// Farey neighbors.
inline Rational mediant(const Rational& a, const Rational& b) {
    return Rational(a.num() + b.num(), a.den() + b.den());
}

/// Determinant test: |a.num * b.den - b.num * a.den| = 1.
inline bool is_farey_neighbor(const Rational& a, const Rational& b) {
    BigInt det = a.num() * b.den() - b.num() * a.den();
    return det == 1 || det == -1;
}

} // namespace ccm
