#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccm/errors.hpp"
#include "ccm/rational.hpp"

namespace ccm {

/// Hard limits for the exact-arithmetic layer. Codes and subdivision picks are
/// capped so that runaway inputs fail loudly instead of exhausting memory.
struct FareyLimits {
    std::size_t max_code_length = 64;
    long long max_pick = 1'000'000;
};

inline constexpr FareyLimits kDefaultFareyLimits{};

/// Ordered pair of Farey neighbors; the unit of harmonic subdivision.
/// Accepts determinant-one pairs, requiring the denominators to be within a
/// factor of two of each other when both endpoints are interior to (0, 1).
class FareyDomain {
public:
    FareyDomain(Rational lo, Rational hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }

    friend bool operator==(const FareyDomain& a, const FareyDomain& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

private:
    Rational lo_;
    Rational hi_;
};

/// Harmonic code: a chain of subdivision picks, optionally ending on an
/// endpoint symbol when the coded value is itself a subdivision endpoint.
struct HarmonicCode {
    std::vector<long long> picks;
    std::optional<long long> endpoint;

    friend bool operator==(const HarmonicCode&, const HarmonicCode&) = default;
};

/// Left/right daughters of r in the Farey tree, computed by mediant
/// navigation from the root. Requires 0 < r < 1.
std::pair<Rational, Rational> daughters(const Rational& r);

/// Decodes an L/R string starting from the root 1/2. The empty code is 1/2.
Rational code_to_rational(std::string_view code,
                          const FareyLimits& limits = kDefaultFareyLimits);

/// Inverse of code_to_rational. Requires 0 < r < 1.
std::string rational_to_code(const Rational& r,
                             const FareyLimits& limits = kDefaultFareyLimits);

/// Turning points of an L/R code, 1-based. The first is the least i with
/// a_i != a_{i+1}; each next is the least i > m_prev + 1 with a_i != a_{i+1},
/// so an alternation immediately after a turning point does not count.
std::vector<std::size_t> turning_points(std::string_view code);

/// Number of turning points plus one.
std::size_t degree(std::string_view code);

/// Denominator of the decoded prefix at each turning point, in order.
std::vector<BigInt> closest_return_denominators(
    std::string_view code, const FareyLimits& limits = kDefaultFareyLimits);

/// Endpoint u_n of the harmonic subdivision of d = (P/Q, P'/Q'):
///   n >= 0:  ((n+1)P + P') / ((n+1)Q + Q')
///   n <  0:  (P + (1-n)P') / (Q + (1-n)Q')
/// u_n decreases to lo as n -> +inf and increases to hi as n -> -inf.
Rational harmonic_endpoint(const FareyDomain& d, long long n,
                           const FareyLimits& limits = kDefaultFareyLimits);

/// The subdivision cell with endpoints u_{n+1}, u_n, reordered so lo < hi.
FareyDomain harmonic_refine(const FareyDomain& d, long long pick,
                            const FareyLimits& limits = kDefaultFareyLimits);

} // namespace ccm
