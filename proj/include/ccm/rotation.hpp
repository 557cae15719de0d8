#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ccm/family.hpp"
#include "ccm/farey.hpp"
#include "ccm/rational.hpp"

namespace ccm {

/// Position of the rotation number relative to a fixed rational. Monotone
/// non-decreasing in the parameter.
enum class Comparison { Below, Locked, Above };

/// Frequency-locking interval of one rational, with the parameter at which
/// the critical point is periodic.
struct Tongue {
    Rational rho;
    double t_lo = 0.0;
    double t_hi = 0.0;
    double center = 0.0;
    double tol = 0.0;
};

struct RotationOptions {
    int q_max = 4096;          // largest admissible tongue denominator
    double x_tol = 1e-13;      // extremum localization tolerance in x
    double center_tol = 1e-13; // parameter tolerance of center bisection
    int max_bisect = 200;      // hard iteration cap for all bisections
};

/// Birkhoff average f_t^n(0)/n with its a-priori error bound 1/n.
struct BirkhoffEstimate {
    double value = 0.0;
    double error_bound = 0.0;
};

BirkhoffEstimate birkhoff_rotation_number(const CriticalFamily& fam, double t, long long n_iter);

/// Classifies rho(t) against p/q by the sign of the extrema of
/// f_t^q(x) - x - p over the circle. Extrema are located on a uniform grid
/// of max(64, 8q) points with ternary refinement of the candidate brackets.
Comparison compare_to_rational(const CriticalFamily& fam, double t, const Rational& pq,
                               const RotationOptions& opt = {});

/// Frequency-locking interval endpoints, certified by bisection to within
/// tol. The returned pair is the outer hull of the bisection brackets, so it
/// always contains the true interval.
std::pair<double, double> locking_interval(const CriticalFamily& fam, const Rational& pq,
                                           double tol, const RotationOptions& opt = {});

/// The unique parameter with f_t^q(0) = p; f_t^q(0) is strictly increasing
/// in t, so plain bisection applies.
double center(const CriticalFamily& fam, const Rational& pq, const RotationOptions& opt = {});

/// Center plus both locking boundaries in one record.
Tongue compute_tongue(const CriticalFamily& fam, const Rational& pq, double tol,
                      const RotationOptions& opt = {});

/// Harmonic code of rho(t) to the given depth, located purely through
/// compare_to_rational (no floating rotation-number estimates). Lands on a
/// terminal endpoint symbol when t sits inside the locking of a subdivision
/// endpoint.
HarmonicCode param_harmonic_code(const CriticalFamily& fam, double t, int depth,
                                 const RotationOptions& opt = {},
                                 const FareyLimits& limits = kDefaultFareyLimits);

/// Iterate counts at which the orbit of 0 returns closer to itself than at
/// any earlier time. Stops after `count` returns or `max_iter` steps,
/// whichever comes first.
template <class Step>
std::vector<long long> closest_returns(Step&& step, int count, long long max_iter) {
    std::vector<long long> returns;
    LiftPoint x{0, 0.0};
    double best = 2.0;
    for (long long k = 1; k <= max_iter && static_cast<int>(returns.size()) < count; ++k) {
        x = step(x);
        const double dist = std::min(x.frac, 1.0 - x.frac);
        if (dist > 0.0 && dist < best) {
            best = dist;
            returns.push_back(k);
        }
    }
    return returns;
}

std::vector<long long> closest_returns_dynamical(const CriticalFamily& fam, double t, int count,
                                                 long long max_iter = 1'000'000);

/// Spread of the parameter derivative of f^Q over sampled (t, x), computed
/// three ways: the chain-rule sum, a central finite difference, and the
/// interval-ratio proxy (skipped when q = |Q' - Q| = 0).
struct ParamDerivativeReport {
    double chain_min = 0.0, chain_max = 0.0;
    double fd_min = 0.0, fd_max = 0.0;
    std::optional<double> proxy_min, proxy_max;
    double max_chain_fd_rel_dev = 0.0;
    int samples = 0;

    /// max/min ratio across every sampled value of every method.
    double spread() const;
};

ParamDerivativeReport param_derivative_report(const CriticalFamily& fam, const FareyDomain& domain,
                                              int samples, std::uint64_t seed = 20260809,
                                              const RotationOptions& opt = {});

/// First preimage of the integer lattice in (0, 1]: the unique y with
/// f_t^k(y) integral, found by bisection on the monotone lift. k = 0 returns
/// 1, the critical point one full turn to the right.
double backward_point(const CriticalFamily& fam, double t, long long k,
                      const RotationOptions& opt = {});

} // namespace ccm
