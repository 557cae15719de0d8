#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ccm/atlas.hpp"
#include "ccm/family.hpp"
#include "ccm/farey.hpp"

namespace ccm {

/// Harmonic scalings h_n = |c(u_{n+1}) - c(u_n)| / |c(lo) - c(hi)| of one
/// Farey domain, measured between tongue centers.
struct ScalingReport {
    FareyDomain domain;
    int n_min = 0;
    int n_max = 0;
    std::map<long long, double> h;
    double fit_slope = 0.0;    // log h_n vs log |n| over |n| >= 2
    double ratio_spread = 0.0; // max/min of h_n (|n|^3 + 1)
};

ScalingReport harmonic_scalings(const TongueAtlas& atlas, const FareyDomain& domain, int n_min,
                                int n_max);

/// (slope, spread) of the cubic law on a report.
std::pair<double, double> cubic_law_check(const ScalingReport& report);

/// Sum over the first n period-Q orbit gaps of |F_z^{-q}(0) - 0| / gap, the
/// phase-space quantity whose reciprocal is comparable to h_n. q is the
/// denominator difference of the domain; for the root domain q = 0 and the
/// backward point is the critical point one full turn away, at distance 1.
double phase_sum(const CriticalFamily& fam, double z, const FareyDomain& domain, int n);

/// Orbit of the quadratic funnel map y -> y + alpha y^2 + eps on
/// (-kappa, kappa): every in-domain point from a start with no in-domain
/// preimage until the map exits.
struct MaximalOrbit {
    double alpha = 0.0;
    double eps = 0.0;
    double kappa = 0.0;
    std::vector<double> points;

    long long passage_length() const { return static_cast<long long>(points.size()); }
};

MaximalOrbit maximal_orbit(double alpha, double eps, double kappa);

struct OrbitFacts {
    double epsilon_l2_ratio = 0.0;   // (alpha / passage_length^2) / eps
    double slow_fraction = 0.0;      // fraction of gaps below 2 eps
    double reciprocal_gap_sum = 0.0; // sum of 1 / gap
};

OrbitFacts orbit_facts_check(const MaximalOrbit& orbit);

} // namespace ccm
