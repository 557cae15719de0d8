#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "ccm/errors.hpp"

namespace ccm {

/// Point on the universal cover: exact winding number plus fractional part in
/// [0, 1). Keeping the integer part exact means rotation-number numerators
/// never see float rounding.
struct LiftPoint {
    long long winding = 0;
    double frac = 0.0;

    double value() const { return static_cast<double>(winding) + frac; }

    static LiftPoint from_value(double x) {
        double fl = std::floor(x);
        double fr = x - fl;
        if (fr >= 1.0) { // guards the x == -0.0 and rounding edges
            fr -= 1.0;
            fl += 1.0;
        }
        return {static_cast<long long>(fl), fr};
    }
};

/// One-parameter family F_t(x) = F_0(x) + t of critical circle-map lifts,
/// with F_0'(x) = sin^{l-1}(pi x) / integral_0^1 sin^{l-1}(pi u) du for an odd
/// critical exponent l >= 3. The derivative is stored as a finite cosine
/// polynomial in 2 pi x, so the lift and its first three derivatives have
/// closed forms and the normalization integral is exact.
class CriticalFamily {
public:
    explicit CriticalFamily(int critical_exponent);

    int critical_exponent() const { return l_; }

    /// Coefficients a_1..a_m with F_0'(x) = 1 + sum_j a_j cos(2 pi j x).
    const std::vector<double>& cosine_coeffs() const { return coeffs_; }

    /// F_0 on the fundamental interval; equivariant extension is the
    /// caller's business (see lift_eval).
    double f0(double frac) const;

    // Derivatives of F_0 (periodic, valid for any real argument).
    double d1(double x) const;
    double d2(double x) const;
    double d3(double x) const;

    /// Schwarzian derivative of F_0 (hence of every F_t) at x.
    double schwarzian(double x) const;

private:
    int l_;                      // odd critical exponent
    int m_;                      // (l - 1) / 2
    std::vector<double> coeffs_; // a_1..a_m
    double inv_norm_;            // 4^m / binom(2m, m)
};

/// F_t(x) = F_0(x) + t with the winding count carried exactly.
LiftPoint lift_eval(const CriticalFamily& fam, double t, LiftPoint x);

/// n-fold composition of lift_eval; n = 0 is the identity.
LiftPoint iterate(const CriticalFamily& fam, double t, LiftPoint x, long long n);

/// View of the family at fixed parameter, exposing the interface the chain
/// kernels below expect. Test doubles (affine or rigid maps) model the same
/// interface.
struct FamilyLift {
    const CriticalFamily* fam;
    double t;

    LiftPoint step(LiftPoint x) const { return lift_eval(*fam, t, x); }
    double d1(double x) const { return fam->d1(x); }
    double d2(double x) const { return fam->d2(x); }
    double d3(double x) const { return fam->d3(x); }
    double schwarzian(double x) const { return fam->schwarzian(x); }
};

inline constexpr double kDegenerateDerivativeFloor = 1e-14;

/// (f^n)'(x) as the chain product of first derivatives along the orbit.
template <class Lift>
double derivative_of_iterate(const Lift& f, LiftPoint x, long long n) {
    double prod = 1.0;
    for (long long i = 0; i < n; ++i) {
        prod *= f.d1(x.frac);
        x = f.step(x);
    }
    return prod;
}

/// S(f^n)(x) = sum_i Sf(f^i x) * ((f^i)'(x))^2. Signals when an intermediate
/// derivative is too small for the composition to mean anything.
template <class Lift>
double schwarzian_of_iterate(const Lift& f, LiftPoint x, long long n) {
    double sum = 0.0;
    double deriv = 1.0;
    for (long long i = 0; i < n; ++i) {
        const double d1 = f.d1(x.frac);
        if (std::abs(d1) < kDegenerateDerivativeFloor)
            throw DegenerateDerivative("schwarzian_of_iterate: derivative vanished along the orbit");
        sum += f.schwarzian(x.frac) * deriv * deriv;
        deriv *= d1;
        x = f.step(x);
    }
    return sum;
}

/// Nonlinearity n(f^n) = (f^n)''/(f^n)' via n(f o g) = (nf o g) g' + ng.
template <class Lift>
double nonlinearity_of_iterate(const Lift& f, LiftPoint x, long long n) {
    double sum = 0.0;
    double deriv = 1.0;
    for (long long i = 0; i < n; ++i) {
        const double d1 = f.d1(x.frac);
        if (std::abs(d1) < kDegenerateDerivativeFloor)
            throw DegenerateDerivative("nonlinearity_of_iterate: derivative vanished along the orbit");
        sum += (f.d2(x.frac) / d1) * deriv;
        deriv *= d1;
        x = f.step(x);
    }
    return sum;
}

// Convenience overloads on the family itself.
double derivative_of_iterate(const CriticalFamily& fam, double t, LiftPoint x, long long n);
double schwarzian_of_iterate(const CriticalFamily& fam, double t, LiftPoint x, long long n);
double nonlinearity_of_iterate(const CriticalFamily& fam, double t, LiftPoint x, long long n);

/// Cr(a,b,c,d) = |b-a||d-c| / (|c-a||d-b|) for a < b < c < d; lies in (0, 1).
double cross_ratio(double a, double b, double c, double d);

} // namespace ccm
