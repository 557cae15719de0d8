#include "ccm/family.hpp"

#include <numbers>
#include <stdexcept>

namespace ccm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Below this distance from the critical point the antiderivative is summed
// as a power series; the closed form loses all relative accuracy there.
constexpr double kSeriesSwitch = 1e-3;

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

CriticalFamily::CriticalFamily(int critical_exponent) : l_(critical_exponent) {
    if (l_ < 3 || l_ % 2 == 0)
        throw std::invalid_argument("CriticalFamily: critical exponent must be odd and >= 3");
    if (l_ > 51)
        throw std::invalid_argument("CriticalFamily: critical exponent above 51 is not representable");
    m_ = (l_ - 1) / 2;
    const double central = binomial(2 * m_, m_);
    inv_norm_ = std::pow(4.0, m_) / central;
    // sin^{2m}(pi x) = 4^{-m} [ binom(2m,m) + 2 sum_j (-1)^j binom(2m, m-j) cos(2 pi j x) ]
    coeffs_.resize(m_);
    double sign = -1.0;
    for (int j = 1; j <= m_; ++j) {
        coeffs_[j - 1] = 2.0 * sign * binomial(2 * m_, m_ - j) / central;
        sign = -sign;
    }
}

double CriticalFamily::f0(double frac) const {
    if (frac < kSeriesSwitch || frac > 1.0 - kSeriesSwitch) {
        // Series around the critical point; the right end maps through the
        // odd symmetry F_0(1 - d) = 1 - F_0(d).
        const bool mirrored = frac > 0.5;
        const double d = mirrored ? 1.0 - frac : frac;
        const double z = kPi * d;
        const double z2 = z * z;
        // sin^{2m}(z) = z^{2m} (1 - m z^2/3 + m(5m-2) z^4/90 + O(z^6))
        const double mm = static_cast<double>(m_);
        const double core = 1.0 - mm * z2 / (2.0 * mm + 3.0) / 3.0 * (2.0 * mm + 1.0) +
                            mm * (5.0 * mm - 2.0) / 90.0 * z2 * z2 * (2.0 * mm + 1.0) /
                                (2.0 * mm + 5.0);
        const double val =
            std::pow(z, 2 * m_) * d / (2.0 * mm + 1.0) * core * inv_norm_;
        return mirrored ? 1.0 - val : val;
    }
    double s = frac;
    for (int j = 1; j <= m_; ++j)
        s += coeffs_[j - 1] * std::sin(kTwoPi * j * frac) / (kTwoPi * j);
    return s;
}

double CriticalFamily::d1(double x) const {
    // sin^{2m}(pi x) / norm: exact nonnegativity, full relative accuracy at
    // the critical point where the cosine sum would cancel.
    const double s = std::sin(kPi * x);
    return std::pow(s * s, m_) * inv_norm_;
}

double CriticalFamily::d2(double x) const {
    const double s = std::sin(kPi * x);
    const double c = std::cos(kPi * x);
    return 2.0 * m_ * kPi * std::pow(s * s, m_ - 1) * s * c * inv_norm_;
}

double CriticalFamily::d3(double x) const {
    const double s = std::sin(kPi * x);
    const double c = std::cos(kPi * x);
    const double s2 = s * s;
    const double base = m_ >= 2 ? std::pow(s2, m_ - 1) : 1.0;
    return 2.0 * m_ * kPi * kPi * base * ((2.0 * m_ - 1.0) * c * c - s2) * inv_norm_;
}

double CriticalFamily::schwarzian(double x) const {
    const double a = d1(x);
    if (a == 0.0)
        throw DegenerateDerivative("schwarzian: undefined at the critical point");
    const double ratio = d2(x) / a;
    return d3(x) / a - 1.5 * ratio * ratio;
}

LiftPoint lift_eval(const CriticalFamily& fam, double t, LiftPoint x) {
    const double y = fam.f0(x.frac) + t;
    double fl = std::floor(y);
    double fr = y - fl;
    if (fr >= 1.0) {
        fr -= 1.0;
        fl += 1.0;
    }
    return {x.winding + static_cast<long long>(fl), fr};
}

LiftPoint iterate(const CriticalFamily& fam, double t, LiftPoint x, long long n) {
    if (n < 0)
        throw std::invalid_argument("iterate: negative iteration count");
    for (long long i = 0; i < n; ++i)
        x = lift_eval(fam, t, x);
    return x;
}

double derivative_of_iterate(const CriticalFamily& fam, double t, LiftPoint x, long long n) {
    return derivative_of_iterate(FamilyLift{&fam, t}, x, n);
}

double schwarzian_of_iterate(const CriticalFamily& fam, double t, LiftPoint x, long long n) {
    return schwarzian_of_iterate(FamilyLift{&fam, t}, x, n);
}

double nonlinearity_of_iterate(const CriticalFamily& fam, double t, LiftPoint x, long long n) {
    return nonlinearity_of_iterate(FamilyLift{&fam, t}, x, n);
}

double cross_ratio(double a, double b, double c, double d) {
    if (!(a < b && b < c && c < d))
        throw std::invalid_argument("cross_ratio: arguments must be strictly increasing");
    return ((b - a) * (d - c)) / ((c - a) * (d - b));
}

} // namespace ccm
