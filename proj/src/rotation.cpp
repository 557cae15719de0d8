#include "ccm/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace ccm {

namespace {

long long to_ll(const BigInt& v) { return v.convert_to<long long>(); }

/// g(x) = f_t^q(x) - x - p, equivariant in x (any real argument is fine).
double gap_value(const CriticalFamily& fam, double t, double x, long long q, long long p) {
    LiftPoint y = iterate(fam, t, LiftPoint::from_value(x), q);
    return (static_cast<double>(y.winding - p) + y.frac) - x;
}

/// Ternary refinement of a bracket around a grid extremum. sign = +1 seeks a
/// maximum, -1 a minimum. Returns the refined extremal value.
double refine_extremum(const CriticalFamily& fam, double t, long long q, long long p, double a,
                       double b, int sign, const RotationOptions& opt) {
    int iters = 0;
    while (b - a > opt.x_tol) {
        if (++iters > opt.max_bisect)
            throw ResolutionExceeded("compare_to_rational: extremum bracket failed to converge");
        const double m1 = a + (b - a) / 3.0;
        const double m2 = b - (b - a) / 3.0;
        const double f1 = sign * gap_value(fam, t, m1, q, p);
        const double f2 = sign * gap_value(fam, t, m2, q, p);
        if (f1 < f2)
            a = m1;
        else
            b = m2;
    }
    return gap_value(fam, t, 0.5 * (a + b), q, p);
}

} // namespace

BirkhoffEstimate birkhoff_rotation_number(const CriticalFamily& fam, double t, long long n_iter) {
    if (n_iter < 1)
        throw std::invalid_argument("birkhoff_rotation_number: n_iter must be >= 1");
    LiftPoint x = iterate(fam, t, LiftPoint{0, 0.0}, n_iter);
    return {x.value() / static_cast<double>(n_iter), 1.0 / static_cast<double>(n_iter)};
}

Comparison compare_to_rational(const CriticalFamily& fam, double t, const Rational& pq,
                               const RotationOptions& opt) {
    if (pq.den() > opt.q_max)
        throw std::invalid_argument("compare_to_rational: denominator exceeds configured q_max");
    const long long q = to_ll(pq.den());
    const long long p = to_ll(pq.num());
    const long long grid = std::max<long long>(64, 8 * q);

    std::vector<double> vals(static_cast<std::size_t>(grid));
    bool seen_pos = false, seen_neg = false;
    for (long long i = 0; i < grid; ++i) {
        const double g = gap_value(fam, t, static_cast<double>(i) / grid, q, p);
        if (g == 0.0)
            return Comparison::Locked; // exact periodic point on the grid
        vals[static_cast<std::size_t>(i)] = g;
        seen_pos |= g > 0.0;
        seen_neg |= g < 0.0;
        if (seen_pos && seen_neg)
            return Comparison::Locked;
    }

    // One-signed on the grid: certify the extremum on the other side.
    const int sign = seen_neg ? +1 : -1; // refine maxima if all negative
    double best = sign > 0 ? -std::numeric_limits<double>::infinity()
                           : std::numeric_limits<double>::infinity();
    double max_adj = 0.0;
    for (long long i = 0; i < grid; ++i) {
        const double cur = vals[static_cast<std::size_t>(i)];
        max_adj = std::max(max_adj, std::abs(vals[static_cast<std::size_t>((i + 1) % grid)] - cur));
        if (sign > 0)
            best = std::max(best, cur);
        else
            best = std::min(best, cur);
    }
    const double slack = 4.0 * max_adj;
    double certified = best;
    for (long long i = 0; i < grid; ++i) {
        const double cur = vals[static_cast<std::size_t>(i)];
        const double prev = vals[static_cast<std::size_t>((i + grid - 1) % grid)];
        const double next = vals[static_cast<std::size_t>((i + 1) % grid)];
        const bool local_ext = sign > 0 ? (cur >= prev && cur >= next) : (cur <= prev && cur <= next);
        if (!local_ext)
            continue;
        if (sign > 0 ? (cur < best - slack) : (cur > best + slack))
            continue;
        const double a = static_cast<double>(i - 1) / grid;
        const double b = static_cast<double>(i + 1) / grid;
        const double refined = refine_extremum(fam, t, q, p, a, b, sign, opt);
        certified = sign > 0 ? std::max(certified, refined) : std::min(certified, refined);
        if ((sign > 0 && certified >= 0.0) || (sign < 0 && certified <= 0.0))
            return Comparison::Locked;
    }
    if (sign > 0)
        return certified < 0.0 ? Comparison::Below : Comparison::Locked;
    return certified > 0.0 ? Comparison::Above : Comparison::Locked;
}

double center(const CriticalFamily& fam, const Rational& pq, const RotationOptions& opt) {
    if (pq.den() > opt.q_max)
        throw std::invalid_argument("center: denominator exceeds configured q_max");
    const long long q = to_ll(pq.den());
    const double p = static_cast<double>(to_ll(pq.num()));
    auto h = [&](double t) { return iterate(fam, t, LiftPoint{0, 0.0}, q).value() - p; };
    double a = 0.0, b = 1.0;
    const double ha = h(a);
    if (ha == 0.0)
        return a;
    if (h(b) == 0.0)
        return b;
    int iters = 0;
    while (b - a > opt.center_tol) {
        if (++iters > opt.max_bisect)
            break;
        const double m = 0.5 * (a + b);
        const double hm = h(m);
        if (hm == 0.0)
            return m;
        if (hm < 0.0)
            a = m;
        else
            b = m;
    }
    return 0.5 * (a + b);
}

namespace {

/// Locates the transition to `target` classification on one side of the
/// center: doubling walk to bracket, then bisection. Returns the outer
/// (certified target) end of the final bracket, so the pair of boundaries is
/// an outer hull of the true locking interval.
double boundary(const CriticalFamily& fam, const Rational& pq, double c, int side, double tol,
                const RotationOptions& opt) {
    const Comparison target = side > 0 ? Comparison::Above : Comparison::Below;
    double d = std::max(tol, 1e-12);
    int walks = 0;
    while (compare_to_rational(fam, c + side * d, pq, opt) != target) {
        d *= 2.0;
        if (++walks > 80)
            throw ResolutionExceeded("locking_interval: failed to bracket a boundary");
    }
    double inner = walks == 0 ? c : c + side * (d / 2.0); // last probe not yet `target`
    double outer = c + side * d;
    int iters = 0;
    while (std::abs(outer - inner) > tol) {
        if (++iters > opt.max_bisect)
            throw ResolutionExceeded("locking_interval: boundary bisection failed to converge");
        const double m = 0.5 * (inner + outer);
        if (compare_to_rational(fam, m, pq, opt) == target)
            outer = m;
        else
            inner = m;
    }
    return outer;
}

} // namespace

std::pair<double, double> locking_interval(const CriticalFamily& fam, const Rational& pq,
                                           double tol, const RotationOptions& opt) {
    if (tol <= 0.0)
        throw std::invalid_argument("locking_interval: tol must be positive");
    const double c = center(fam, pq, opt);
    return {boundary(fam, pq, c, -1, tol, opt), boundary(fam, pq, c, +1, tol, opt)};
}

Tongue compute_tongue(const CriticalFamily& fam, const Rational& pq, double tol,
                      const RotationOptions& opt) {
    Tongue tongue;
    tongue.rho = pq;
    tongue.center = center(fam, pq, opt);
    tongue.t_lo = boundary(fam, pq, tongue.center, -1, tol, opt);
    tongue.t_hi = boundary(fam, pq, tongue.center, +1, tol, opt);
    tongue.tol = tol;
    return tongue;
}

HarmonicCode param_harmonic_code(const CriticalFamily& fam, double t, int depth,
                                 const RotationOptions& opt, const FareyLimits& limits) {
    if (depth < 1)
        throw std::invalid_argument("param_harmonic_code: depth must be >= 1");
    HarmonicCode code;
    FareyDomain domain{Rational(0, 1), Rational(1, 1)};
    for (int level = 0; level < depth; ++level) {
        const Comparison at_mediant = compare_to_rational(fam, t, harmonic_endpoint(domain, 0, limits), opt);
        if (at_mediant == Comparison::Locked) {
            code.endpoint = 0;
            return code;
        }
        long long pick = 0;
        if (at_mediant == Comparison::Below) {
            // rho below the mediant: scan cells accumulating at the lower endpoint.
            for (long long k = 1;; ++k) {
                if (k > limits.max_pick)
                    throw ResolutionExceeded("param_harmonic_code: pick limit hit near lower endpoint");
                const Comparison c = compare_to_rational(fam, t, harmonic_endpoint(domain, k, limits), opt);
                if (c == Comparison::Locked) {
                    code.endpoint = k;
                    return code;
                }
                if (c == Comparison::Above) { // u_k < rho < u_{k-1}
                    pick = k - 1;
                    break;
                }
            }
        } else {
            for (long long k = -1;; --k) {
                if (-k > limits.max_pick)
                    throw ResolutionExceeded("param_harmonic_code: pick limit hit near upper endpoint");
                const Comparison c = compare_to_rational(fam, t, harmonic_endpoint(domain, k, limits), opt);
                if (c == Comparison::Locked) {
                    code.endpoint = k;
                    return code;
                }
                if (c == Comparison::Below) { // u_{k+1} < rho < u_k
                    pick = k;
                    break;
                }
            }
        }
        code.picks.push_back(pick);
        domain = harmonic_refine(domain, pick, limits);
    }
    return code;
}

std::vector<long long> closest_returns_dynamical(const CriticalFamily& fam, double t, int count,
                                                 long long max_iter) {
    return closest_returns([&](LiftPoint x) { return lift_eval(fam, t, x); }, count, max_iter);
}

double backward_point(const CriticalFamily& fam, double t, long long k, const RotationOptions& opt) {
    if (k < 0)
        throw std::invalid_argument("backward_point: negative step count");
    if (k == 0)
        return 1.0;
    const double at_zero = iterate(fam, t, LiftPoint{0, 0.0}, k).value();
    const double target = std::floor(at_zero) + 1.0;
    auto h = [&](double y) { return iterate(fam, t, LiftPoint{0, y}, k).value() - target; };
    double a = 0.0, b = 1.0;
    if (h(b) <= 0.0)
        return 1.0; // orbit of 0 lands exactly on the lattice
    int iters = 0;
    while (b - a > opt.x_tol) {
        if (++iters > opt.max_bisect)
            break;
        const double m = 0.5 * (a + b);
        const double hm = h(m);
        if (hm == 0.0)
            return m;
        if (hm < 0.0)
            a = m;
        else
            b = m;
    }
    return 0.5 * (a + b);
}

double ParamDerivativeReport::spread() const {
    double lo = std::min(chain_min, fd_min);
    double hi = std::max(chain_max, fd_max);
    if (proxy_min) {
        lo = std::min(lo, *proxy_min);
        hi = std::max(hi, *proxy_max);
    }
    if (lo <= 0.0)
        return std::numeric_limits<double>::infinity();
    return hi / lo;
}

ParamDerivativeReport param_derivative_report(const CriticalFamily& fam, const FareyDomain& domain,
                                              int samples, std::uint64_t seed,
                                              const RotationOptions& opt) {
    if (samples < 1)
        throw std::invalid_argument("param_derivative_report: need at least one sample");
    const long long Q = to_ll(domain.lo().den());
    const long long Qp = to_ll(domain.hi().den());
    const long long q = std::llabs(Qp - Q);

    // t ranges from the lower extreme of the lower endpoint's locking to the
    // lower boundary of the upper endpoint's locking.
    const double tol = 1e-10;
    const double t_from = locking_interval(fam, domain.lo(), tol, opt).first;
    const double t_to = locking_interval(fam, domain.hi(), tol, opt).first;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.05, 0.95);

    ParamDerivativeReport report;
    report.chain_min = report.fd_min = std::numeric_limits<double>::infinity();
    report.chain_max = report.fd_max = -std::numeric_limits<double>::infinity();
    double proxy_lo = std::numeric_limits<double>::infinity();
    double proxy_hi = -std::numeric_limits<double>::infinity();

    for (int s = 0; s < samples; ++s) {
        const double t = t_from + (t_to - t_from) * unit(rng);
        const double x_max = backward_point(fam, t, q + Q, opt);
        const double x = x_max * unit(rng);

        // Orbit out to Q + q with suffix derivative products.
        const long long horizon = Q + q;
        std::vector<LiftPoint> orbit(static_cast<std::size_t>(horizon) + 1);
        orbit[0] = LiftPoint{0, x};
        for (long long i = 0; i < horizon; ++i)
            orbit[static_cast<std::size_t>(i) + 1] = lift_eval(fam, t, orbit[static_cast<std::size_t>(i)]);

        std::vector<double> suffix(static_cast<std::size_t>(Q) + 1, 1.0);
        for (long long j = Q - 1; j >= 0; --j)
            suffix[static_cast<std::size_t>(j)] =
                suffix[static_cast<std::size_t>(j) + 1] * fam.d1(orbit[static_cast<std::size_t>(j)].frac);

        double chain = 0.0;
        for (long long i = 1; i <= Q; ++i)
            chain += suffix[static_cast<std::size_t>(i)];

        const double h = 1e-6;
        const double plus = iterate(fam, t + h, LiftPoint{0, x}, Q).value();
        const double minus = iterate(fam, t - h, LiftPoint{0, x}, Q).value();
        const double fd = (plus - minus) / (2.0 * h);

        report.chain_min = std::min(report.chain_min, chain);
        report.chain_max = std::max(report.chain_max, chain);
        report.fd_min = std::min(report.fd_min, fd);
        report.fd_max = std::max(report.fd_max, fd);
        report.max_chain_fd_rel_dev =
            std::max(report.max_chain_fd_rel_dev, std::abs(chain - fd) / std::max(std::abs(fd), 1e-30));

        if (q > 0) {
            const double num = std::abs(orbit[static_cast<std::size_t>(q + Q)].value() -
                                        orbit[static_cast<std::size_t>(Q)].value());
            double proxy = 0.0;
            for (long long i = 1; i <= Q; ++i) {
                const double gap = std::abs(orbit[static_cast<std::size_t>(i)].value() -
                                            orbit[static_cast<std::size_t>(i + q)].value());
                if (gap < 1e-15)
                    throw DegenerateDerivative("param_derivative_report: orbit gap below 1e-15");
                proxy += num / gap;
            }
            proxy_lo = std::min(proxy_lo, proxy);
            proxy_hi = std::max(proxy_hi, proxy);
        }
    }
    if (q > 0) {
        report.proxy_min = proxy_lo;
        report.proxy_max = proxy_hi;
    }
    report.samples = samples;
    return report;
}

} // namespace ccm
