#include "thetalift/kronecker.hpp"

#include <cmath>

#include "thetalift/gammafn.hpp"

namespace thetalift {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

// z = alpha - tau*beta with real alpha, beta.
void lattice_coords(const UpperHalfPoint& tau, cplx z, double& alpha, double& beta) {
    beta = -z.imag() / tau.y;
    alpha = z.real() + beta * tau.tau.real();
}

// Visit all w = m + n*tau + z with |w| <= radius.
template <typename F>
void scan_disk(const UpperHalfPoint& tau, cplx z, double radius, F&& fn) {
    const double x = tau.tau.real(), y = tau.y;
    const long long nlo = static_cast<long long>(std::floor((-radius - z.imag()) / y)) - 1;
    const long long nhi = static_cast<long long>(std::ceil((radius - z.imag()) / y)) + 1;
    for (long long n = nlo; n <= nhi; ++n) {
        const double im = n * y + z.imag();
        if (std::abs(im) > radius) continue;
        const double half = std::sqrt(std::max(radius * radius - im * im, 0.0));
        const double re0 = n * x + z.real();
        const long long mlo = static_cast<long long>(std::floor(-half - re0)) - 1;
        const long long mhi = static_cast<long long>(std::ceil(half - re0)) + 1;
        for (long long m = mlo; m <= mhi; ++m) {
            const cplx w(re0 + m, im);
            if (std::abs(w) <= radius) fn(m, n, w);
        }
    }
}

double cell_diameter(const UpperHalfPoint& tau) { return 1.0 + std::abs(tau.tau); }

}  // namespace

double lattice_distance(const UpperHalfPoint& tau, cplx z) {
    double alpha, beta;
    lattice_coords(tau, z, alpha, beta);
    const double a0 = std::round(alpha), b0 = std::round(beta);
    double best = 1e300;
    for (int da = -1; da <= 1; ++da)
        for (int db = -1; db <= 1; ++db) {
            const cplx d = cplx(alpha - (a0 + da), 0.0) - tau.tau * (beta - (b0 + db));
            best = std::min(best, std::abs(d));
        }
    return best;
}

bool on_lattice(const UpperHalfPoint& tau, cplx z, double eps) {
    return lattice_distance(tau, z) < eps;
}

EvalResult k_direct(const UpperHalfPoint& tau, const KroneckerArgs& args,
                    const SeriesParams& params) {
    params.validate();
    const int a = args.a;
    const double sigma = args.s.real();
    const double decay = 2.0 * sigma - a - 2.0;  // tail exponent
    if (sigma + 1e-12 < 1.0 + 0.5 * a + 0.5)
        throw NonConvergent("k_direct needs Re s >= 1 + a/2 + 1/2, got Re s = " +
                            std::to_string(sigma));

    const double y = tau.y;
    const double D = cell_diameter(tau);
    // shell-count bound: lattice points with |w| in [r, r+dr) number at most
    // ~ 2 pi (r + D) dr / y, so the tail past R is below
    // (2 pi / y) * (1 + 2D/R) * R^(2-2s+a) / decay
    auto tail_bound = [&](double R) {
        return kTwoPi / y * (1.0 + 2.0 * D / R) * std::pow(R, -decay) / decay * 1.5;
    };
    double R = 10.0;
    while (tail_bound(R) > params.tol && R <= params.max_radius) R *= 1.12;
    if (R > params.max_radius)
        throw RadiusExceeded("k_direct needs radius " + std::to_string(R) +
                             " > max_radius for tol");

    const bool twisted = std::abs(args.u_char) > 0;
    const cplx ubar = std::conj(args.u_char);
    cplx sum = 0.0;
    scan_disk(tau, args.z, R, [&](long long m, long long n, cplx w) {
        const double aw = std::abs(w);
        if (aw < 1e-12) return;  // omitted term at w + z = 0
        cplx num = 1.0;
        const cplx wb = std::conj(w);
        for (int k = 0; k < a; ++k) num *= wb;
        cplx term = num * std::exp(-args.s * std::log(aw * aw));
        if (twisted) {
            const cplx omega = cplx(static_cast<double>(m), 0.0) + tau.tau * static_cast<double>(n);
            term *= std::polar(1.0, kTwoPi * std::imag(omega * ubar) / y);
        }
        sum += term;
    });
    return {sum, tail_bound(R)};
}

EvalResult k_continued(const UpperHalfPoint& tau, const KroneckerArgs& args,
                       const SeriesParams& params) {
    params.validate();
    const int a = args.a;
    const cplx s = args.s;
    const double y = tau.y;
    const double lam = params.split;
    const bool z_on_lat = on_lattice(tau, args.z);
    const bool u_on_lat = std::abs(args.u_char) < 1e-12 || on_lattice(tau, args.u_char);

    if (a == 0 && z_on_lat && std::abs(s) < 1e-12)
        throw PoleError("K_0 at s = 0 with z in the lattice");
    if (a == 0 && u_on_lat && std::abs(s - 1.0) < 1e-12)
        throw PoleError("K_0 at s = 1 with u in the lattice");

    const double sigma = s.real();
    const double D = cell_diameter(tau);
    const cplx rg = recip_gamma(s);

    // --- direct side: Gamma(s, lam |w|^2) terms ---
    auto tail_u = [&](double R) {
        // |Gamma(s,x)| <~ 2 x^(sigma-1) e^-x for x past sigma, so terms decay
        // like |w|^(a-2) lam^(sigma-1) e^(-lam |w|^2)
        const double x = lam * R * R;
        if (x < std::abs(s) + 4.0) return 1e300;
        return kTwoPi / y * (1.0 + 2.0 * D / R) * 3.0 * std::pow(lam, sigma - 1.0) *
               std::pow(R, a > 2 ? a - 2 : 0) * std::exp(-x) / (2.0 * lam) * std::abs(rg);
    };
    double RU = std::sqrt((std::abs(s) + 6.0) / lam) + 2.0;
    while (tail_u(RU) > 0.25 * params.tol && RU <= params.max_radius) RU += 0.5;
    if (RU > params.max_radius) throw RadiusExceeded("k_continued direct side");

    const bool twisted = std::abs(args.u_char) > 1e-12;
    const cplx ubar = std::conj(args.u_char);
    cplx usum = 0.0;
    scan_disk(tau, args.z, RU, [&](long long m, long long n, cplx w) {
        const double aw = std::abs(w);
        if (aw < 1e-12) return;  // omitted
        cplx num = 1.0;
        const cplx wb = std::conj(w);
        for (int k = 0; k < a; ++k) num *= wb;
        cplx term = num * std::exp(-s * std::log(aw * aw)) * upper_gamma(s, lam * aw * aw);
        if (twisted) {
            const cplx omega = cplx(static_cast<double>(m), 0.0) + tau.tau * static_cast<double>(n);
            term *= std::polar(1.0, kTwoPi * std::imag(omega * ubar) / y);
        }
        usum += term;
    });

    // --- dual side: Gamma(a+1-s, pi^2 |eta|^2 / lam), eta = (i/y)(w0 - u) ---
    const cplx sp = cplx(static_cast<double>(a) + 1.0, 0.0) - s;
    auto tail_h = [&](double R) {
        const double eta = R / y;
        const double x = kPi * kPi * eta * eta / lam;
        if (x < std::abs(sp) + 4.0) return 1e300;
        return kTwoPi / y * (1.0 + 2.0 * D / R) * 3.0 * std::pow(kPi * eta, a) *
               std::pow(kPi * kPi * eta * eta, sigma - a - 1.0) * std::exp(-x) * kPi / y *
               std::abs(rg) * (y * y * lam / (kPi * kPi));
    };
    double RH = y * std::sqrt(lam * (std::abs(sp) + 6.0)) / kPi + 2.0;
    while (tail_h(RH) > 0.25 * params.tol && RH <= params.max_radius) RH += 0.5;
    if (RH > params.max_radius) throw RadiusExceeded("k_continued dual side");

    cplx hsum = 0.0;
    scan_disk(tau, -args.u_char, RH, [&](long long, long long, cplx w0mu) {
        // w0mu = w0 - u over the lattice
        if (std::abs(w0mu) < 1e-12) return;  // eta = 0 handled by the pole term
        const cplx eta = cplx(0.0, 1.0) * w0mu / y;
        const cplx etab = std::conj(eta);
        cplx num = 1.0;
        for (int k = 0; k < a; ++k) num *= cplx(0.0, -kPi) * etab;
        const double n2 = kPi * kPi * std::norm(eta);
        cplx term = num * std::exp((s - static_cast<double>(a) - 1.0) * std::log(n2)) *
                    upper_gamma(sp, n2 / lam);
        term *= std::polar(1.0, kTwoPi * std::real(args.z * etab));
        hsum += term;
    });

    cplx val = rg * usum + (kPi / y) * rg * hsum;
    if (a == 0 && z_on_lat) {
        // the w = 0 term completed for Poisson summation is removed again
        cplx chi = 1.0;
        if (twisted) {
            // omega = -z is the lattice point hit
            chi = std::polar(1.0, kTwoPi * std::imag(-args.z * ubar) / y);
        }
        val -= chi * std::exp(s * std::log(lam)) * recip_gamma(s + 1.0);
    }
    if (a == 0 && u_on_lat) {
        val += (kPi / y) * std::exp((s - 1.0) * std::log(lam)) / (s - 1.0) * rg;
    }
    return {val, 0.5 * params.tol};
}

cplx e1(const UpperHalfPoint& tau, cplx z, const SeriesParams& params) {
    const double d = lattice_distance(tau, z);
    if (d < 1e-12) return 0.0;  // E1 vanishes on the lattice by oddness
    if (d < 1e-6)
        throw SingularEvaluation("E1 requested within 1e-6 of a lattice point (log pole)");
    KroneckerArgs args{1, 1.0, z, 0.0};
    return cplx(0.0, 1.0) / kTwoPi * k_continued(tau, args, params).value;
}

cplx e2(const UpperHalfPoint& tau, cplx z, const SeriesParams& params) {
    KroneckerArgs args{2, 1.0, z, 0.0};
    return -1.0 / (2.0 * kTwoPi * tau.y) * k_continued(tau, args, params).value;
}

cplx e1(const UpperHalfPoint& tau, const TorsionCoord& x, const SeriesParams& params) {
    if (x.is_zero()) return 0.0;
    KroneckerArgs args{1, 1.0, embed(x, tau), 0.0};
    return cplx(0.0, 1.0) / kTwoPi * k_continued(tau, args, params).value;
}

cplx e2(const UpperHalfPoint& tau, const TorsionCoord& x, const SeriesParams& params) {
    KroneckerArgs args{2, 1.0, embed(x, tau), 0.0};
    return -1.0 / (2.0 * kTwoPi * tau.y) * k_continued(tau, args, params).value;
}

Rat periodic_bernoulli(int k, const Rat& t) {
    const Rat tr = t.mod1();
    if (k == 1) {
        if (tr.is_zero()) return Rat(0);
        return tr - Rat(1, 2);
    }
    if (k == 2) return tr * tr - tr + Rat(1, 6);
    throw DomainError("periodic_bernoulli supports k in {1, 2}");
}

cplx Evaluator::e1(const TorsionCoord& x) const {
    Key key{1, x.u.num, x.u.den, x.v.num, x.v.den};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    cplx v = thetalift::e1(tau_, x, params_);
    cache_.emplace(key, v);
    return v;
}

cplx Evaluator::e2(const TorsionCoord& x) const {
    Key key{2, x.u.num, x.u.den, x.v.num, x.v.den};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    cplx v = thetalift::e2(tau_, x, params_);
    cache_.emplace(key, v);
    return v;
}

}  // namespace thetalift
