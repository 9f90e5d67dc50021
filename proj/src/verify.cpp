#include "thetalift/verify.hpp"

#include <random>

#include "thetalift/cm.hpp"
#include "thetalift/cocycle.hpp"
#include "thetalift/hecke.hpp"
#include "thetalift/kronecker.hpp"

namespace thetalift {

namespace {

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    double real(double lo, double hi) {
        return lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    }
    long long integer(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(rng);
    }
    UpperHalfPoint tau() { return UpperHalfPoint(cplx(real(-0.5, 0.5), real(0.75, 1.6))); }
    cplx z() { return cplx(real(0.05, 0.95), real(-0.45, 0.45)); }
    TorsionCoord coord(long long n) {
        return TorsionCoord(Rat(integer(0, n - 1), n), Rat(integer(0, n - 1), n));
    }
    TorsionPoint point(long long n) {
        while (true) {
            TorsionPoint p(coord(n), coord(n));
            if (!p.is_zero()) return p;
        }
    }
    Mat2Q mat(long long bound) {
        while (true) {
            Mat2Q m(Rat(integer(-bound, bound)), Rat(integer(-bound, bound)),
                    Rat(integer(-bound, bound)), Rat(integer(-bound, bound)));
            if (!m.det().is_zero()) return m;
        }
    }
    Mat2Z sl2_word(int len) {
        Mat2Z g{1, 0, 0, 1};
        for (int k = 0; k < len; ++k) {
            long long t = integer(-2, 2);
            g = g * ((k % 2) ? Mat2Z{1, t, 0, 1} : Mat2Z{1, 0, t, 1});
        }
        return g;
    }
};

void record(SuiteReport& rep, double err, double tol) {
    ++rep.cases;
    rep.worst_error = std::max(rep.worst_error, err);
    if (!(err < tol)) ++rep.failures;
}

// true when the nested evaluation of theta[g2 g1] = g2.theta[g1] + theta[g2]
// at x never touches a coordinate stratum in an E1 factor
bool pair_clean(const Mat2Q& g1, const Mat2Q& g2, const TorsionPoint& x) {
    if (!theta_e1_clean(g2 * g1, x) || !theta_e1_clean(g2, x)) return false;
    auto [s, m2] = clear_denominators(g2);
    (void)s;
    for (const auto& q : matrix_preimages(m2, x).points)
        if (!theta_e1_clean(g1, q)) return false;
    return true;
}

// word of det +-1 factors: the telescoped evaluation visits the single
// preimage chain x, g1^-1 x, (g1 g2)^-1 x, ...; clean when nothing there or
// in the closed form hits a stratum
bool word_clean(const std::vector<BruhatFactor>& word, const Mat2Q& prod, const TorsionPoint& x) {
    if (!theta_e1_clean(prod, x)) return false;
    Mat2Q acc;
    for (const auto& f : word) {
        acc = acc * f.matrix();
        auto [s, m] = clear_denominators(acc);
        (void)s;
        if (std::llabs(m.det()) != 1) return false;
        Mat2Z inv = m.adj();
        if (m.det() < 0) inv = Mat2Z{-inv.a, -inv.b, -inv.c, -inv.d};
        TorsionPoint p = apply(inv, x);
        if (p.x1.is_zero() || p.x2.is_zero()) return false;
    }
    return true;
}

SuiteReport suite_parity(std::uint64_t seed, double tol) {
    SuiteReport rep{"parity"};
    Gen gen(seed);
    SeriesParams P;
    for (int k = 0; k < 100; ++k) {
        UpperHalfPoint tau = gen.tau();
        cplx z = gen.z();
        record(rep, std::abs(e1(tau, z, P) + e1(tau, -z, P)), tol);
        record(rep, std::abs(e2(tau, z, P) - e2(tau, -z, P)), tol);
    }
    UpperHalfPoint tau = gen.tau();
    record(rep, std::abs(e1(tau, cplx(0, 0), P)), tol);
    for (auto c : {TorsionCoord(Rat(1, 2), Rat(0)), TorsionCoord(Rat(0), Rat(1, 2)),
                   TorsionCoord(Rat(1, 2), Rat(1, 2))})
        record(rep, std::abs(e1(tau, c, P)), tol);
    // lattice periodicity
    for (int k = 0; k < 10; ++k) {
        UpperHalfPoint t = gen.tau();
        cplx z = gen.z();
        record(rep, std::abs(e1(t, z, P) - e1(t, z + 1.0, P)), tol);
        record(rep, std::abs(e2(t, z, P) - e2(t, z + t.tau, P)), tol);
    }
    return rep;
}

SuiteReport suite_distribution(std::uint64_t seed, double tol) {
    SuiteReport rep{"distribution"};
    Gen gen(seed);
    SeriesParams P;
    for (long long a : {2LL, 3LL}) {
        for (int k = 0; k < 20; ++k) {
            UpperHalfPoint tau = gen.tau();
            Evaluator ev(tau, P);
            long long n = (k % 2) ? 5 : 7;
            TorsionCoord x = gen.coord(n);
            if (x.is_zero()) x = TorsionCoord(Rat(1, n), Rat(0));
            cplx s1 = 0.0, s2 = 0.0;
            for (long long j = 0; j < a; ++j)
                for (long long l = 0; l < a; ++l) {
                    TorsionCoord pre((x.u + Rat(j)) / Rat(a), (x.v + Rat(l)) / Rat(a));
                    s1 += ev.e1(pre);
                    s2 += ev.e2(pre);
                }
            record(rep, std::abs(s1 - static_cast<double>(a) * ev.e1(x)), tol);
            record(rep, std::abs(s2 - ev.e2(x)), tol);
        }
    }
    return rep;
}

SuiteReport suite_dbar(std::uint64_t seed, double tol) {
    SuiteReport rep{"dbar"};
    Gen gen(seed);
    SeriesParams P;
    P.tol = 1e-11;
    const double h = 2e-5;
    for (int k = 0; k < 20; ++k) {
        UpperHalfPoint tau = gen.tau();
        cplx z = gen.z();
        if (lattice_distance(tau, z) < 0.05) { --k; continue; }
        cplx dx = (e2(tau, z + h, P) - e2(tau, z - h, P)) / (2 * h);
        cplx dy = (e2(tau, z + cplx(0, h), P) - e2(tau, z - cplx(0, h), P)) / (2 * h);
        cplx dzbar = 0.5 * (dx + cplx(0, 1) * dy);
        record(rep, std::abs(dzbar - cplx(0, 1) / (2 * tau.y) * e1(tau, z, P)), tol);
    }
    // dbar E1 constant across points, equal to -i/2y
    UpperHalfPoint tau = gen.tau();
    std::vector<cplx> vals;
    for (int k = 0; k < 5; ++k) {
        cplx z = gen.z();
        if (lattice_distance(tau, z) < 0.05) { --k; continue; }
        cplx dx = (e1(tau, z + h, P) - e1(tau, z - h, P)) / (2 * h);
        cplx dy = (e1(tau, z + cplx(0, h), P) - e1(tau, z - cplx(0, h), P)) / (2 * h);
        vals.push_back(0.5 * (dx + cplx(0, 1) * dy));
    }
    for (size_t i = 0; i < vals.size(); ++i)
        for (size_t j = i + 1; j < vals.size(); ++j)
            record(rep, std::abs(vals[i] - vals[j]), tol);
    for (const cplx& v : vals) record(rep, std::abs(v - cplx(0, -1.0 / (2 * tau.y))), tol);
    return rep;
}

SuiteReport suite_cocycle(std::uint64_t seed, double tol, int pairs, int words) {
    SuiteReport rep{"cocycle"};
    Gen gen(seed);
    SeriesParams P;
    UpperHalfPoint tau(cplx(0.23, 1.07));
    Evaluator ev(tau, P);
    int done = 0;
    while (done < pairs) {
        Mat2Q g1 = gen.mat(3), g2 = gen.mat(3);
        TorsionPoint x = gen.point((done % 2) ? 5 : 7);
        if (!pair_clean(g1, g2, x)) continue;
        cplx lhs = theta_gamma(ev, g2 * g1, x);
        PointFn th1 = [&](const TorsionPoint& q) { return theta_gamma(ev, g1, q); };
        cplx rhs = group_act(g2, th1, x) + theta_gamma(ev, g2, x);
        record(rep, std::abs(lhs - rhs), tol);
        ++done;
    }
    // scalar invariance
    for (long long lam : {2LL, 3LL}) {
        Mat2Q g = gen.mat(3);
        TorsionPoint x = gen.point(5);
        Mat2Q scaled(g.a * Rat(lam), g.b * Rat(lam), g.c * Rat(lam), g.d * Rat(lam));
        record(rep, std::abs(theta_gamma(ev, scaled, x) - theta_gamma(ev, g, x)), tol);
    }
    // closed form vs telescoped on random words in the generators
    // S = w diag(1,-1) and T = (1 t; 0 1); every factor has a one-point
    // fiber, and the word is resampled when any partial evaluation point
    // touches a coordinate stratum
    int wdone = 0;
    while (wdone < words) {
        std::vector<BruhatFactor> word;
        Mat2Q prod;
        const int len = 1 + static_cast<int>(gen.integer(0, 5));
        for (int j = 0; j < len; ++j) {
            if (gen.integer(0, 1)) {
                const long long t = gen.integer(-2, 2);
                word.push_back(BruhatFactor::unipotent(Rat(t)));
                prod = prod * Mat2Q(Rat(1), Rat(t), Rat(0), Rat(1));
            } else {
                word.push_back(BruhatFactor::weyl());
                word.push_back(BruhatFactor::diagonal(Rat(1), Rat(-1)));
                prod = prod * Mat2Q(Rat(0), Rat(-1), Rat(1), Rat(0));
            }
        }
        TorsionPoint x = gen.point(5);
        if (!word_clean(word, prod, x)) continue;
        record(rep, std::abs(theta_gamma(ev, prod, x) - theta_telescoped(ev, word, x)), tol);
        ++wdone;
    }
    return rep;
}

SuiteReport suite_modularity(std::uint64_t seed, double tol) {
    SuiteReport rep{"modularity"};
    Gen gen(seed);
    SeriesParams P;
    P.tol = 1e-10;
    // E_k weight-k transformation under small SL2(Z) matrices
    for (int k = 0; k < 12; ++k) {
        UpperHalfPoint tau = gen.tau();
        cplx z = gen.z();
        Mat2Z g = gen.sl2_word(3);
        cplx j = static_cast<double>(g.c) * tau.tau + static_cast<double>(g.d);
        UpperHalfPoint moved((static_cast<double>(g.a) * tau.tau + static_cast<double>(g.b)) / j);
        record(rep, std::abs(e1(moved, z / j, P) - j * e1(tau, z, P)), tol);
        record(rep, std::abs(e2(moved, z / j, P) - j * j * e2(tau, z, P)), tol);
    }
    // weight-2 transformation of tau -> theta_tau[g](x) under substitutions
    // congruent to 1 mod the span of every evaluation denominator
    Mat2Q g(Rat(1), Rat(2), Rat(3), Rat(4));
    TorsionPoint x(TorsionCoord(Rat(1, 5), Rat(0)), TorsionCoord(Rat(2, 5), Rat(1, 5)));
    long long M = 15;  // level 5 times |c| = 3
    for (int k = 0; k < 5; ++k) {
        UpperHalfPoint tau = gen.tau();
        long long t = gen.integer(-1, 1), s = gen.integer(-1, 1);
        Mat2Z sub = Mat2Z{1, t * M, 0, 1} * Mat2Z{1, 0, s * M, 1};
        cplx j = static_cast<double>(sub.c) * tau.tau + static_cast<double>(sub.d);
        UpperHalfPoint moved((static_cast<double>(sub.a) * tau.tau + static_cast<double>(sub.b)) /
                             j);
        Evaluator ev0(tau, P), ev1(moved, P);
        record(rep, std::abs(theta_gamma(ev1, g, x) - j * j * theta_gamma(ev0, g, x)), tol);
    }
    return rep;
}

SuiteReport suite_hecke(std::uint64_t seed, double tol, long long p, long long N) {
    SuiteReport rep{"hecke"};
    rep.has_kappa = true;
    (void)seed;
    SeriesParams P;
    std::vector<Mat2Q> gammas = {Mat2Q(Rat(1), Rat(0), Rat(1), Rat(1)),
                                 Mat2Q(Rat(1), Rat(0), Rat(3), Rat(1)),
                                 Mat2Q(Rat(1), Rat(N), Rat(2), Rat(2 * N + 1))};
    std::vector<UpperHalfPoint> taus = {UpperHalfPoint(cplx(0.3, 1.1)),
                                        UpperHalfPoint(cplx(-0.21, 0.87))};
    TorsionPoint x(TorsionCoord(Rat(0), Rat(0)), TorsionCoord(Rat(1, N), Rat(0)));
    // fit kappa on the first case, then check residuals everywhere
    bool first = true;
    std::vector<long long> ps = (p == 0) ? std::vector<long long>{2, 3} : std::vector<long long>{p};
    for (long long pp : ps)
        for (const auto& tau : taus)
            for (const auto& g : gammas) {
                auto r = verify_equivariance(pp, N, tau, g, x, P);
                if (first && std::abs(r.rhs) > 1e-12) {
                    rep.kappa = r.lhs / r.rhs;
                    first = false;
                }
                record(rep, std::abs(r.lhs - rep.kappa * r.rhs), tol);
            }
    return rep;
}

SuiteReport suite_cusp(std::uint64_t seed, double tol) {
    SuiteReport rep{"cusp"};
    (void)seed;
    SeriesParams P;
    std::vector<double> ladder = {20.0, 50.0, 100.0};
    std::vector<Mat2Q> gs = {Mat2Q(Rat(1), Rat(3), Rat(0), Rat(1)),
                             Mat2Q(Rat(0), Rat(1), Rat(1), Rat(0))};
    std::vector<TorsionPoint> xs = {
        TorsionPoint(TorsionCoord(Rat(1, 5), Rat(2, 5)), TorsionCoord(Rat(3, 5), Rat(1, 5))),
        TorsionPoint(TorsionCoord(Rat(2, 7), Rat(1, 7)), TorsionCoord(Rat(1, 7), Rat(3, 7)))};
    std::vector<cplx> constants;
    for (const auto& g : gs)
        for (const auto& x : xs) {
            auto r = cusp_degeneration(g, x, ladder, P);
            for (size_t i = 1; i < r.ratios.size(); ++i)
                record(rep, std::abs(r.ratios[i] - r.ratios[i - 1]), tol);
            constants.push_back(r.constant);
        }
    for (size_t i = 1; i < constants.size(); ++i)
        record(rep, std::abs(constants[i] - constants[0]), tol);
    return rep;
}

SuiteReport suite_cm(std::uint64_t seed, double tol, int pairs) {
    SuiteReport rep{"cm"};
    Gen gen(seed);
    SeriesParams P;
    UpperHalfPoint ti = UpperHalfPoint::from_cm(0, -1);
    CMContext ctx(ti);
    Evaluator ev(ti, P);
    // restriction to integer matrices
    for (int k = 0; k < 10; ++k) {
        Mat2Q g = gen.mat(3);
        auto [s, m] = clear_denominators(g);
        (void)s;
        Mat2O go{OrderElem{m.a, 0}, OrderElem{m.b, 0}, OrderElem{m.c, 0}, OrderElem{m.d, 0}};
        TorsionPoint x = gen.point(5);
        record(rep, std::abs(theta_gamma_cm(ev, ctx, go, x) - theta_gamma(ev, m.to_q(), x)), tol);
    }
    // CM cocycle identity over Z[i]
    auto rnd_oe = [&]() { return OrderElem{gen.integer(-2, 2), gen.integer(-2, 2)}; };
    int done = 0;
    while (done < pairs) {
        Mat2O g1{rnd_oe(), rnd_oe(), rnd_oe(), rnd_oe()};
        Mat2O g2{rnd_oe(), rnd_oe(), rnd_oe(), rnd_oe()};
        if (ctx.norm(g1.det(ctx)) == 0 || ctx.norm(g2.det(ctx)) == 0) continue;
        Mat2O g21 = mul(ctx, g2, g1);
        TorsionPoint x = gen.point(5);
        bool clean = theta_e1_clean_cm(ctx, g21, x) && theta_e1_clean_cm(ctx, g2, x);
        if (clean)
            for (const auto& q : matrix_preimages_cm(ctx, g2, x))
                if (!theta_e1_clean_cm(ctx, g1, q)) {
                    clean = false;
                    break;
                }
        if (!clean) continue;
        cplx lhs = theta_gamma_cm(ev, ctx, g21, x);
        PointFn th1 = [&](const TorsionPoint& q) { return theta_gamma_cm(ev, ctx, g1, q); };
        cplx rhs = group_act_cm(ev, ctx, g2, th1, x) + theta_gamma_cm(ev, ctx, g2, x);
        record(rep, std::abs(lhs - rhs), tol);
        ++done;
    }
    return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"parity", "distribution", "dbar", "cocycle", "modularity", "hecke", "cusp", "cm"};
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, double tol, long long p,
                      long long N) {
    if (name == "parity") return suite_parity(seed, tol > 0 ? tol : 1e-8);
    if (name == "distribution") return suite_distribution(seed, tol > 0 ? tol : 1e-7);
    if (name == "dbar") return suite_dbar(seed, tol > 0 ? tol : 1e-5);
    if (name == "cocycle") return suite_cocycle(seed, tol > 0 ? tol : 1e-6, 30, 30);
    if (name == "modularity") return suite_modularity(seed, tol > 0 ? tol : 1e-6);
    if (name == "hecke") return suite_hecke(seed, tol > 0 ? tol : 1e-4, p, N);
    if (name == "cusp") return suite_cusp(seed, tol > 0 ? tol : 1e-3);
    if (name == "cm") return suite_cm(seed, tol > 0 ? tol : 1e-6, 20);
    throw DomainError("unknown suite '" + name + "'");
}

}  // namespace thetalift
