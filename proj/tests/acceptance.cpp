// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned in code; runtimes for the heavy criteria
// are reported and bounded.

#include <chrono>
#include <cstdio>
#include <random>

#include "thetalift/cm.hpp"
#include "thetalift/cocycle.hpp"
#include "thetalift/hecke.hpp"
#include "thetalift/verify.hpp"

using namespace thetalift;

namespace {

int failures = 0;

void report(int id, const char* name, bool pass, double worst, double limit, double secs = -1) {
    if (secs >= 0)
        std::printf("[%s] criterion %2d: %-22s worst %.3e (limit %.0e)  [%.1fs]\n",
                    pass ? "PASS" : "FAIL", id, name, worst, limit, secs);
    else
        std::printf("[%s] criterion %2d: %-22s worst %.3e (limit %.0e)\n",
                    pass ? "PASS" : "FAIL", id, name, worst, limit);
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}
    double real(double lo, double hi) {
        return lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    }
    long long integer(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(rng);
    }
};

// 1. series consistency in the overlap region
void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    Gen gen(101);
    SeriesParams P;
    P.tol = 1e-9;
    double worst = 0;
    for (int k = 0; k < 50; ++k) {
        const int a = k % 3;
        UpperHalfPoint tau(cplx(gen.real(-0.5, 0.5), gen.real(0.8, 1.6)));
        KroneckerArgs args;
        args.a = a;
        // inside Re s >= 2.5, with margin so the direct tail reaches 1e-9
        args.s = cplx(2.5 + 0.5 * a + 0.2 + gen.real(0.0, 2.0), gen.real(-0.3, 0.3));
        args.z = cplx(gen.real(0.05, 0.95), gen.real(-0.45, 0.45));
        args.u_char = (k % 2) ? cplx(gen.real(0, 1), gen.real(0, 1)) : cplx(0, 0);
        auto d = k_direct(tau, args, P);
        auto c = k_continued(tau, args, P);
        worst = std::max(worst, std::abs(d.value - c.value));
    }
    double secs = seconds_since(t0);
    report(1, "series consistency", worst < 1e-8 && secs < 30.0, worst, 1e-8, secs);
}

void criterion2() {
    auto rep = run_suite("parity", 7, 1e-8);
    report(2, "parity and zero", rep.passed(), rep.worst_error, 1e-8);
}

void criterion3() {
    auto rep = run_suite("distribution", 7, 1e-7);
    report(3, "distribution relations", rep.passed(), rep.worst_error, 1e-7);
}

void criterion4() {
    auto rep = run_suite("dbar", 7, 1e-5);
    report(4, "differential relations", rep.passed(), rep.worst_error, 1e-5);
}

void criterion5() {
    Gen gen(505);
    bool pass = true;
    int done = 0;
    while (done < 1000) {
        auto r = [&] { return Rat(gen.integer(-9, 9), gen.integer(1, 4)); };
        Mat2Q g(r(), r(), r(), r());
        if (g.det().is_zero()) continue;
        if (!(bruhat_factor(g).product() == g)) pass = false;
        ++done;
    }
    report(5, "bruhat exactness", pass, pass ? 0.0 : 1.0, 0);
}

void criterion6() {
    auto t0 = std::chrono::steady_clock::now();
    auto rep = run_suite("cocycle", 7, 1e-6);
    // full scale: 100 identity pairs and 100 telescoped words
    SeriesParams P;
    UpperHalfPoint tau(cplx(0.23, 1.07));
    Evaluator ev(tau, P);
    Gen gen(606);
    double worst = rep.worst_error;
    int done = 0;
    while (done < 70) {  // suite ran 30 pairs; total 100
        auto r = [&] { return Rat(gen.integer(-3, 3)); };
        Mat2Q g1(r(), r(), r(), r()), g2(r(), r(), r(), r());
        if (g1.det().is_zero() || g2.det().is_zero()) continue;
        long long n = (done % 2) ? 5 : 7;
        TorsionPoint x(TorsionCoord(Rat(gen.integer(0, n - 1), n), Rat(gen.integer(0, n - 1), n)),
                       TorsionCoord(Rat(gen.integer(0, n - 1), n), Rat(gen.integer(0, n - 1), n)));
        if (x.is_zero()) continue;
        bool clean = theta_e1_clean(g2 * g1, x) && theta_e1_clean(g2, x);
        auto [s, m2] = clear_denominators(g2);
        (void)s;
        if (clean)
            for (const auto& q : matrix_preimages(m2, x).points)
                if (!theta_e1_clean(g1, q)) { clean = false; break; }
        if (!clean) continue;
        cplx lhs = theta_gamma(ev, g2 * g1, x);
        PointFn th1 = [&](const TorsionPoint& q) { return theta_gamma(ev, g1, q); };
        cplx rhs = group_act(g2, th1, x) + theta_gamma(ev, g2, x);
        worst = std::max(worst, std::abs(lhs - rhs));
        ++done;
    }
    // 70 more closed-vs-telescoped words in S and T (suite ran 30; total 100)
    int wdone = 0;
    while (wdone < 70) {
        std::vector<BruhatFactor> word;
        Mat2Q prod;
        const int len = 1 + (int)gen.integer(0, 5);
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
        TorsionPoint x(TorsionCoord(Rat(gen.integer(0, 4), 5), Rat(gen.integer(0, 4), 5)),
                       TorsionCoord(Rat(gen.integer(0, 4), 5), Rat(gen.integer(0, 4), 5)));
        if (x.is_zero()) continue;
        // resample when a partial evaluation point sits on a stratum
        bool clean = theta_e1_clean(prod, x);
        Mat2Q acc;
        for (const auto& f : word) {
            if (!clean) break;
            acc = acc * f.matrix();
            auto [s, m] = clear_denominators(acc);
            (void)s;
            Mat2Z inv = m.adj();
            if (m.det() < 0) inv = Mat2Z{-inv.a, -inv.b, -inv.c, -inv.d};
            TorsionPoint p = apply(inv, x);
            if (p.x1.is_zero() || p.x2.is_zero()) clean = false;
        }
        if (!clean) continue;
        cplx closed = theta_gamma(ev, prod, x);
        cplx tele = theta_telescoped(ev, word, x);
        worst = std::max(worst, std::abs(closed - tele));
        ++wdone;
    }
    double secs = seconds_since(t0);
    report(6, "cocycle identity", rep.passed() && worst < 1e-6 && secs < 300.0, worst, 1e-6, secs);
}

void criterion7() {
    SeriesParams P;
    UpperHalfPoint tau(cplx(0.23, 1.07));
    Evaluator ev(tau, P);
    Gen gen(707);
    double worst = 0;
    int done = 0;
    while (done < 10) {
        Mat2Z g{1, 0, 0, 1};
        for (int j = 0; j < 4; ++j) {
            long long t = gen.integer(-2, 2);
            g = g * ((j % 2) ? Mat2Z{1, t, 0, 1} : Mat2Z{1, 0, t, 1});
        }
        if (g.c == 0) continue;
        long long n = (done % 2) ? 5 : 7;
        TorsionPoint x0(TorsionCoord(Rat(gen.integer(0, n - 1), n), Rat(gen.integer(0, n - 1), n)),
                        TorsionCoord(Rat(gen.integer(0, n - 1), n), Rat(gen.integer(0, n - 1), n)));
        if (x0.is_zero()) continue;
        std::vector<std::pair<long long, TorsionPoint>> terms;
        TorsionPoint cur = x0;
        for (int it = 0; it < 4000; ++it) {
            terms.emplace_back(1, cur);
            cur = apply(g.adj(), cur);
            if (cur == x0) break;
        }
        TorsionCycle d(terms);
        worst = std::max(worst,
                         std::abs(sl2_first_term(ev, g, d) - first_pushforward_term(ev, g, d)));
        ++done;
    }
    report(7, "sl2 simplification", worst < 1e-6, worst, 1e-6);
}

void criterion8() {
    auto rep = run_suite("hecke", 7, 1e-4);
    std::printf("       (fitted kappa = %.12f %+.2e i)\n", rep.kappa.real(), rep.kappa.imag());
    report(8, "hecke equivariance", rep.passed(), rep.worst_error, 1e-4);
}

void criterion9() {
    auto rep = run_suite("cusp", 7, 1e-3);
    report(9, "cusp degeneration", rep.passed(), rep.worst_error, 1e-3);
}

void criterion10() {
    SeriesParams P;
    UpperHalfPoint ti = UpperHalfPoint::from_cm(0, -1);
    CMContext ctx(ti);
    Evaluator ev(ti, P);
    Gen gen(1010);
    double worst_restrict = 0;
    int done = 0;
    while (done < 50) {
        auto r = [&] { return gen.integer(-3, 3); };
        Mat2Z m{r(), r(), r(), r()};
        if (m.det() == 0) continue;
        Mat2O mo{OrderElem{m.a, 0}, OrderElem{m.b, 0}, OrderElem{m.c, 0}, OrderElem{m.d, 0}};
        TorsionPoint x(TorsionCoord(Rat(gen.integer(0, 4), 5), Rat(gen.integer(0, 4), 5)),
                       TorsionCoord(Rat(gen.integer(0, 4), 5), Rat(gen.integer(0, 4), 5)));
        if (x.is_zero()) continue;
        worst_restrict = std::max(
            worst_restrict, std::abs(theta_gamma_cm(ev, ctx, mo, x) - theta_gamma(ev, m.to_q(), x)));
        ++done;
    }
    double worst_id = 0;
    auto roe = [&] { return OrderElem{gen.integer(-2, 2), gen.integer(-2, 2)}; };
    done = 0;
    while (done < 50) {
        Mat2O g1{roe(), roe(), roe(), roe()};
        Mat2O g2{roe(), roe(), roe(), roe()};
        if (ctx.norm(g1.det(ctx)) == 0 || ctx.norm(g2.det(ctx)) == 0) continue;
        Mat2O g21 = mul(ctx, g2, g1);
        TorsionPoint x(TorsionCoord(Rat(gen.integer(0, 4), 5), Rat(gen.integer(0, 4), 5)),
                       TorsionCoord(Rat(gen.integer(0, 4), 5), Rat(gen.integer(0, 4), 5)));
        if (x.is_zero()) continue;
        bool clean = theta_e1_clean_cm(ctx, g21, x) && theta_e1_clean_cm(ctx, g2, x);
        if (clean)
            for (const auto& q : matrix_preimages_cm(ctx, g2, x))
                if (!theta_e1_clean_cm(ctx, g1, q)) { clean = false; break; }
        if (!clean) continue;
        cplx lhs = theta_gamma_cm(ev, ctx, g21, x);
        PointFn th1 = [&](const TorsionPoint& q) { return theta_gamma_cm(ev, ctx, g1, q); };
        cplx rhs = group_act_cm(ev, ctx, g2, th1, x) + theta_gamma_cm(ev, ctx, g2, x);
        worst_id = std::max(worst_id, std::abs(lhs - rhs));
        ++done;
    }
    report(10, "cm cocycle", worst_restrict < 1e-7 && worst_id < 1e-6,
           std::max(worst_restrict, worst_id), 1e-6);
}

void criterion11() {
    SeriesParams P;
    P.tol = 1e-10;
    Gen gen(1111);
    Mat2Q g(Rat(1), Rat(2), Rat(3), Rat(4));
    TorsionPoint x(TorsionCoord(Rat(1, 5), Rat(0)), TorsionCoord(Rat(2, 5), Rat(1, 5)));
    const long long M = 15;  // level 5 times |c| = 3: all evaluation denominators
    double worst = 0;
    for (int k = 0; k < 5; ++k) {
        UpperHalfPoint tau(cplx(gen.real(-0.4, 0.4), gen.real(0.85, 1.4)));
        Mat2Z sub = Mat2Z{1, M * gen.integer(-1, 1), 0, 1} *
                    Mat2Z{1, 0, M * gen.integer(-1, 1), 1};
        cplx j = (double)sub.c * tau.tau + (double)sub.d;
        UpperHalfPoint moved(((double)sub.a * tau.tau + (double)sub.b) / j);
        Evaluator ev0(tau, P), ev1(moved, P);
        worst = std::max(worst,
                         std::abs(theta_gamma(ev1, g, x) - j * j * theta_gamma(ev0, g, x)));
    }
    report(11, "weight-2 modularity", worst < 1e-6, worst, 1e-6);
}

}  // namespace

int main() {
    setvbuf(stdout, nullptr, _IONBF, 0);
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
