// CM identity with strata avoidance; SL2 first term; cusp degeneration
#include <cstdio>
#include <random>
#include "thetalift/cm.hpp"
#include "thetalift/cocycle.hpp"
#include "thetalift/format.hpp"
using namespace thetalift;
static Mat2Q mq(long long a,long long b,long long c,long long d){return Mat2Q(Rat(a),Rat(b),Rat(c),Rat(d));}

int main() {
    SeriesParams P; P.tol = 1e-10;
    std::mt19937_64 rng(11);
    auto rnd = [&](int lo,int hi){ return (long long)(lo + (long long)(rng()%(hi-lo+1))); };

    // --- CM cocycle identity over Z[i], strata-avoiding ---
    UpperHalfPoint ti = UpperHalfPoint::from_cm(0, -1);
    CMContext ctx(ti);
    Evaluator evi(ti, P);
    auto rnd_oe = [&]() { return OrderElem{rnd(-2,2), rnd(-2,2)}; };
    double worst_cm = 0; int done = 0, skipped = 0;
    while (done < 20) {
        Mat2O g1{rnd_oe(), rnd_oe(), rnd_oe(), rnd_oe()};
        Mat2O g2{rnd_oe(), rnd_oe(), rnd_oe(), rnd_oe()};
        if (ctx.norm(g1.det(ctx)) == 0 || ctx.norm(g2.det(ctx)) == 0) continue;
        Mat2O g21 = mul(ctx, g2, g1);
        long long N = 5 + 2 * (done % 2);
        TorsionPoint x(TorsionCoord(Rat(rnd(0,N-1),N),Rat(rnd(0,N-1),N)),
                       TorsionCoord(Rat(rnd(0,N-1),N),Rat(rnd(0,N-1),N)));
        if (x.is_zero()) continue;
        bool clean = theta_e1_clean_cm(ctx, g21, x) && theta_e1_clean_cm(ctx, g2, x);
        if (clean)
            for (auto& q : matrix_preimages_cm(ctx, g2, x))
                if (!theta_e1_clean_cm(ctx, g1, q)) { clean = false; break; }
        if (!clean) { ++skipped; continue; }
        cplx lhs = theta_gamma_cm(evi, ctx, g21, x);
        PointFn th1 = [&](const TorsionPoint& q){ return theta_gamma_cm(evi, ctx, g1, q); };
        cplx rhs = group_act_cm(evi, ctx, g2, th1, x) + theta_gamma_cm(evi, ctx, g2, x);
        worst_cm = std::max(worst_cm, std::abs(lhs - rhs));
        ++done;
    }
    printf("CM cocycle identity (20 clean pairs, %d skipped): worst %.3e\n", skipped, worst_cm);

    // Eisenstein order too
    UpperHalfPoint tw = UpperHalfPoint::from_cm(-1, -1);
    CMContext ctx2(tw);
    Evaluator evw(tw, P);
    double worst_cm2 = 0; done = 0;
    while (done < 8) {
        Mat2O g1{rnd_oe(), rnd_oe(), rnd_oe(), rnd_oe()};
        Mat2O g2{rnd_oe(), rnd_oe(), rnd_oe(), rnd_oe()};
        if (ctx2.norm(g1.det(ctx2)) == 0 || ctx2.norm(g2.det(ctx2)) == 0) continue;
        Mat2O g21 = mul(ctx2, g2, g1);
        TorsionPoint x(TorsionCoord(Rat(rnd(0,4),5),Rat(rnd(0,4),5)),
                       TorsionCoord(Rat(rnd(0,4),5),Rat(rnd(0,4),5)));
        if (x.is_zero()) continue;
        bool clean = theta_e1_clean_cm(ctx2, g21, x) && theta_e1_clean_cm(ctx2, g2, x);
        if (clean)
            for (auto& q : matrix_preimages_cm(ctx2, g2, x))
                if (!theta_e1_clean_cm(ctx2, g1, q)) { clean = false; break; }
        if (!clean) continue;
        cplx lhs = theta_gamma_cm(evw, ctx2, g21, x);
        PointFn th1 = [&](const TorsionPoint& q){ return theta_gamma_cm(evw, ctx2, g1, q); };
        cplx rhs = group_act_cm(evw, ctx2, g2, th1, x) + theta_gamma_cm(evw, ctx2, g2, x);
        worst_cm2 = std::max(worst_cm2, std::abs(lhs - rhs));
        ++done;
    }
    printf("CM cocycle identity Z[w]: worst %.3e\n", worst_cm2);

    // --- SL2 first term on orbit cycles ---
    UpperHalfPoint tau(cplx(0.23, 1.07));
    Evaluator ev(tau, P);
    double worst_sl2 = 0;
    for (int trial = 0; trial < 6; ++trial) {
        // random g in SL2(Z) with c != 0: build from products of generators
        Mat2Z g{1,0,0,1};
        for (int k = 0; k < 5; ++k) {
            long long t = rnd(-2,2);
            g = g * ((k % 2) ? Mat2Z{1, t, 0, 1} : Mat2Z{1, 0, t, 1});
        }
        if (g.c == 0) { --trial; continue; }
        long long N = 5;
        TorsionPoint x0(TorsionCoord(Rat(rnd(0,N-1),N),Rat(rnd(0,N-1),N)),
                        TorsionCoord(Rat(rnd(0,N-1),N),Rat(rnd(0,N-1),N)));
        if (x0.is_zero()) { --trial; continue; }
        // orbit of x0 under g^-1 (column action)
        std::vector<std::pair<long long,TorsionPoint>> terms;
        TorsionPoint cur = x0;
        Mat2Z ginv = g.adj();  // det 1
        for (int it = 0; it < 1000; ++it) {
            terms.emplace_back(1, cur);
            cur = apply(ginv, cur);
            if (cur == x0) break;
        }
        TorsionCycle D(terms);
        cplx simp = sl2_first_term(ev, g, D);
        cplx direct = first_pushforward_term(ev, g, D);
        worst_sl2 = std::max(worst_sl2, std::abs(simp - direct));
    }
    printf("SL2 first term vs direct: worst %.3e\n", worst_sl2);

    // --- cusp degeneration ---
    SeriesParams PC; PC.tol = 1e-9;
    for (auto g : {mq(1,3,0,1), mq(0,1,1,0), mq(2,1,3,2)}) {
        TorsionPoint x(TorsionCoord(Rat(1,5),Rat(2,5)), TorsionCoord(Rat(3,5),Rat(1,5)));
        auto rep = cusp_degeneration(g, x, {20.0, 50.0, 100.0}, PC);
        printf("cusp g=%s: ratios (%.6f,%.6f) (%.6f,%.6f) (%.6f,%.6f) stabilized=%d\n",
               to_string(g).c_str(),
               rep.ratios[0].real(), rep.ratios[0].imag(),
               rep.ratios[1].real(), rep.ratios[1].imag(),
               rep.ratios[2].real(), rep.ratios[2].imag(), (int)rep.stabilized);
    }
    return 0;
}
