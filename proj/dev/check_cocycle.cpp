// dev scratch: cocycle machinery conventions
#include <cstdio>
#include <random>
#include "thetalift/cocycle.hpp"
#include "thetalift/cm.hpp"
#include "thetalift/hecke.hpp"
using namespace thetalift;

static Mat2Q mq(long long a, long long b, long long c, long long d) {
    return Mat2Q(Rat(a), Rat(b), Rat(c), Rat(d));
}

int main() {
    SeriesParams P; P.tol = 1e-10;
    UpperHalfPoint tau(cplx(0.23, 1.07));
    Evaluator ev(tau, P);
    TorsionPoint x(TorsionCoord(Rat(1,5), Rat(2,5)), TorsionCoord(Rat(3,5), Rat(1,5)));

    // base cases
    printf("theta[diag(2,3)]: %.2e (want 0)\n", std::abs(theta_gamma(ev, mq(2,0,0,3), x)));
    cplx tw = theta_gamma(ev, mq(0,1,1,0), x);
    printf("theta[w] vs E1E1: %.2e\n", std::abs(tw - ev.e1e1(x)));
    cplx tu = theta_gamma(ev, mq(1,3,0,1), x);
    printf("theta[(1 3;0 1)] vs -3*E2(x2): %.2e\n", std::abs(tu + 3.0*ev.e2(x.x2)));

    // closed vs telescoped on Bruhat factors of several matrices
    std::mt19937_64 rng(7);
    auto rnd = [&](int lo, int hi){ return (long long)(lo + (long long)(rng() % (hi-lo+1))); };
    double worst_tel = 0;
    for (int k = 0; k < 6; ++k) {
        Mat2Q g = mq(rnd(-4,4), rnd(-4,4), rnd(-4,4), rnd(-4,4));
        if (g.det().is_zero()) { --k; continue; }
        auto fac = bruhat_factor(g);
        if (!(fac.product() == g)) { printf("BRUHAT RECON FAIL\n"); return 1; }
        cplx closed = theta_gamma(ev, g, x);
        cplx tel = theta_telescoped(ev, fac.factors, x);
        worst_tel = std::max(worst_tel, std::abs(closed - tel));
    }
    printf("closed vs telescoped worst: %.2e\n", worst_tel);

    // scalar invariance
    cplx g1v = theta_gamma(ev, mq(1,2,3,4), x);
    printf("scalar invariance 2g: %.2e  3g: %.2e\n",
           std::abs(theta_gamma(ev, mq(2,4,6,8), x) - g1v),
           std::abs(theta_gamma(ev, mq(3,6,9,12), x) - g1v));

    // cocycle identity on random integral pairs
    double worst_coc = 0;
    for (int k = 0; k < 8; ++k) {
        Mat2Q g1 = mq(rnd(-3,3), rnd(-3,3), rnd(-3,3), rnd(-3,3));
        Mat2Q g2 = mq(rnd(-3,3), rnd(-3,3), rnd(-3,3), rnd(-3,3));
        if (g1.det().is_zero() || g2.det().is_zero()) { --k; continue; }
        cplx lhs = theta_gamma(ev, g2 * g1, x);
        PointFn th1 = [&](const TorsionPoint& p) { return theta_gamma(ev, g1, p); };
        cplx rhs = group_act(g2, th1, x) + theta_gamma(ev, g2, x);
        worst_coc = std::max(worst_coc, std::abs(lhs - rhs));
    }
    printf("cocycle identity worst: %.2e\n", worst_coc);

    // CM: tau = i, order Z[i]
    UpperHalfPoint ti = UpperHalfPoint::from_cm(0, -1);
    CMContext ctx(ti);
    Evaluator evi(ti, P);
    TorsionPoint xc(TorsionCoord(Rat(1,5), Rat(0)), TorsionCoord(Rat(2,5), Rat(1,5)));
    // unipotent (1 tau; 0 1): want 4*conj(tau)*E2 = -4i E2
    Mat2O gu{OrderElem{1,0}, OrderElem{0,1}, OrderElem{0,0}, OrderElem{1,0}};
    cplx want = cplx(0,1)*evi.e2(xc.x2);  // -conj(tau) = i at tau = i
    printf("CM unipotent tau: %.2e\n", std::abs(theta_gamma_cm(evi, ctx, gu, xc) - want));
    // rational restriction
    Mat2O gr{OrderElem{1,0}, OrderElem{2,0}, OrderElem{3,0}, OrderElem{4,0}};
    printf("CM rational restriction: %.2e\n",
           std::abs(theta_gamma_cm(evi, ctx, gr, xc) - theta_gamma(evi, mq(1,2,3,4), xc)));
    // CM cocycle identity over Z[i]
    auto rnd_oe = [&]() { return OrderElem{rnd(-2,2), rnd(-2,2)}; };
    double worst_cm = 0;
    for (int k = 0; k < 6; ++k) {
        Mat2O g1{rnd_oe(), rnd_oe(), rnd_oe(), rnd_oe()};
        Mat2O g2{rnd_oe(), rnd_oe(), rnd_oe(), rnd_oe()};
        if (ctx.norm(g1.det(ctx)) == 0 || ctx.norm(g2.det(ctx)) == 0) { --k; continue; }
        Mat2O g21 = mul(ctx, g2, g1);
        if (ctx.norm(g21.det(ctx)) == 0) { --k; continue; }
        cplx lhs = theta_gamma_cm(evi, ctx, g21, xc);
        PointFn th1 = [&](const TorsionPoint& p) { return theta_gamma_cm(evi, ctx, g1, p); };
        cplx rhs = group_act_cm(evi, ctx, g2, th1, xc) + theta_gamma_cm(evi, ctx, g2, xc);
        double err = std::abs(lhs - rhs);
        worst_cm = std::max(worst_cm, err);
        if (err > 1e-6) printf("  cm pair %d err %.2e (dets N=%lld,%lld)\n", k, err,
                               ctx.norm(g1.det(ctx)), ctx.norm(g2.det(ctx)));
    }
    printf("CM cocycle identity worst: %.2e\n", worst_cm);
    return 0;
}
