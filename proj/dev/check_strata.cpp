// hypothesis: cocycle identity holds iff no nested E1E1 evaluation point
// has a zero coordinate
#include <cstdio>
#include <random>
#include "thetalift/cocycle.hpp"
using namespace thetalift;

static Mat2Q mq(long long a,long long b,long long c,long long d){return Mat2Q(Rat(a),Rat(b),Rat(c),Rat(d));}

// all points where theta[g] evaluates an E1 factor, for target x
static void e1_points(const Mat2Z& m, const TorsionPoint& x, std::vector<TorsionPoint>& out) {
    if (m.c == 0) return;                      // only the E2 term
    auto pre = matrix_preimages(Mat2Z{1, m.a, 0, m.c}, x);
    for (auto& p : pre.points) out.push_back(p);
}

static bool hits_stratum(const std::vector<TorsionPoint>& pts) {
    for (auto& p : pts)
        if (p.x1.is_zero() || p.x2.is_zero()) return true;
    return false;
}

int main() {
    SeriesParams P; P.tol = 1e-10;
    UpperHalfPoint tau(cplx(0.23, 1.07));
    Evaluator ev(tau, P);
    std::mt19937_64 rng(7);
    auto rnd = [&](int lo,int hi){ return (long long)(lo + (long long)(rng()%(hi-lo+1))); };
    double worst_clean = 0, worst_dirty = 0;
    int nclean = 0, ndirty = 0;
    for (int k = 0; k < 60; ++k) {
        Mat2Q g1 = mq(rnd(-3,3),rnd(-3,3),rnd(-3,3),rnd(-3,3));
        Mat2Q g2 = mq(rnd(-3,3),rnd(-3,3),rnd(-3,3),rnd(-3,3));
        if (g1.det().is_zero() || g2.det().is_zero()) { --k; continue; }
        long long N = 5 + (k % 3) * 2;  // 5,7,9
        TorsionPoint x(TorsionCoord(Rat(rnd(0,N-1),N),Rat(rnd(0,N-1),N)),
                       TorsionCoord(Rat(rnd(0,N-1),N),Rat(rnd(0,N-1),N)));
        if (x.is_zero()) { --k; continue; }
        auto m21 = clear_denominators(g2*g1).second;
        auto m1 = clear_denominators(g1).second;
        auto m2 = clear_denominators(g2).second;
        std::vector<TorsionPoint> pts;
        e1_points(m21, x, pts);
        e1_points(m2, x, pts);
        for (auto& q : matrix_preimages(m2, x).points) { e1_points(m1, q, pts); pts.push_back(q); }
        bool dirty = hits_stratum(pts);
        cplx lhs = theta_gamma(ev, g2*g1, x);
        PointFn th1 = [&](const TorsionPoint& p){ return theta_gamma(ev, g1, p); };
        cplx rhs = group_act(g2, th1, x) + theta_gamma(ev, g2, x);
        double err = std::abs(lhs-rhs);
        if (dirty) { worst_dirty = std::max(worst_dirty, err); ++ndirty; }
        else { worst_clean = std::max(worst_clean, err); ++nclean;
               if (err > 1e-7) printf("CLEAN FAIL k=%d err=%.2e g1=[%lld %lld;%lld %lld] g2=[%lld %lld;%lld %lld]\n",
                   k, err, m1.a,m1.b,m1.c,m1.d, m2.a,m2.b,m2.c,m2.d); }
    }
    printf("clean pairs: %d worst %.3e\n", nclean, worst_clean);
    printf("dirty pairs: %d worst %.3e\n", ndirty, worst_dirty);
    return 0;
}
