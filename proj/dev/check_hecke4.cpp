// grid search over Hecke convention combinations
#include <cstdio>
#include "thetalift/hecke.hpp"
#include "thetalift/format.hpp"
using namespace thetalift;
static Mat2Q mq(long long a,long long b,long long c,long long d){return Mat2Q(Rat(a),Rat(b),Rat(c),Rat(d));}

static cplx slash2(const Mat2Z& m, const std::function<cplx(const UpperHalfPoint&)>& F,
                   const UpperHalfPoint& tau) {
    cplx den = (double)m.c * tau.tau + (double)m.d;
    cplx moved = ((double)m.a * tau.tau + (double)m.b) / den;
    return (double)m.det() / (den * den) * F(UpperHalfPoint(moved));
}

int main() {
    SeriesParams P; P.tol = 1e-9;
    long long N = 5;
    UpperHalfPoint tau(cplx(0.3, 1.1));
    std::vector<Mat2Q> gammas = {mq(1,1,0,1), mq(1,2,0,1), mq(1,0,5,1), mq(6,1,5,1)};
    TorsionPoint xs[4] = {
        TorsionPoint(TorsionCoord(Rat(0),Rat(0)), TorsionCoord(Rat(1,5),Rat(0))),
        TorsionPoint(TorsionCoord(Rat(1,5),Rat(0)), TorsionCoord(Rat(0),Rat(0))),
        TorsionPoint(TorsionCoord(Rat(0),Rat(0)), TorsionCoord(Rat(0),Rat(1,5))),
        TorsionPoint(TorsionCoord(Rat(0),Rat(1,5)), TorsionCoord(Rat(0),Rat(0)))};
    const char* xnames[4] = {"(0,u)", "(u,0)", "(0,v)", "(v,0)"};
    const char* fnames[3] = {"adj*", "push/p", "push"};
    const char* mnames[2] = {"|a", "|adj(a)"};
    for (int xi = 0; xi < 4; ++xi)
    for (int fib = 0; fib < 3; ++fib)
    for (int mod = 0; mod < 2; ++mod) {
        bool consistent = true; cplx kappa = 0; bool first = true;
        char buf[4096]; int pos = 0;
        for (long long p : {2LL, 3LL}) {
            DoubleCosetData dc = tp_reps(p, N);
            for (auto& g : gammas) {
                Evaluator ev(tau, P);
                auto [sc, gz] = clear_denominators(g);
                auto sigma = coset_permutation(dc, gz);
                cplx lhs = 0;
                for (size_t i = 0; i < dc.reps.size(); ++i) {
                    Mat2Z num = dc.reps[i] * gz * dc.reps[sigma[i]].adj();
                    long long dj = dc.reps[sigma[i]].det();
                    Mat2Z gi{num.a/dj, num.b/dj, num.c/dj, num.d/dj};
                    if (fib == 0) {
                        lhs += theta_gamma(ev, gi.to_q(), fiberwise_point(dc.reps[i], xs[xi]));
                    } else {
                        PointFn th = [&ev, gi](const TorsionPoint& q){ return theta_gamma(ev, gi.to_q(), q); };
                        cplx s = pushforward_sum(dc.reps[i], th, xs[xi]);
                        lhs += (fib == 1) ? s / (double)dc.reps[i].det() : s;
                    }
                }
                auto F = [&](const UpperHalfPoint& t) {
                    Evaluator evt(t, P);
                    return theta_gamma(evt, g, xs[xi]);
                };
                cplx rhs = 0;
                for (auto& al : dc.reps) rhs += slash2(mod == 0 ? al : al.adj(), F, tau);
                if (std::abs(rhs) < 1e-10 && std::abs(lhs) < 1e-10) continue;
                if (std::abs(rhs) < 1e-10) { consistent = false; break; }
                cplx r = lhs / rhs;
                pos += snprintf(buf+pos, sizeof(buf)-pos, "      p=%lld g=%s ratio=(%.6f,%.6f)\n",
                                p, to_string(g).c_str(), r.real(), r.imag());
                if (first) { kappa = r; first = false; }
                else if (std::abs(r - kappa) > 1e-4 * (1 + std::abs(kappa))) consistent = false;
            }
            if (!consistent) break;
        }
        if (consistent && !first)
            printf("CONSISTENT x=%s fib=%s mod=%s kappa=(%.8f,%.8f)\n%s",
                   xnames[xi], fnames[fib], mnames[mod], kappa.real(), kappa.imag(), buf);
    }
    return 0;
}
