// probe: modular side as sum of F|_{alpha_i} vs F|_{adj(alpha_i)}
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
    SeriesParams P; P.tol = 1e-10;
    long long N = 5;
    UpperHalfPoint tau(cplx(0.3, 1.1));
    std::vector<Mat2Q> gammas = {mq(1,1,0,1), mq(1,0,5,1), mq(6,1,5,1), mq(1,-1,0,1)};
    TorsionPoint xs[4] = {
        TorsionPoint(TorsionCoord(Rat(0),Rat(0)), TorsionCoord(Rat(1,5),Rat(0))),
        TorsionPoint(TorsionCoord(Rat(1,5),Rat(0)), TorsionCoord(Rat(0),Rat(0))),
        TorsionPoint(TorsionCoord(Rat(0),Rat(0)), TorsionCoord(Rat(0),Rat(1,5))),
        TorsionPoint(TorsionCoord(Rat(0),Rat(1,5)), TorsionCoord(Rat(0),Rat(0)))};
    const char* names[4] = {"(0,(1/5,0))", "((1/5,0),0)", "(0,(0,1/5))", "((0,1/5),0)"};
    for (long long p : {2LL, 3LL}) {
        DoubleCosetData dc = tp_reps(p, N);
        for (int xi = 0; xi < 4; ++xi) {
            Evaluator ev(tau, P);
            for (auto& g : gammas) {
                cplx lhs = hecke_on_cocycle(dc, ev, g, xs[xi]);
                auto F = [&](const UpperHalfPoint& t) {
                    Evaluator evt(t, P);
                    return theta_gamma(evt, g, xs[xi]);
                };
                cplx rhsA = 0, rhsB = 0;
                for (auto& al : dc.reps) { rhsA += slash2(al, F, tau); rhsB += slash2(al.adj(), F, tau); }
                auto show = [&](const char* tag, cplx rhs) {
                    cplx ratio = std::abs(rhs) > 1e-12 ? lhs / rhs : cplx(0,0);
                    printf("  p=%lld x=%s g=%s %s ratio=(%.8f,%.8f)\n", p, names[xi],
                           to_string(g).c_str(), tag, ratio.real(), ratio.imag());
                };
                show("A", rhsA); show("B", rhsB);
            }
        }
    }
    return 0;
}
