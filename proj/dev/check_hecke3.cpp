// additivity of theta on Gamma_1(5) at candidate sections
#include <cstdio>
#include "thetalift/hecke.hpp"
#include "thetalift/format.hpp"
using namespace thetalift;
static Mat2Q mq(long long a,long long b,long long c,long long d){return Mat2Q(Rat(a),Rat(b),Rat(c),Rat(d));}

int main() {
    SeriesParams P; P.tol = 1e-10;
    UpperHalfPoint tau(cplx(0.3, 1.1));
    Evaluator ev(tau, P);
    std::vector<Mat2Q> gs = {mq(1,1,0,1), mq(1,0,5,1), mq(6,1,5,1), mq(1,-1,0,1), mq(-4,-1,5,1)};
    TorsionPoint xs[4] = {
        TorsionPoint(TorsionCoord(Rat(0),Rat(0)), TorsionCoord(Rat(1,5),Rat(0))),
        TorsionPoint(TorsionCoord(Rat(1,5),Rat(0)), TorsionCoord(Rat(0),Rat(0))),
        TorsionPoint(TorsionCoord(Rat(0),Rat(0)), TorsionCoord(Rat(0),Rat(1,5))),
        TorsionPoint(TorsionCoord(Rat(0),Rat(1,5)), TorsionCoord(Rat(0),Rat(0)))};
    const char* names[4] = {"(0,(1/5,0))", "((1/5,0),0)", "(0,(0,1/5))", "((0,1/5),0)"};
    for (int xi = 0; xi < 4; ++xi) {
        double worst = 0;
        for (auto& g1 : gs) for (auto& g2 : gs) {
            cplx lhs = theta_gamma(ev, g2 * g1, xs[xi]);
            cplx rhs = theta_gamma(ev, g1, xs[xi]) + theta_gamma(ev, g2, xs[xi]);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        printf("x=%s  additivity worst: %.3e\n", names[xi], worst);
    }
    return 0;
}
