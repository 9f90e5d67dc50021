// is theta additive on the lower-triangular congruence group at x=(0,x2)?
#include <cstdio>
#include "thetalift/cocycle.hpp"
using namespace thetalift;
static Mat2Q mq(long long a,long long b,long long c,long long d){return Mat2Q(Rat(a),Rat(b),Rat(c),Rat(d));}

int main() {
    SeriesParams P; P.tol = 1e-10;
    UpperHalfPoint tau(cplx(0.3, 1.1));
    Evaluator ev(tau, P);
    TorsionPoint x(TorsionCoord(Rat(0),Rat(0)), TorsionCoord(Rat(1,5),Rat(0)));
    cplx A1 = theta_gamma(ev, mq(1,0,1,1), x);
    for (int c = 2; c <= 6; ++c) {
        cplx Ac = theta_gamma(ev, mq(1,0,c,1), x);
        printf("c=%d  |A_c - c A_1| = %.3e\n", c, std::abs(Ac - (double)c * A1));
    }
    // general pairs in Gamma^1(5) (b == 0 mod 5)
    std::vector<Mat2Q> gs = {mq(1,0,1,1), mq(1,0,3,1), mq(1,5,2,11), mq(6,5,1,1), mq(1,-5,1,-4)};
    double worst = 0;
    for (auto& g1 : gs) for (auto& g2 : gs) {
        cplx lhs = theta_gamma(ev, g2 * g1, x);
        cplx rhs = theta_gamma(ev, g1, x) + theta_gamma(ev, g2, x);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    printf("Gamma^1(5) additivity at (0,x2) worst: %.3e\n", worst);
    // and the Gamma_1(5) additivity at the same x for contrast
    std::vector<Mat2Q> hs = {mq(1,1,0,1), mq(1,0,5,1), mq(6,1,5,1)};
    worst = 0;
    for (auto& g1 : hs) for (auto& g2 : hs) {
        cplx lhs = theta_gamma(ev, g2 * g1, x);
        cplx rhs = theta_gamma(ev, g1, x) + theta_gamma(ev, g2, x);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    printf("Gamma_1(5) additivity at (0,x2) worst: %.3e\n", worst);
    return 0;
}
