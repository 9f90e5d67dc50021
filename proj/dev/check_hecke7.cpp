// validate the final Hecke conventions across a grid
#include <cstdio>
#include "thetalift/hecke.hpp"
#include "thetalift/format.hpp"
using namespace thetalift;
static Mat2Q mq(long long a,long long b,long long c,long long d){return Mat2Q(Rat(a),Rat(b),Rat(c),Rat(d));}

int main() {
    SeriesParams P; P.tol = 1e-9;
    long long N = 5;
    std::vector<Mat2Q> gammas = {mq(1,0,1,1), mq(1,0,3,1), mq(1,5,2,11)};
    std::vector<UpperHalfPoint> taus = {UpperHalfPoint(cplx(0.3, 1.1)), UpperHalfPoint(cplx(-0.21, 0.87))};
    std::vector<TorsionPoint> xs = {
        TorsionPoint(TorsionCoord(Rat(0),Rat(0)), TorsionCoord(Rat(1,5),Rat(0))),
        TorsionPoint(TorsionCoord(Rat(0),Rat(0)), TorsionCoord(Rat(2,5),Rat(0)))};
    double worst = 0;
    for (long long p : {2LL, 3LL})
        for (auto& tau : taus)
            for (auto& g : gammas)
                for (auto& x : xs) {
                    auto rep = verify_equivariance(p, N, tau, g, x, P);
                    printf("p=%lld tau=(%.2f,%.2f) g=%s x2=%s  |lhs-rhs|=%.3e  (lhs=(%.5f,%.5f))\n",
                           p, tau.tau.real(), tau.tau.imag(), to_string(g).c_str(),
                           to_string(x.x2).c_str(), rep.difference, rep.lhs.real(), rep.lhs.imag());
                    worst = std::max(worst, rep.difference);
                }
    printf("worst |lhs - rhs| = %.3e\n", worst);
    return 0;
}
