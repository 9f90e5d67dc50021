// probe Hecke equivariance conventions: which section shape and kappa?
#include <cstdio>
#include "thetalift/hecke.hpp"
#include "thetalift/format.hpp"
using namespace thetalift;
static Mat2Q mq(long long a,long long b,long long c,long long d){return Mat2Q(Rat(a),Rat(b),Rat(c),Rat(d));}

int main() {
    SeriesParams P; P.tol = 1e-10;
    long long N = 5;
    UpperHalfPoint tau(cplx(0.3, 1.1));
    // gamma choices in Gamma_1(5)
    std::vector<Mat2Q> gammas = {mq(1,1,0,1), mq(1,0,5,1), mq(6,1,5,1)};
    // section shapes
    TorsionPoint xa(TorsionCoord(Rat(0),Rat(0)), TorsionCoord(Rat(1,5),Rat(0)));   // (0, x2)
    TorsionPoint xb(TorsionCoord(Rat(1,5),Rat(0)), TorsionCoord(Rat(0),Rat(0)));   // (x1, 0)
    TorsionPoint xc(TorsionCoord(Rat(0),Rat(0)), TorsionCoord(Rat(0),Rat(1,5)));   // (0, x2') v-type
    TorsionPoint xd(TorsionCoord(Rat(0),Rat(1,5)), TorsionCoord(Rat(0),Rat(0)));
    struct Cand { const char* name; TorsionPoint x; };
    std::vector<Cand> cands = {{"(0,(1/5,0))", xa}, {"((1/5,0),0)", xb},
                               {"(0,(0,1/5))", xc}, {"((0,1/5),0)", xd}};
    for (long long p : {2LL, 3LL}) {
        for (auto& cand : cands) {
            printf("p=%lld x=%s:\n", p, cand.name);
            for (auto& g : gammas) {
                try {
                    auto rep = verify_equivariance(p, N, tau, g, cand.x, P);
                    cplx ratio = (std::abs(rep.rhs) > 1e-12) ? rep.lhs / rep.rhs : cplx(0,0);
                    printf("   gamma det=%s  lhs=(%.6f,%.6f) rhs=(%.6f,%.6f) ratio=(%.6f,%.6f) |diff|=%.2e\n",
                           to_string(g).c_str(), rep.lhs.real(), rep.lhs.imag(),
                           rep.rhs.real(), rep.rhs.imag(), ratio.real(), ratio.imag(), rep.difference);
                } catch (const ThetaError& e) {
                    printf("   gamma %s: %s\n", to_string(g).c_str(), e.what());
                }
            }
        }
    }
    return 0;
}
