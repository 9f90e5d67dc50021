// solve for the unipotent lift constant kappa from the relation
//   tel([w,U(1),w]) = closed((1 0; 1 1))
// which reduces to  kappa*(E2(x1-x2)+E2(x1)+E2(x2)) =
//   E1(x1)E1(x2) + E1(x1-x2)(E1(x1)-E1(x2))
#include <cstdio>
#include "thetalift/kronecker.hpp"
using namespace thetalift;

int main() {
    SeriesParams P; P.tol = 1e-12;
    for (double yy : {0.9, 1.3}) {
        for (int k = 0; k < 3; ++k) {
            UpperHalfPoint tau(cplx(0.1 * k, yy));
            cplx z1(0.17 + 0.05*k, 0.31), z2(0.52, -0.12 + 0.07*k);
            cplx A = e2(tau, z1 - z2, P) + e2(tau, z1, P) + e2(tau, z2, P);
            cplx B = e1(tau, z1, P) * e1(tau, z2, P)
                   + e1(tau, z1 - z2, P) * (e1(tau, z1, P) - e1(tau, z2, P));
            cplx kap = B / A;
            printf("tau=(%.2f,%.2f) z-set %d:  kappa = %.12f %+.2e i\n",
                   tau.tau.real(), tau.tau.imag(), k, kap.real(), kap.imag());
        }
    }
    return 0;
}
