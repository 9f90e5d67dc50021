// dev scratch: theta-function closed forms vs the continuation engine
#include <cstdio>
#include <complex>
#include "thetalift/kronecker.hpp"
using namespace thetalift;
using C = std::complex<double>;
static const double PI = 3.14159265358979323846;

// theta1 and derivatives w.r.t. v, with q = exp(i pi tau)
static C theta1(C v, C q, int deriv) {
    C sum = 0;
    for (int n = 0; n < 40; ++n) {
        double k = 2 * n + 1;
        C qp = std::pow(q, (n + 0.5) * (n + 0.5));
        C mult = (n % 2) ? -2.0 : 2.0;
        C ang = k * v;
        C term;
        switch (deriv % 4) {
            case 0: term = std::sin(ang); break;
            case 1: term = std::cos(ang); break;
            case 2: term = -std::sin(ang); break;
            default: term = -std::cos(ang); break;
        }
        sum += mult * qp * std::pow(k, deriv) * term;
        if (std::abs(qp) < 1e-22) break;
    }
    return sum;
}

int main() {
    SeriesParams P; P.tol = 1e-12;
    for (double yy : {0.8, 1.0, 1.7}) {
        UpperHalfPoint tau(C(0.21, yy));
        C q = std::exp(C(0, PI) * tau.tau);
        C z(0.37, 0.18);
        C v = PI * z;
        C logd = theta1(v, q, 1) / theta1(v, q, 0);
        // K1(1,tau,z,0) = pi theta1'/theta1 (pi z) + (pi/y)(z - zbar)
        C k1_oracle = PI * logd + PI / tau.y * (z - std::conj(z));
        KroneckerArgs a1{1, 1.0, z, 0.0};
        C k1 = k_continued(tau, a1, P).value;
        // K2(2,tau,z,0) = wp(z) + eta1 - pi/y
        C eta1 = -PI * PI / 3.0 * theta1(C(0, 0), q, 3) / theta1(C(0, 0), q, 1);
        C wp = -eta1 - PI * PI * (theta1(v, q, 2) / theta1(v, q, 0) - logd * logd);
        C k2_oracle = wp + eta1 - PI / tau.y;
        KroneckerArgs a2{2, 2.0, z, 0.0};
        C k2 = k_continued(tau, a2, P).value;
        std::printf("y=%.2f  K1 err=%.3e   K2(s=2) err=%.3e\n", yy, std::abs(k1 - k1_oracle),
                    std::abs(k2 - k2_oracle));
    }
    // E2 cusp limit check: E2(iy,(u,v)) -> -B2hat(v)/2 ?
    SeriesParams P2; P2.tol = 1e-10;
    for (double yy : {20.0, 50.0}) {
        UpperHalfPoint tau(C(0, yy));
        TorsionCoord c13(Rat(1,3), Rat(0));
        TorsionCoord c05(Rat(0), Rat(1,3));
        double b20 = 1.0/6, b213 = 1.0/9 - 1.0/3 + 1.0/6;
        std::printf("y=%g  e2(u=1/3,v=0)=%.8f (pred -B2(0)/2=%.8f)   e2(u=0,v=1/3)=%.8f (pred -B2(1/3)/2=%.8f)\n",
            yy, e2(tau, c13, P2).real(), -b20/2, e2(tau, c05, P2).real(), -b213/2);
        TorsionCoord cc(Rat(1,5), Rat(1,3));
        std::printf("      e1(u=1/5,v=1/3)=(%.8f,%.8f) pred B1(1/3)=%.8f\n",
            e1(tau, cc, P2).real(), e1(tau, cc, P2).imag(), 1.0/3-0.5);
    }
    return 0;
}
