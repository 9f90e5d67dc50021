// dev scratch: validate k_continued against k_direct and known constants
#include <cstdio>
#include <random>
#include "thetalift/kronecker.hpp"
using namespace thetalift;

int main() {
    SeriesParams P;
    P.tol = 1e-10;
    // 1) overlap cross-check
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    double worst = 0;
    for (int i = 0; i < 12; ++i) {
        int a = i % 3;
        UpperHalfPoint tau(cplx(U(rng) - 0.5, 0.7 + U(rng)));
        KroneckerArgs args;
        args.a = a;
        args.s = cplx(3.6 + 1.5 * U(rng), 0.4 * (U(rng) - 0.5));
        args.z = cplx(U(rng), U(rng));
        args.u_char = (i % 2) ? cplx(U(rng), U(rng)) : cplx(0, 0);
        auto d = k_direct(tau, args, P);
        auto c = k_continued(tau, args, P);
        double err = std::abs(d.value - c.value);
        worst = std::max(worst, err);
        std::printf("a=%d s=%.3f%+.3fi u?%d  direct=(%.10f,%.10f) cont=(%.10f,%.10f) err=%.2e (tail %.1e)\n",
                    a, args.s.real(), args.s.imag(), (int)(std::abs(args.u_char)>0),
                    d.value.real(), d.value.imag(), c.value.real(), c.value.imag(), err, d.est_error);
    }
    std::printf("worst overlap err = %.3e\n", worst);

    // 2) Epstein zeta at tau = i, s = 2: 4 zeta(2) beta(2)
    UpperHalfPoint ti(cplx(0, 1));
    KroneckerArgs ep{0, 2.0, 0.0, 0.0};
    auto v = k_continued(ti, ep, P);
    double catalan = 0.915965594177219015054603514932;
    double zeta2 = 1.644934066848226436472415166646;
    std::printf("Epstein Z(2) = %.15f + %.1e i  vs 4*zeta2*catalan = %.15f\n",
                v.value.real(), v.value.imag(), 4 * zeta2 * catalan);

    // 3) E1(tau,0) = 0; parity of E1/E2
    UpperHalfPoint t2(cplx(0.31, 1.17));
    std::printf("E1(tau,0) = %s\n", std::abs(e1(t2, cplx(0, 0), P)) < 1e-14 ? "0 ok" : "BAD");
    cplx z0(0.23, 0.41);
    std::printf("E1 odd: %.2e   E2 even: %.2e\n",
                std::abs(e1(t2, z0, P) + e1(t2, -z0, P)),
                std::abs(e2(t2, z0, P) - e2(t2, -z0, P)));
    // periodicity
    std::printf("E1 period: %.2e %.2e\n",
                std::abs(e1(t2, z0, P) - e1(t2, z0 + cplx(1, 0), P)),
                std::abs(e1(t2, z0, P) - e1(t2, z0 + t2.tau, P)));
    // dbar E2 = (i/2y) E1
    double h = 1e-5;
    cplx dx = (e2(t2, z0 + h, P) - e2(t2, z0 - h, P)) / (2 * h);
    cplx dy = (e2(t2, z0 + cplx(0, h), P) - e2(t2, z0 - cplx(0, h), P)) / (2 * h);
    cplx dzbar = 0.5 * (dx + cplx(0, 1) * dy);
    cplx expect = cplx(0, 1) / (2 * t2.y) * e1(t2, z0, P);
    std::printf("dbar E2 vs (i/2y)E1: %.3e\n", std::abs(dzbar - expect));
    // dbar E1 = const = -i/(2y)?
    dx = (e1(t2, z0 + h, P) - e1(t2, z0 - h, P)) / (2 * h);
    dy = (e1(t2, z0 + cplx(0, h), P) - e1(t2, z0 - cplx(0, h), P)) / (2 * h);
    dzbar = 0.5 * (dx + cplx(0, 1) * dy);
    std::printf("dbar E1 = (%.8f, %.8f)  vs -i/2y = (0, %.8f)\n", dzbar.real(), dzbar.imag(),
                -1 / (2 * t2.y));
    return 0;
}
