// fit Hecke sides in the E2-section basis to reveal the transport law
#include <cstdio>
#include <vector>
#include <complex>
#include <random>
#include "thetalift/hecke.hpp"
using namespace thetalift;
using C = std::complex<double>;
static Mat2Q mq(long long a,long long b,long long c,long long d){return Mat2Q(Rat(a),Rat(b),Rat(c),Rat(d));}

// least squares via normal equations, complex
static std::vector<C> lsq(const std::vector<std::vector<C>>& A, const std::vector<C>& b) {
    size_t n = A[0].size(), m = A.size();
    std::vector<std::vector<C>> M(n, std::vector<C>(n + 1, 0.0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j)
            for (size_t r = 0; r < m; ++r) M[i][j] += std::conj(A[r][i]) * A[r][j];
        for (size_t r = 0; r < m; ++r) M[i][n] += std::conj(A[r][i]) * b[r];
    }
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        for (size_t r = c + 1; r < n; ++r) if (std::abs(M[r][c]) > std::abs(M[piv][c])) piv = r;
        std::swap(M[c], M[piv]);
        if (std::abs(M[c][c]) < 1e-13) continue;
        for (size_t r = 0; r < n; ++r) if (r != c && std::abs(M[r][c]) > 0) {
            C f = M[r][c] / M[c][c];
            for (size_t k = c; k <= n; ++k) M[r][k] -= f * M[c][k];
        }
    }
    std::vector<C> out(n, 0.0);
    for (size_t c = 0; c < n; ++c) if (std::abs(M[c][c]) > 1e-13) out[c] = M[c][n] / M[c][c];
    return out;
}

int main() {
    SeriesParams P; P.tol = 1e-9;
    long long N = 5, p = 2;
    DoubleCosetData dc = tp_reps(p, N);
    TorsionPoint x(TorsionCoord(Rat(0),Rat(0)), TorsionCoord(Rat(1,5),Rat(0)));
    Mat2Q gam = mq(1,1,0,1);
    // basis: E2(tau, (s/10, t/10)) modulo +- , including (0,0)
    std::vector<TorsionCoord> basis;
    for (int s = 0; s < 10; ++s) for (int t = 0; t < 10; ++t) {
        int ns = (10 - s) % 10, nt = (10 - t) % 10;
        if (std::make_pair(ns, nt) < std::make_pair(s, t)) continue;
        basis.emplace_back(Rat(s,10), Rat(t,10));
    }
    printf("basis size %zu\n", basis.size());
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    int samples = 140;
    std::vector<std::vector<C>> A(samples, std::vector<C>(basis.size()));
    std::vector<C> lhs_inf(samples), rhsA(samples), rhsB(samples);
    auto [sc, gz] = clear_denominators(gam);
    auto sigma = coset_permutation(dc, gz);
    for (int r = 0; r < samples; ++r) {
        UpperHalfPoint tau(C(2.0*U(rng)-1.0, 0.75 + 1.5*U(rng)));
        Evaluator ev(tau, P);
        for (size_t j = 0; j < basis.size(); ++j) A[r][j] = ev.e2(basis[j]);
        // lhs: full fiberwise sum
        C acc = 0;
        for (size_t i = 0; i < dc.reps.size(); ++i) {
            Mat2Z num = dc.reps[i] * gz * dc.reps[sigma[i]].adj();
            long long dj = dc.reps[sigma[i]].det();
            Mat2Z gi{num.a/dj, num.b/dj, num.c/dj, num.d/dj};
            acc += theta_gamma(ev, gi.to_q(), fiberwise_point(dc.reps[i], x));
        }
        lhs_inf[r] = acc;
        auto F = [&](const UpperHalfPoint& t) {
            Evaluator evt(t, P);
            return theta_gamma(evt, gam, x);
        };
        C sa = 0, sb = 0;
        for (auto& al : dc.reps) {
            auto slash = [&](const Mat2Z& m) {
                C den = (double)m.c * tau.tau + (double)m.d;
                C moved = ((double)m.a * tau.tau + (double)m.b) / den;
                return (double)m.det() / (den * den) * F(UpperHalfPoint(moved));
            };
            sa += slash(al);
            sb += slash(al.adj());
        }
        rhsA[r] = sa; rhsB[r] = sb;
    }
    auto report = [&](const char* name, const std::vector<C>& target) {
        auto coef = lsq(A, target);
        // residual
        double res = 0, norm = 0;
        for (int r = 0; r < samples; ++r) {
            C pred = 0;
            for (size_t j = 0; j < basis.size(); ++j) pred += coef[j] * A[r][j];
            res += std::norm(pred - target[r]); norm += std::norm(target[r]);
        }
        printf("%s: rel residual %.3e; coefficients > 0.01:\n", name, std::sqrt(res/norm));
        for (size_t j = 0; j < basis.size(); ++j)
            if (std::abs(coef[j]) > 0.01)
                printf("   (%lld/%lld,%lld/%lld): (%.6f, %.6f)\n",
                       basis[j].u.num, basis[j].u.den, basis[j].v.num, basis[j].v.den,
                       coef[j].real(), coef[j].imag());
    };
    report("LHS (fiberwise)", lhs_inf);
    report("RHS-A (slash alpha)", rhsA);
    report("RHS-B (slash adj)", rhsB);
    return 0;
}
