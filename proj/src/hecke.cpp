#include "thetalift/hecke.hpp"

#include <numeric>

namespace thetalift {

namespace {

long long mod_pos(long long a, long long n) {
    long long r = a % n;
    return r < 0 ? r + n : r;
}

// x with a*x == 1 mod n
long long inv_mod(long long a, long long n) {
    long long t = 0, newt = 1, r = n, newr = mod_pos(a, n);
    while (newr != 0) {
        long long q = r / newr;
        std::swap(t, newt); newt -= q * t;
        std::swap(r, newr); newr -= q * r;
    }
    if (r != 1) throw BadLevel("not invertible mod " + std::to_string(n));
    return mod_pos(t, n);
}

Mat2Z transpose(const Mat2Z& m) { return Mat2Z{m.a, m.c, m.b, m.d}; }

// integral quotient num / d, or nullopt
bool divide(const Mat2Z& num, long long d, Mat2Z& out) {
    if (num.a % d || num.b % d || num.c % d || num.d % d) return false;
    out = Mat2Z{num.a / d, num.b / d, num.c / d, num.d / d};
    return true;
}

}  // namespace

bool in_gamma1(const Mat2Z& g, long long N) {
    return g.det() == 1 && mod_pos(g.a - 1, N) == 0 && mod_pos(g.c, N) == 0 &&
           mod_pos(g.d - 1, N) == 0;
}

bool in_gamma1_transpose(const Mat2Z& g, long long N) {
    return g.det() == 1 && mod_pos(g.a - 1, N) == 0 && mod_pos(g.b, N) == 0 &&
           mod_pos(g.d - 1, N) == 0;
}

DoubleCosetData tp_reps(long long p, long long N) {
    if (N <= 1) throw BadLevel("level must be > 1");
    if (std::gcd(p, N) != 1) throw BadLevel("p must not divide the level");
    DoubleCosetData dc;
    dc.p = p;
    dc.N = N;
    for (long long j = 0; j < p; ++j) dc.reps.push_back(Mat2Z{1, j, 0, p});
    // extra representative: SL_2(Z) lift of diag(p^-1, p) mod N, times diag(p,1)
    const long long pstar = inv_mod(p, N);
    const long long n2 = N * N;
    long long d = inv_mod(pstar, n2);
    long long e = (pstar * d - 1) / n2;
    Mat2Z lift{pstar, e * N, N, d};  // in SL_2(Z), congruent to diag(p^-1, p) mod N
    if (lift.det() != 1) throw BadLevel("internal: SL2 lift failed");
    dc.reps.push_back(lift * Mat2Z{p, 0, 0, 1});
    for (const auto& r : dc.reps)
        if (r.det() != p || mod_pos(r.a - 1, N) != 0 || mod_pos(r.c, N) != 0)
            throw BadLevel("internal: bad coset representative");
    // pairwise right-Gamma_1(N) inequivalence
    for (size_t i = 0; i < dc.reps.size(); ++i)
        for (size_t j = 0; j < dc.reps.size(); ++j) {
            if (i == j) continue;
            Mat2Z q;
            if (divide(dc.reps[i] * dc.reps[j].adj(), p, q) && in_gamma1(q, N))
                throw BadLevel("internal: representatives not inequivalent");
        }
    return dc;
}

TorsionPoint fiberwise_point(const Mat2Z& alpha, const TorsionPoint& x) {
    Mat2Z m = alpha.adj();
    if (alpha.det() < 0) m = Mat2Z{-m.a, -m.b, -m.c, -m.d};
    return apply(m, x);
}

cplx fiberwise_act(const Mat2Z& alpha, const PointFn& f, const TorsionPoint& x) {
    return f(fiberwise_point(alpha, x));
}

std::vector<size_t> coset_permutation(const DoubleCosetData& dc, const Mat2Z& gamma) {
    if (!in_gamma1_transpose(gamma, dc.N))
        throw DomainError("coset permutation needs gamma in the transpose group");
    const size_t n = dc.reps.size();
    std::vector<size_t> sigma(n, n);
    std::vector<bool> used(n, false);
    for (size_t i = 0; i < n; ++i) {
        const Mat2Z beta_i = transpose(dc.reps[i]);
        size_t found = n;
        for (size_t j = 0; j < n; ++j) {
            const Mat2Z beta_j = transpose(dc.reps[j]);
            Mat2Z cand;
            if (!divide(beta_j.adj() * gamma * beta_i, dc.p, cand)) continue;
            if (!in_gamma1_transpose(cand, dc.N)) continue;
            if (found != n) throw PermutationFailure("two cosets match index " + std::to_string(i));
            found = j;
        }
        if (found == n || used[found])
            throw PermutationFailure("no fresh coset for index " + std::to_string(i));
        used[found] = true;
        sigma[i] = found;
    }
    return sigma;
}

cplx hecke_on_cocycle(const DoubleCosetData& dc, const Evaluator& ev, const Mat2Q& gamma,
                      const TorsionPoint& x) {
    auto [scale, g] = clear_denominators(gamma);
    if (scale != 1 || !in_gamma1_transpose(g, dc.N))
        throw DomainError("hecke_on_cocycle needs gamma in the transpose congruence group");
    auto sigma = coset_permutation(dc, g);
    cplx acc = 0.0;
    for (size_t i = 0; i < dc.reps.size(); ++i) {
        const Mat2Z beta_i = transpose(dc.reps[i]);
        const Mat2Z beta_sj = transpose(dc.reps[sigma[i]]);
        Mat2Z gi;
        divide(beta_sj.adj() * g * beta_i, dc.p, gi);
        acc += theta_gamma(ev, gi.to_q(), fiberwise_point(beta_i, x));
    }
    return acc;
}

cplx hecke_modular(const DoubleCosetData& dc, const TauFn& F, const UpperHalfPoint& tau,
                   int weight) {
    cplx acc = 0.0;
    for (const auto& alpha : dc.reps) {
        const cplx den = static_cast<double>(alpha.c) * tau.tau + static_cast<double>(alpha.d);
        const cplx moved =
            (static_cast<double>(alpha.a) * tau.tau + static_cast<double>(alpha.b)) / den;
        cplx factor = 1.0;
        if (weight == 2) factor = static_cast<double>(alpha.det()) / (den * den);
        else if (weight != 0) throw DomainError("hecke_modular supports weight 0 or 2");
        acc += factor * F(UpperHalfPoint(moved));
    }
    return acc;
}

EquivarianceReport verify_equivariance(long long p, long long N, const UpperHalfPoint& tau,
                                       const Mat2Q& gamma, const TorsionPoint& x,
                                       const SeriesParams& params, cplx kappa) {
    if (!x.x1.is_zero())
        throw DomainError("equivariance check needs a section of the shape (0, x2)");
    DoubleCosetData dc = tp_reps(p, N);
    Evaluator ev(tau, params);
    EquivarianceReport rep{};
    rep.lhs = hecke_on_cocycle(dc, ev, gamma, x);
    TauFn F = [&](const UpperHalfPoint& t) {
        Evaluator evt(t, params);
        return theta_gamma(evt, gamma, x);
    };
    rep.rhs = hecke_modular(dc, F, tau, 2);
    rep.difference = std::abs(rep.lhs - rep.rhs);
    rep.kappa_residual = std::abs(rep.lhs - kappa * rep.rhs);
    return rep;
}

TorsionCycle delta_p_cycle(long long p) {
    if (p < 2) throw DomainError("delta_p needs a prime p");
    std::vector<std::pair<long long, TorsionPoint>> terms;
    for (long long a1 = 0; a1 < p; ++a1)
        for (long long b1 = 0; b1 < p; ++b1)
            for (long long a2 = 0; a2 < p; ++a2)
                for (long long b2 = 0; b2 < p; ++b2) {
                    if (a1 == 0 && b1 == 0 && a2 == 0 && b2 == 0) continue;
                    if (mod_pos(a1 * b2 - b1 * a2, p) != 0) continue;
                    terms.emplace_back(1, TorsionPoint(TorsionCoord(Rat(a1, p), Rat(b1, p)),
                                                       TorsionCoord(Rat(a2, p), Rat(b2, p))));
                }
    return TorsionCycle(std::move(terms));
}

}  // namespace thetalift
