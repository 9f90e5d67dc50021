#include <doctest.h>

#include <random>
#include <set>

#include "thetalift/hecke.hpp"

using namespace thetalift;

namespace {
Mat2Q mq(long long a, long long b, long long c, long long d) {
    return Mat2Q(Rat(a), Rat(b), Rat(c), Rat(d));
}
const SeriesParams P = [] { SeriesParams p; p.tol = 1e-9; return p; }();
}  // namespace

TEST_CASE("coset representatives for T_p") {
    auto dc = tp_reps(2, 3);
    CHECK(dc.reps.size() == 3);
    for (const auto& r : dc.reps) {
        CHECK(r.det() == 2);
        CHECK((r.a - 1) % 3 == 0);
        CHECK(r.c % 3 == 0);
    }
    CHECK_THROWS_AS(tp_reps(5, 5), BadLevel);
    CHECK_THROWS_AS(tp_reps(2, 1), BadLevel);
    auto dc35 = tp_reps(3, 5);
    CHECK(dc35.reps.size() == 4);
}

TEST_CASE("coset permutation is a bijection for random group elements") {
    auto dc = tp_reps(2, 5);
    std::mt19937_64 rng(3);
    auto r = [&] { return (long long)(rng() % 5) - 2; };
    int done = 0;
    while (done < 10) {
        // random element of the transpose congruence group via generators
        Mat2Z g{1, 0, 0, 1};
        for (int k = 0; k < 4; ++k)
            g = g * ((k % 2) ? Mat2Z{1, 5 * r(), 0, 1} : Mat2Z{1, 0, r(), 1});
        if (!in_gamma1_transpose(g, 5)) continue;
        auto sigma = coset_permutation(dc, g);
        std::set<size_t> seen(sigma.begin(), sigma.end());
        CHECK(seen.size() == sigma.size());
        ++done;
    }
    CHECK_THROWS_AS(coset_permutation(dc, Mat2Z{1, 1, 0, 1}), DomainError);
}

TEST_CASE("fiberwise action") {
    UpperHalfPoint tau(cplx(0.3, 1.1));
    Evaluator ev(tau, P);
    TorsionPoint x(TorsionCoord(Rat(1, 5), Rat(0)), TorsionCoord(Rat(2, 5), Rat(1, 5)));
    PointFn f = [&](const TorsionPoint& p) { return ev.e2(p.x2) + 2.0 * ev.e1e1(p); };
    // identity
    CHECK(fiberwise_act(Mat2Z{1, 0, 0, 1}, f, x) == f(x));
    // scalar p: adj(pI) = pI
    CHECK(fiberwise_act(Mat2Z{3, 0, 0, 3}, f, x) == f(apply(Mat2Z{3, 0, 0, 3}, x)));
    // on SL2 it coincides with the group action on values
    for (Mat2Z g : {Mat2Z{1, 2, 0, 1}, Mat2Z{1, 0, -1, 1}, Mat2Z{2, 1, 1, 1}}) {
        CHECK(std::abs(fiberwise_act(g, f, x) - group_act(g.to_q(), f, x)) < 1e-12);
    }
    // composition on points, det > 0
    Mat2Z a{2, 1, 0, 1}, b{1, 0, 1, 3};
    CHECK(fiberwise_point(a * b, x) == fiberwise_point(b, fiberwise_point(a, x)));
}

TEST_CASE("modular slash sums") {
    auto dc = tp_reps(2, 5);
    UpperHalfPoint tau(cplx(0.3, 1.1));
    // weight-0 degree check: constant 1 maps to p+1
    TauFn one = [](const UpperHalfPoint&) { return cplx(1.0); };
    CHECK(std::abs(hecke_modular(dc, one, tau, 0) - cplx(3.0)) < 1e-14);
    // weight-2 on a constant: computable slash sum
    cplx expect = 0;
    for (const auto& al : dc.reps) {
        cplx den = (double)al.c * tau.tau + (double)al.d;
        expect += (double)al.det() / (den * den);
    }
    CHECK(std::abs(hecke_modular(dc, one, tau, 2) - expect) < 1e-14);
    CHECK_THROWS_AS(hecke_modular(dc, one, tau, 5), DomainError);
    // weight-2 sum of a holomorphic family stays holomorphic in tau
    SeriesParams PH;
    PH.tol = 1e-11;
    TorsionCoord c(Rat(1, 5), Rat(0));
    TauFn F = [&](const UpperHalfPoint& t) { return e2(t, c, PH); };
    const double h = 1e-4;
    auto val = [&](cplx t) { return hecke_modular(dc, F, UpperHalfPoint(t), 2); };
    cplx dx = (val(tau.tau + h) - val(tau.tau - h)) / (2 * h);
    cplx dy = (val(tau.tau + cplx(0, h)) - val(tau.tau - cplx(0, h))) / (2 * h);
    CHECK(std::abs(0.5 * (dx + cplx(0, 1) * dy)) < 1e-4);
}

TEST_CASE("hecke equivariance") {
    UpperHalfPoint tau(cplx(0.3, 1.1));
    TorsionPoint x(TorsionCoord(Rat(0), Rat(0)), TorsionCoord(Rat(1, 5), Rat(0)));
    // gamma = identity: both sides vanish
    {
        auto dc = tp_reps(2, 5);
        Evaluator ev(tau, P);
        CHECK(std::abs(hecke_on_cocycle(dc, ev, mq(1, 0, 0, 1), x)) < 1e-12);
    }
    for (long long p : {2LL, 3LL}) {
        auto rep = verify_equivariance(p, 5, tau, mq(1, 0, 1, 1), x, P);
        CHECK(rep.difference < 1e-6);
        CHECK(rep.kappa_residual < 1e-6);
    }
    auto rep = verify_equivariance(3, 5, tau, mq(1, 0, 5, 1), x, P);
    CHECK(rep.difference < 1e-6);
    // wrong section shape is rejected
    TorsionPoint bad(TorsionCoord(Rat(1, 5), Rat(0)), TorsionCoord(Rat(0), Rat(0)));
    CHECK_THROWS_AS(verify_equivariance(2, 5, tau, mq(1, 0, 1, 1), bad, P), DomainError);
    // gamma outside the fiberwise congruence group is rejected
    {
        auto dc = tp_reps(2, 5);
        Evaluator ev(tau, P);
        CHECK_THROWS_AS(hecke_on_cocycle(dc, ev, mq(1, 1, 0, 1), x), DomainError);
    }
}

TEST_CASE("delta_p cycles") {
    // exhaustive enumeration is the oracle: count dependent nonzero pairs
    for (long long p : {2LL, 3LL}) {
        auto d = delta_p_cycle(p);
        long long count = 0;
        for (long long a1 = 0; a1 < p; ++a1)
            for (long long b1 = 0; b1 < p; ++b1)
                for (long long a2 = 0; a2 < p; ++a2)
                    for (long long b2 = 0; b2 < p; ++b2) {
                        if (a1 == 0 && b1 == 0 && a2 == 0 && b2 == 0) continue;
                        bool dep = false;  // some (l,m) != (0,0) with l v1 + m v2 == 0
                        for (long long l = 0; l < p && !dep; ++l)
                            for (long long m = 0; m < p && !dep; ++m) {
                                if (l == 0 && m == 0) continue;
                                if ((l * a1 + m * a2) % p == 0 && (l * b1 + m * b2) % p == 0)
                                    dep = true;
                            }
                        if (dep) ++count;
                    }
        CHECK((long long)d.terms.size() == count);
        // every returned pair has vanishing 2x2 determinant mod p
        for (const auto& [t, pt] : d.terms) {
            CHECK(t == 1);
            long long a1 = pt.x1.u.num * (p / pt.x1.u.den), b1 = pt.x1.v.num * (p / pt.x1.v.den);
            long long a2 = pt.x2.u.num * (p / pt.x2.u.den), b2 = pt.x2.v.num * (p / pt.x2.v.den);
            CHECK((a1 * b2 - b1 * a2) % p == 0);
        }
    }
    // frozen counts from the enumeration: T[p] has p^4 points total
    CHECK(delta_p_cycle(2).terms.size() == 9);
    CHECK(delta_p_cycle(3).terms.size() == 32);
}
