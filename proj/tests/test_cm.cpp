#include <doctest.h>

#include <random>

#include "thetalift/cm.hpp"

using namespace thetalift;

namespace {
const SeriesParams P = [] { SeriesParams p; p.tol = 1e-10; return p; }();
}

TEST_CASE("cm unipotent lift conjugates the entry") {
    UpperHalfPoint ti = UpperHalfPoint::from_cm(0, -1);
    CMContext ctx(ti);
    Evaluator ev(ti, P);
    TorsionPoint x(TorsionCoord(Rat(1, 5), Rat(0)), TorsionCoord(Rat(2, 5), Rat(1, 5)));
    // g = (1 tau; 0 1) over Z[i]: lift is -conj(tau) E2 = i E2 at tau = i
    Mat2O g{OrderElem{1, 0}, OrderElem{0, 1}, OrderElem{0, 0}, OrderElem{1, 0}};
    CHECK(std::abs(theta_gamma_cm(ev, ctx, g, x) - cplx(0, 1) * ev.e2(x.x2)) == 0.0);
    CHECK_THROWS_AS(theta_gamma_cm(ev, ctx, g, TorsionPoint()), ZeroPoint);
    Mat2O sing{OrderElem{1, 0}, OrderElem{1, 0}, OrderElem{1, 0}, OrderElem{1, 0}};
    CHECK_THROWS_AS(theta_gamma_cm(ev, ctx, sing, x), SingularMatrix);
}

TEST_CASE("restriction to rational integer matrices") {
    UpperHalfPoint ti = UpperHalfPoint::from_cm(0, -1);
    CMContext ctx(ti);
    Evaluator ev(ti, P);
    std::mt19937_64 rng(11);
    auto r = [&] { return (long long)(rng() % 7) - 3; };
    int done = 0;
    while (done < 25) {
        Mat2Z m{r(), r(), r(), r()};
        if (m.det() == 0) continue;
        Mat2O mo{OrderElem{m.a, 0}, OrderElem{m.b, 0}, OrderElem{m.c, 0}, OrderElem{m.d, 0}};
        TorsionPoint x(TorsionCoord(Rat((long long)(rng() % 5), 5), Rat((long long)(rng() % 5), 5)),
                       TorsionCoord(Rat((long long)(rng() % 5), 5), Rat((long long)(rng() % 5), 5)));
        if (x.is_zero()) continue;
        CHECK(std::abs(theta_gamma_cm(ev, ctx, mo, x) - theta_gamma(ev, m.to_q(), x)) < 1e-9);
        ++done;
    }
}

TEST_CASE("cm cocycle identity over both small orders") {
    std::mt19937_64 rng(13);
    auto roe = [&] { return OrderElem{(long long)(rng() % 5) - 2, (long long)(rng() % 5) - 2}; };
    for (auto [pp, qq] : std::vector<std::pair<long long, long long>>{{0, -1}, {-1, -1}}) {
        UpperHalfPoint t = UpperHalfPoint::from_cm(pp, qq);
        CMContext ctx(t);
        Evaluator ev(t, P);
        int done = 0;
        while (done < 10) {
            Mat2O g1{roe(), roe(), roe(), roe()};
            Mat2O g2{roe(), roe(), roe(), roe()};
            if (ctx.norm(g1.det(ctx)) == 0 || ctx.norm(g2.det(ctx)) == 0) continue;
            Mat2O g21 = mul(ctx, g2, g1);
            TorsionPoint x(
                TorsionCoord(Rat((long long)(rng() % 5), 5), Rat((long long)(rng() % 5), 5)),
                TorsionCoord(Rat((long long)(rng() % 5), 5), Rat((long long)(rng() % 5), 5)));
            if (x.is_zero()) continue;
            bool clean = theta_e1_clean_cm(ctx, g21, x) && theta_e1_clean_cm(ctx, g2, x);
            if (clean)
                for (const auto& q : matrix_preimages_cm(ctx, g2, x))
                    if (!theta_e1_clean_cm(ctx, g1, q)) { clean = false; break; }
            if (!clean) continue;
            cplx lhs = theta_gamma_cm(ev, ctx, g21, x);
            PointFn th1 = [&](const TorsionPoint& q) { return theta_gamma_cm(ev, ctx, g1, q); };
            cplx rhs = group_act_cm(ev, ctx, g2, th1, x) + theta_gamma_cm(ev, ctx, g2, x);
            CHECK(std::abs(lhs - rhs) < 1e-9);
            ++done;
        }
    }
}
