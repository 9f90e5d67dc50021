#include "thetalift/cm.hpp"

namespace thetalift {

cplx group_act_cm(const Evaluator& ev, const CMContext& ctx, const Mat2O& g, const PointFn& f,
                  const TorsionPoint& x) {
    (void)ev;
    const cplx det = ctx.to_complex(g.det(ctx));
    if (std::abs(det) < 1e-15) throw SingularMatrix("CM action needs det != 0");
    return pushforward_sum_cm(ctx, g, f, x) / det;
}

std::vector<TorsionPoint> theta_e1_points_cm(const CMContext& ctx, const Mat2O& g,
                                             const TorsionPoint& x) {
    if (g.c.is_zero()) return {};
    Mat2O m2{OrderElem{1, 0}, g.a, OrderElem{0, 0}, g.c};
    return matrix_preimages_cm(ctx, m2, x);
}

bool theta_e1_clean_cm(const CMContext& ctx, const Mat2O& g, const TorsionPoint& x) {
    for (const auto& p : theta_e1_points_cm(ctx, g, x))
        if (p.x1.is_zero() || p.x2.is_zero()) return false;
    return true;
}

cplx theta_gamma_cm(const Evaluator& ev, const CMContext& ctx, const Mat2O& g,
                    const TorsionPoint& x) {
    if (x.is_zero()) throw ZeroPoint("theta is undefined at the zero section");
    const OrderElem dete = g.det(ctx);
    if (ctx.norm(dete) == 0) throw SingularMatrix("theta_cm needs det != 0");
    const cplx det = ctx.to_complex(dete);
    const cplx a = ctx.to_complex(g.a), b = ctx.to_complex(g.b), c = ctx.to_complex(g.c),
               d = ctx.to_complex(g.d);
    PointFn e2_second = [&ev](const TorsionPoint& p) { return ev.e2(p.x2); };
    PointFn e1e1 = [&ev](const TorsionPoint& p) { return ev.e1e1(p); };
    if (g.c.is_zero()) {
        return -std::conj(b) / std::conj(d) * ev.e2(x.x2);
    }
    Mat2O m1{g.a, OrderElem{1, 0}, g.c, OrderElem{0, 0}};
    Mat2O m2{OrderElem{1, 0}, g.a, OrderElem{0, 0}, g.c};
    cplx t1 = -std::conj(d) / (c * std::conj(det)) * pushforward_sum_cm(ctx, m1, e2_second, x);
    cplx t2 = pushforward_sum_cm(ctx, m2, e1e1, x) / c;
    cplx t3 = -std::conj(a) / std::conj(c) * ev.e2(x.x2);
    return t1 + t2 + t3;
}

}  // namespace thetalift
