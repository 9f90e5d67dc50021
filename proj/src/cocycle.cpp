#include "thetalift/cocycle.hpp"

#include <span>

namespace thetalift {

namespace {

PointFn zero_fn() {
    return [](const TorsionPoint&) { return cplx(0.0); };
}

}  // namespace

cplx group_act(const Mat2Q& g, const PointFn& f, const TorsionPoint& x) {
    auto [scale, m] = clear_denominators(g);
    (void)scale;
    const long long det = m.det();
    if (det == 0) throw SingularMatrix("group action needs det != 0");
    return pushforward_sum(m, f, x) / static_cast<double>(det);
}

CocycleValue group_act_value(const Mat2Q& g, const CocycleValue& f) {
    PointFn inner = f.eval;
    return CocycleValue{[g, inner](const TorsionPoint& x) { return group_act(g, inner, x); }};
}

cplx theta_gamma(const Evaluator& ev, const Mat2Q& g, const TorsionPoint& x) {
    if (x.is_zero()) throw ZeroPoint("theta is undefined at the zero section");
    if (g.det().is_zero()) throw SingularMatrix("theta needs det != 0");
    auto [scale, m] = clear_denominators(g);
    (void)scale;
    const double det = static_cast<double>(m.det());
    if (m.c == 0) {
        return -static_cast<double>(m.b) / static_cast<double>(m.d) * ev.e2(x.x2);
    }
    const double a = static_cast<double>(m.a), c = static_cast<double>(m.c),
                 d = static_cast<double>(m.d);
    PointFn e2_second = [&ev](const TorsionPoint& p) { return ev.e2(p.x2); };
    PointFn e1e1 = [&ev](const TorsionPoint& p) { return ev.e1e1(p); };
    cplx t1 = -d / (c * det) * pushforward_sum(Mat2Z{m.a, 1, m.c, 0}, e2_second, x);
    cplx t2 = pushforward_sum(Mat2Z{1, m.a, 0, m.c}, e1e1, x) / c;
    cplx t3 = -a / c * ev.e2(x.x2);
    return t1 + t2 + t3;
}

CocycleValue theta_value(const Evaluator& ev, const Mat2Q& g) {
    return CocycleValue{[&ev, g](const TorsionPoint& x) { return theta_gamma(ev, g, x); }};
}

std::vector<TorsionPoint> theta_e1_points(const Mat2Q& g, const TorsionPoint& x) {
    auto [scale, m] = clear_denominators(g);
    (void)scale;
    if (m.c == 0) return {};
    return matrix_preimages(Mat2Z{1, m.a, 0, m.c}, x).points;
}

bool theta_e1_clean(const Mat2Q& g, const TorsionPoint& x) {
    for (const auto& p : theta_e1_points(g, x))
        if (p.x1.is_zero() || p.x2.is_zero()) return false;
    return true;
}

namespace {

CocycleValue base_value(const Evaluator& ev, const BruhatFactor& f) {
    switch (f.kind) {
        case BruhatFactor::Kind::Unipotent: {
            const double u = f.u.to_double();
            return CocycleValue{
                [&ev, u](const TorsionPoint& x) { return -u * ev.e2(x.x2); }};
        }
        case BruhatFactor::Kind::Diagonal:
            return CocycleValue{zero_fn()};
        default:
            return CocycleValue{[&ev](const TorsionPoint& x) { return ev.e1e1(x); }};
    }
}

CocycleValue telescoped_value(const Evaluator& ev, std::span<const BruhatFactor> word) {
    if (word.empty()) return CocycleValue{zero_fn()};
    CocycleValue head = base_value(ev, word.front());
    if (word.size() == 1) return head;
    CocycleValue acted = group_act_value(word.front().matrix(),
                                         telescoped_value(ev, word.subspan(1)));
    PointFn hf = head.eval, af = acted.eval;
    return CocycleValue{[hf, af](const TorsionPoint& x) { return af(x) + hf(x); }};
}

}  // namespace

cplx theta_telescoped(const Evaluator& ev, const std::vector<BruhatFactor>& word,
                      const TorsionPoint& x) {
    if (x.is_zero()) throw ZeroPoint("theta is undefined at the zero section");
    return telescoped_value(ev, word)(x);
}

cplx theta_cycle(const Evaluator& ev, const Mat2Q& g, const TorsionCycle& D) {
    cplx acc = 0.0;
    for (const auto& [coeff, pt] : D.terms)
        acc += static_cast<double>(coeff) * theta_gamma(ev, g, pt);
    return acc;
}

cplx theta_stabilized(const Evaluator& ev, const Mat2Q& g, const TorsionCycle& D, long long c) {
    const long long n = D.level();
    if (c <= 1 || (c - 1) % n != 0)
        throw BadAuxiliary("auxiliary c must be > 1 and == 1 mod " + std::to_string(n));
    const double c4 = static_cast<double>(c) * c * c * c;
    return (1.0 - c4) * theta_cycle(ev, g, D);
}

namespace {

TorsionCoord second_factor_image(const Mat2Z& g, const TorsionPoint& x) {
    // a v_i - c u_i acting on the pair (first factor, second factor)
    Rat u = Rat(g.a) * x.x2.u - Rat(g.c) * x.x1.u;
    Rat v = Rat(g.a) * x.x2.v - Rat(g.c) * x.x1.v;
    return TorsionCoord(u, v);
}

}  // namespace

cplx sl2_first_term(const Evaluator& ev, const Mat2Z& g, const TorsionCycle& D) {
    if (g.det() != 1) throw DomainError("sl2_first_term needs det = 1");
    if (g.c == 0) throw DomainError("sl2_first_term needs c != 0");
    // multiset {(t_i, a v_i - c u_i)} must equal {(t_i, v_i)}
    std::vector<std::pair<long long, TorsionCoord>> want, got;
    for (const auto& [t, pt] : D.terms) {
        want.emplace_back(t, pt.x2);
        got.emplace_back(t, second_factor_image(g, pt));
    }
    auto cmp = [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    };
    std::sort(want.begin(), want.end(), cmp);
    std::sort(got.begin(), got.end(), cmp);
    for (size_t i = 0; i < want.size(); ++i)
        if (!(want[i].first == got[i].first && want[i].second == got[i].second))
            throw StabilizerViolation("cycle is not stabilized: index " + std::to_string(i));
    cplx acc = 0.0;
    for (const auto& [t, pt] : D.terms) acc += static_cast<double>(t) * ev.e2(pt.x2);
    return -static_cast<double>(g.d) / static_cast<double>(g.c) * acc;
}

cplx first_pushforward_term(const Evaluator& ev, const Mat2Z& g, const TorsionCycle& D) {
    const double det = static_cast<double>(g.det());
    PointFn e2_second = [&ev](const TorsionPoint& p) { return ev.e2(p.x2); };
    cplx acc = 0.0;
    for (const auto& [t, pt] : D.terms)
        acc += static_cast<double>(t) * pushforward_sum(Mat2Z{g.a, 1, g.c, 0}, e2_second, pt);
    return -static_cast<double>(g.d) / (static_cast<double>(g.c) * det) * acc;
}

cplx theta_bernoulli(const Mat2Q& g, const TorsionPoint& x) {
    if (x.is_zero()) throw ZeroPoint("theta is undefined at the zero section");
    auto [scale, m] = clear_denominators(g);
    (void)scale;
    const double det = static_cast<double>(m.det());
    PointFn b2_second = [](const TorsionPoint& p) { return cplx(e2_cusp_limit(p.x2)); };
    PointFn b1b1 = [](const TorsionPoint& p) {
        return cplx(e1_cusp_limit(p.x1) * e1_cusp_limit(p.x2));
    };
    if (m.c == 0) {
        return -static_cast<double>(m.b) / static_cast<double>(m.d) * b2_second(x);
    }
    const double a = static_cast<double>(m.a), c = static_cast<double>(m.c),
                 d = static_cast<double>(m.d);
    cplx t1 = -d / (c * det) * pushforward_sum(Mat2Z{m.a, 1, m.c, 0}, b2_second, x);
    cplx t2 = pushforward_sum(Mat2Z{1, m.a, 0, m.c}, b1b1, x) / c;
    cplx t3 = -a / c * b2_second(x);
    return t1 + t2 + t3;
}

CuspReport cusp_degeneration(const Mat2Q& g, const TorsionPoint& x,
                             const std::vector<double>& y_ladder, const SeriesParams& params) {
    if (y_ladder.empty() || y_ladder.front() < 10.0)
        throw DomainError("cusp ladder must start at y >= 10");
    for (size_t i = 1; i < y_ladder.size(); ++i)
        if (!(y_ladder[i] > y_ladder[i - 1])) throw DomainError("cusp ladder must increase");

    CuspReport rep;
    rep.ys = y_ladder;
    rep.bernoulli_val = theta_bernoulli(g, x);
    for (double y : y_ladder) {
        Evaluator ev(UpperHalfPoint(cplx(0.0, y)), params);
        rep.theta_vals.push_back(theta_gamma(ev, g, x));
    }
    const bool bern_zero = std::abs(rep.bernoulli_val) < 1e-14;
    if (bern_zero) {
        rep.stabilized = true;
        for (const cplx& v : rep.theta_vals) {
            rep.ratios.push_back(v);
            if (std::abs(v) > 1e-9) rep.stabilized = false;
        }
        rep.constant = 0.0;
        return rep;
    }
    for (const cplx& v : rep.theta_vals) rep.ratios.push_back(v / rep.bernoulli_val);
    rep.stabilized = true;
    for (size_t i = 1; i < rep.ratios.size(); ++i)
        if (std::abs(rep.ratios[i] - rep.ratios[i - 1]) > 1e-3) rep.stabilized = false;
    rep.constant = rep.ratios.back();
    return rep;
}

}  // namespace thetalift
