#pragma once

#include "thetalift/bruhat.hpp"
#include "thetalift/isogeny.hpp"
#include "thetalift/kronecker.hpp"

namespace thetalift {

// The theta-lift cocycle: for g = (a b; c d) over Q with det != 0,
//
//   theta[g](x) = kU (b/d) E2(tau, x2)                              if c = 0
//               = (a 1; c 0)_* (kU d/(c det g)) E2(tau, z2)
//                 + (1/c) (1 a; 0 c)_* E1(tau, z1) E1(tau, z2)
//                 + (kU a/c) E2(tau, x2)                            otherwise
//
// where M_* is the plain preimage sum (the coefficients already carry the
// determinant factors). The group acts on values by the form-pushforward
// normalization (g . f)(x) = (1/det g) sum over preimages of f, and the
// telescoping relation theta[g2 g1] = g2 . theta[g1] + theta[g2] holds.
// Rational matrices are cleared to integral ones by the least positive
// scalar; scalar matrices act trivially, which is itself a tested property.
//
// kU = -1 is the unipotent lift constant: with E1 = (i/2pi) K_1(1,.) and
// E2 = -(1/4 pi y) K_2(1,.), the Weyl lift E1 E1 forces the unipotent lift
// -u E2 through the addition identity
//   E1(z1)E1(z2) + E1(z1-z2)(E1(z1) - E1(z2))
//     = -(E2(z1-z2) + E2(z1) + E2(z2)),
// whose cusp degeneration is the periodic-Bernoulli addition identity.

struct CocycleValue {
    PointFn eval;
    cplx operator()(const TorsionPoint& x) const { return eval(x); }
};

// (g . f)(x) = (1/det g') * pushforward_sum(g', f, x), g' = cleared g
cplx group_act(const Mat2Q& g, const PointFn& f, const TorsionPoint& x);
CocycleValue group_act_value(const Mat2Q& g, const CocycleValue& f);

cplx theta_gamma(const Evaluator& ev, const Mat2Q& g, const TorsionPoint& x);
CocycleValue theta_value(const Evaluator& ev, const Mat2Q& g);

// The points where theta[g](x) evaluates E1 factors (empty when c = 0), and
// whether none of them lies on a coordinate stratum z1 = 0 or z2 = 0. The
// pointwise cocycle identity is exact only for stratum-clean configurations;
// property suites sample accordingly.
std::vector<TorsionPoint> theta_e1_points(const Mat2Q& g, const TorsionPoint& x);
bool theta_e1_clean(const Mat2Q& g, const TorsionPoint& x);

cplx theta_telescoped(const Evaluator& ev, const std::vector<BruhatFactor>& word,
                      const TorsionPoint& x);

cplx theta_cycle(const Evaluator& ev, const Mat2Q& g, const TorsionCycle& D);

// (1 - c^4) * theta_cycle for auxiliary c > 1 with c == 1 mod level(D)
cplx theta_stabilized(const Evaluator& ev, const Mat2Q& g, const TorsionCycle& D, long long c);

// Simplified first pushforward term for g in SL_2(Z) with c != 0 acting on a
// cycle stabilized by g^-1: equals (kU d/c) sum_i t_i E2(tau, v_i), where
// v_i is the second-factor coordinate pair of x_i. The stabilizer condition
// a v_i - c u_i = v_sigma(i) (coefficients matching) is checked exactly.
cplx sl2_first_term(const Evaluator& ev, const Mat2Z& g, const TorsionCycle& D);
cplx first_pushforward_term(const Evaluator& ev, const Mat2Z& g, const TorsionCycle& D);

// Cusp degeneration: theta at tau = iy against the Bernoulli cocycle (same
// formula with E1 -> B1hat(v) and E2 -> -B2hat(v)/2, the y -> infinity
// limits of the series), reporting the ratio ladder.
struct CuspReport {
    std::vector<double> ys;
    std::vector<cplx> theta_vals;
    cplx bernoulli_val;
    std::vector<cplx> ratios;
    bool stabilized;
    cplx constant;
};

cplx theta_bernoulli(const Mat2Q& g, const TorsionPoint& x);
CuspReport cusp_degeneration(const Mat2Q& g, const TorsionPoint& x,
                             const std::vector<double>& y_ladder, const SeriesParams& params);

// frozen cusp limits of the series (determined against the evaluator):
//   E1(iy, (u,v)) -> B1hat(v),   E2(iy, (u,v)) -> -B2hat(v)/2
inline double e1_cusp_limit(const TorsionCoord& x) {
    return periodic_bernoulli(1, x.v).to_double();
}
inline double e2_cusp_limit(const TorsionCoord& x) {
    return -0.5 * periodic_bernoulli(2, x.v).to_double();
}

}  // namespace thetalift
