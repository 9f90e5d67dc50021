#pragma once

#include "thetalift/cocycle.hpp"

namespace thetalift {

// The cocycle for GL_2 over an imaginary quadratic order Z[tau]: the same
// Bruhat-telescoped shape with complex-conjugated coefficients,
//
//   theta_cm[g](x) = -(conj(b)/conj(d)) E2(tau, x2)                  if c = 0
//                  = (a 1; c 0)_* (-conj(d)/(c conj(det g))) E2(tau, z2)
//                    + (1/c) (1 a; 0 c)_* E1 E1
//                    + (-conj(a)/conj(c)) E2(tau, x2)                otherwise
//
// with coefficient divisions done numerically in C and preimage fibers of
// size |N(det)| enumerated exactly. The unipotent (1 u; 0 1) lifts to
// -conj(u) E2(tau, z2). Restricted to rational integer entries this is the
// rational cocycle. Note the first coefficient conjugates det g but not the
// 1/c coming from the Weyl-side pushforward normalization; the telescoping
// identity forces that grouping, and the CM cocycle identity tests pin it.

cplx theta_gamma_cm(const Evaluator& ev, const CMContext& ctx, const Mat2O& g,
                    const TorsionPoint& x);

// (g . f)(x) = (1/det g) * sum over the |N(det)| preimages of f
cplx group_act_cm(const Evaluator& ev, const CMContext& ctx, const Mat2O& g, const PointFn& f,
                  const TorsionPoint& x);

// stratum check as in the rational case
std::vector<TorsionPoint> theta_e1_points_cm(const CMContext& ctx, const Mat2O& g,
                                             const TorsionPoint& x);
bool theta_e1_clean_cm(const CMContext& ctx, const Mat2O& g, const TorsionPoint& x);

}  // namespace thetalift
