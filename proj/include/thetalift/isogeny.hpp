#pragma once

#include <functional>
#include <vector>

#include "thetalift/domain.hpp"

namespace thetalift {

// Exact preimage enumeration under integral (and CM-integral) matrices,
// and the pushforward / pullback operators built from it.
//
// A matrix M in M_2(Z) acts on a point (z1, z2) of T_tau componentwise on
// the u-vector (u1, u2) and the v-vector (v1, v2), since z_j = u_j - tau v_j
// and the entries are integers. Preimage enumeration is therefore a pair of
// Z^2 / M Z^2 coset problems. In the CM case an order element s + t*tau acts
// on a factor's (u, -v) pair by [[s, t q], [t, s + t p]], so a matrix over
// the order acts on (u1, -v1, u2, -v2) by a 4x4 integer matrix.

struct SmithForm {
    // P * A * Q = D with P, Q unimodular, D diagonal (entries in diag)
    std::vector<std::vector<long long>> P, Q;
    std::vector<long long> diag;
};

SmithForm smith_form(std::vector<std::vector<long long>> A);

struct PreimageSet {
    Mat2Z source_matrix;
    TorsionPoint target;
    std::vector<TorsionPoint> points;  // lexicographically sorted
};

// Representatives of Z^2 / M Z^2, exactly |det M| of them.
std::vector<std::array<long long, 2>> coset_reps(const Mat2Z& m);

TorsionPoint apply(const Mat2Z& m, const TorsionPoint& x);
PreimageSet matrix_preimages(const Mat2Z& m, const TorsionPoint& x);

using PointFn = std::function<cplx(const TorsionPoint&)>;

cplx pushforward_sum(const Mat2Z& m, const PointFn& f, const TorsionPoint& x);
cplx pullback(const Mat2Z& m, const PointFn& f, const TorsionPoint& x);

// x -> f(c x) - c^4 f(x)
PointFn c_stabilize(const PointFn& f, long long c);

// CM variants: the regular-representation 2x2 block of an order element, the
// point action, and preimages with |N(det)| points.
std::array<std::array<long long, 2>, 2> order_matrix(const OrderElem& alpha, const CMContext& ctx);
TorsionPoint apply_cm(const CMContext& ctx, const Mat2O& m, const TorsionPoint& x);
std::vector<TorsionPoint> matrix_preimages_cm(const CMContext& ctx, const Mat2O& m,
                                              const TorsionPoint& x);
cplx pushforward_sum_cm(const CMContext& ctx, const Mat2O& m, const PointFn& f,
                        const TorsionPoint& x);

}  // namespace thetalift
