#pragma once

#include "thetalift/cocycle.hpp"

namespace thetalift {

// Double-coset Hecke operators in both incarnations, and the numerical
// equivariance check between them.
//
// The two GL_2's of the correspondence pair by transpose duality. With the
// fiberwise column action (z1, z2) -> (a z1 + b z2, c z1 + d z2), the
// stabilizer of the section x = (0, x2) is the lower-triangular congruence
// group Gamma^1(N) = {det 1, b == 0, a == d == 1 mod N}, and theta_{tau,x}
// is additive there; the value theta_tau[gamma](x) at an N-torsion section
// x2 = (alpha, 0) is a weight-2 form of level Gamma_1(N) in tau. The T_p
// data is stored through the classical Gamma_1(N) representatives alpha_i
// (det p, a == 1 and c == 0 mod N, stabilizing (1,0) in (Z/N)^2); the
// modular operator slashes by the alpha_i directly, while the fiberwise
// operator uses their transposes beta_i = alpha_i^T, acting on values by
// (|det beta| beta^-1)^* and on the cocycle argument by the permutation
// gamma_i = beta_sigma(i)^-1 gamma beta_i inside Gamma^1(N). With these
// conventions the two operators agree on the lift with constant kappa = 1.

struct DoubleCosetData {
    long long p = 2;          // prime
    long long N = 1;          // level > 1
    std::vector<Mat2Z> reps;  // p+1 classical representatives, det p
};

bool in_gamma1(const Mat2Z& g, long long N);            // a==1, c==0 mod N
bool in_gamma1_transpose(const Mat2Z& g, long long N);  // a==1, b==0 mod N

// p coprime to N required; p+1 representatives of T_p, pairwise
// right-Gamma_1(N)-inequivalent.
DoubleCosetData tp_reps(long long p, long long N);

// (|det alpha| alpha^-1)^* f at x: f(adj(alpha) x), with -adj for det < 0.
cplx fiberwise_act(const Mat2Z& alpha, const PointFn& f, const TorsionPoint& x);
TorsionPoint fiberwise_point(const Mat2Z& alpha, const TorsionPoint& x);

// Fiberwise T_p on the cocycle, evaluated at (gamma, x): with beta_i the
// transposed representatives, sum_i theta[gamma_i](adj(beta_i) x), where
// sigma is the unique permutation with beta_sigma(i)^-1 gamma beta_i in
// Gamma^1(N). Requires gamma in Gamma^1(N).
cplx hecke_on_cocycle(const DoubleCosetData& dc, const Evaluator& ev, const Mat2Q& gamma,
                      const TorsionPoint& x);

// sigma itself; PermutationFailure if not uniquely solvable.
std::vector<size_t> coset_permutation(const DoubleCosetData& dc, const Mat2Z& gamma);

// weight-2 slash sum over the classical representatives:
// sum_i det(alpha_i) (c_i tau + d_i)^-2 F(alpha_i tau).
// weight 0 drops the automorphy factor (degree sanity mode).
using TauFn = std::function<cplx(const UpperHalfPoint&)>;
cplx hecke_modular(const DoubleCosetData& dc, const TauFn& F, const UpperHalfPoint& tau,
                   int weight = 2);

struct EquivarianceReport {
    cplx lhs, rhs;
    double difference;
    double kappa_residual;  // |lhs - kappa * rhs| with the supplied kappa
};

EquivarianceReport verify_equivariance(long long p, long long N, const UpperHalfPoint& tau,
                                       const Mat2Q& gamma, const TorsionPoint& x,
                                       const SeriesParams& params, cplx kappa = 1.0);

// All nonzero p-torsion points of T_tau whose two coordinate pairs are
// linearly dependent mod p, coefficient 1 each.
TorsionCycle delta_p_cycle(long long p);

}  // namespace thetalift
