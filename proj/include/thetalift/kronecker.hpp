#pragma once

#include <map>
#include <tuple>

#include "thetalift/domain.hpp"

namespace thetalift {

// Evaluation of the Kronecker-Eisenstein lattice series
//
//   K_a(s, tau, z, u) = sum' over w in Z + Z tau of
//       conj(w + z)^a / |w + z|^(2s) * exp(2 pi i Im(w conj(u)) / y)
//
// (the primed sum omits w + z = 0), together with the two specializations
// driving everything else:
//
//   E1(tau, z) = (i / 2 pi)   K_1(1, tau, z, 0)
//   E2(tau, z) = -(1/(4 pi y)) K_2(1, tau, z, 0)
//
// k_direct sums the series where it converges absolutely. k_continued uses
// the incomplete-gamma split of the Mellin integral at params.split, giving
// two exponentially convergent sums valid for every s away from the poles
// (s = 0 with z in the lattice and a = 0; s = 1 with u in the lattice and
// a = 0). E1 is odd and E2 even in z; both are lattice-periodic; at torsion
// points they specialize to weight-1 and weight-2 Eisenstein series in tau.

struct SeriesParams {
    double tol = 1e-8;       // absolute error target
    int max_radius = 4000;   // lattice truncation bound
    double split = 1.0;      // Mellin split at t = split * pi / y

    void validate() const {
        if (!(tol > 0)) throw DomainError("tol must be positive");
        if (max_radius < 10) throw DomainError("max_radius must be at least 10");
        if (!(split > 0)) throw DomainError("split must be positive");
    }
};

struct KroneckerArgs {
    int a = 0;
    cplx s = 1.0;
    cplx z = 0.0;
    cplx u_char = 0.0;
};

struct EvalResult {
    cplx value;
    double est_error;
};

// Distance from z to the nearest point of Z + Z tau, and membership test.
double lattice_distance(const UpperHalfPoint& tau, cplx z);
bool on_lattice(const UpperHalfPoint& tau, cplx z, double eps = 1e-9);

EvalResult k_direct(const UpperHalfPoint& tau, const KroneckerArgs& args,
                    const SeriesParams& params);
EvalResult k_continued(const UpperHalfPoint& tau, const KroneckerArgs& args,
                       const SeriesParams& params);

cplx e1(const UpperHalfPoint& tau, cplx z, const SeriesParams& params);
cplx e2(const UpperHalfPoint& tau, cplx z, const SeriesParams& params);
cplx e1(const UpperHalfPoint& tau, const TorsionCoord& x, const SeriesParams& params);
cplx e2(const UpperHalfPoint& tau, const TorsionCoord& x, const SeriesParams& params);

// Periodic Bernoulli polynomials: B1(t) = t - 1/2 on (0,1) with value 0 at 0,
// B2(t) = t^2 - t + 1/6 on [0,1).
Rat periodic_bernoulli(int k, const Rat& t);

// Caching wrapper around e1/e2 at exact torsion coordinates. Pure function
// of (tau, params, coordinate); the cache only memoizes.
class Evaluator {
public:
    Evaluator(const UpperHalfPoint& tau, const SeriesParams& params)
        : tau_(tau), params_(params) {
        params_.validate();
    }

    const UpperHalfPoint& tau() const { return tau_; }
    const SeriesParams& params() const { return params_; }

    cplx e1(const TorsionCoord& x) const;
    cplx e2(const TorsionCoord& x) const;
    cplx e1e1(const TorsionPoint& p) const { return e1(p.x1) * e1(p.x2); }

private:
    UpperHalfPoint tau_;
    SeriesParams params_;
    using Key = std::tuple<int, long long, long long, long long, long long>;
    mutable std::map<Key, cplx> cache_;
};

}  // namespace thetalift
