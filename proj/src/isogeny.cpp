#include "thetalift/isogeny.hpp"

#include <algorithm>
#include <cstdlib>

namespace thetalift {

namespace {

using Row = std::vector<long long>;
using Matrix = std::vector<Row>;

Matrix identity(size_t n) {
    Matrix m(n, Row(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

void add_row(Matrix& m, size_t dst, size_t src, long long k) {
    for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += k * m[src][j];
}

void add_col(Matrix& m, size_t dst, size_t src, long long k) {
    for (size_t i = 0; i < m.size(); ++i) m[i][dst] += k * m[i][src];
}

}  // namespace

SmithForm smith_form(Matrix A) {
    const size_t n = A.size();
    Matrix P = identity(n), Q = identity(n);
    for (size_t t = 0; t < n; ++t) {
        while (true) {
            // pivot: smallest nonzero |entry| in the trailing block
            size_t pi = n, pj = n;
            long long best = 0;
            for (size_t i = t; i < n; ++i)
                for (size_t j = t; j < n; ++j)
                    if (A[i][j] != 0 && (best == 0 || std::llabs(A[i][j]) < best)) {
                        best = std::llabs(A[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (pi == n) break;  // trailing block is zero
            if (pi != t) { std::swap(A[pi], A[t]); std::swap(P[pi], P[t]); }
            if (pj != t) {
                for (size_t i = 0; i < n; ++i) std::swap(A[i][pj], A[i][t]);
                for (size_t i = 0; i < n; ++i) std::swap(Q[i][pj], Q[i][t]);
            }
            bool clean = true;
            for (size_t i = t + 1; i < n; ++i)
                if (A[i][t] != 0) {
                    long long k = A[i][t] / A[t][t];
                    add_row(A, i, t, -k);
                    add_row(P, i, t, -k);
                    if (A[i][t] != 0) clean = false;
                }
            for (size_t j = t + 1; j < n; ++j)
                if (A[t][j] != 0) {
                    long long k = A[t][j] / A[t][t];
                    add_col(A, j, t, -k);
                    add_col(Q, j, t, -k);
                    if (A[t][j] != 0) clean = false;
                }
            if (clean) {
                bool zeroed = true;
                for (size_t i = t + 1; i < n && zeroed; ++i) zeroed = A[i][t] == 0;
                for (size_t j = t + 1; j < n && zeroed; ++j) zeroed = A[t][j] == 0;
                if (zeroed) break;
            }
        }
    }
    SmithForm out;
    out.P = std::move(P);
    out.Q = std::move(Q);
    out.diag.resize(n);
    for (size_t i = 0; i < n; ++i) out.diag[i] = A[i][i];
    return out;
}

namespace {

// all solutions w (mod Z^n) of M w == t (mod Z^n), |det M| of them
std::vector<std::vector<Rat>> solve_mod1(const Matrix& M, const std::vector<Rat>& t) {
    const size_t n = M.size();
    SmithForm sf = smith_form(M);
    for (long long d : sf.diag)
        if (d == 0) throw SingularMatrix("preimage enumeration needs det != 0");
    // rhs' = P t
    std::vector<Rat> rhs(n, Rat(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) rhs[i] = rhs[i] + Rat(sf.P[i][j]) * t[j];
    // per-coordinate solutions of d_i w'_i == rhs_i, then w = Q w'
    std::vector<std::vector<Rat>> per(n);
    for (size_t i = 0; i < n; ++i) {
        long long d = std::llabs(sf.diag[i]);
        Rat base = rhs[i] / Rat(sf.diag[i]);
        for (long long k = 0; k < d; ++k)
            per[i].push_back((base + Rat(k, sf.diag[i])).mod1());
    }
    std::vector<std::vector<Rat>> out;
    std::vector<size_t> idx(n, 0);
    while (true) {
        std::vector<Rat> wp(n);
        for (size_t i = 0; i < n; ++i) wp[i] = per[i][idx[i]];
        std::vector<Rat> w(n, Rat(0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) w[i] = w[i] + Rat(sf.Q[i][j]) * wp[j];
        for (auto& c : w) c = c.mod1();
        out.push_back(std::move(w));
        size_t k = 0;
        while (k < n && ++idx[k] == per[k].size()) idx[k++] = 0;
        if (k == n) break;
    }
    return out;
}

Matrix to_matrix(const Mat2Z& m) { return {{m.a, m.b}, {m.c, m.d}}; }

}  // namespace

std::vector<std::array<long long, 2>> coset_reps(const Mat2Z& m) {
    if (m.det() == 0) throw SingularMatrix("coset_reps needs det != 0");
    SmithForm sf = smith_form(to_matrix(m));
    // y == y' mod M Z^2  iff  P y == P y' mod D Z^2; reps are P^-1 (k1, k2)
    long long det_p = sf.P[0][0] * sf.P[1][1] - sf.P[0][1] * sf.P[1][0];  // +-1
    Matrix pinv = {{sf.P[1][1] / det_p, -sf.P[0][1] / det_p},
                   {-sf.P[1][0] / det_p, sf.P[0][0] / det_p}};
    std::vector<std::array<long long, 2>> out;
    for (long long k1 = 0; k1 < std::llabs(sf.diag[0]); ++k1)
        for (long long k2 = 0; k2 < std::llabs(sf.diag[1]); ++k2)
            out.push_back({pinv[0][0] * k1 + pinv[0][1] * k2, pinv[1][0] * k1 + pinv[1][1] * k2});
    std::sort(out.begin(), out.end());
    return out;
}

TorsionPoint apply(const Mat2Z& m, const TorsionPoint& x) {
    // same integer matrix on the u-vector and on the v-vector
    Rat u1 = Rat(m.a) * x.x1.u + Rat(m.b) * x.x2.u;
    Rat u2 = Rat(m.c) * x.x1.u + Rat(m.d) * x.x2.u;
    Rat v1 = Rat(m.a) * x.x1.v + Rat(m.b) * x.x2.v;
    Rat v2 = Rat(m.c) * x.x1.v + Rat(m.d) * x.x2.v;
    return TorsionPoint(TorsionCoord(u1, v1), TorsionCoord(u2, v2));
}

PreimageSet matrix_preimages(const Mat2Z& m, const TorsionPoint& x) {
    if (m.det() == 0) throw SingularMatrix("matrix_preimages needs det != 0");
    Matrix M = to_matrix(m);
    auto us = solve_mod1(M, {x.x1.u, x.x2.u});
    auto vs = solve_mod1(M, {x.x1.v, x.x2.v});
    PreimageSet out;
    out.source_matrix = m;
    out.target = x;
    out.points.reserve(us.size() * vs.size());
    for (const auto& u : us)
        for (const auto& v : vs)
            out.points.emplace_back(TorsionCoord(u[0], v[0]), TorsionCoord(u[1], v[1]));
    std::sort(out.points.begin(), out.points.end());
    return out;
}

cplx pushforward_sum(const Mat2Z& m, const PointFn& f, const TorsionPoint& x) {
    cplx acc = 0.0;
    for (const auto& p : matrix_preimages(m, x).points) acc += f(p);
    return acc;
}

cplx pullback(const Mat2Z& m, const PointFn& f, const TorsionPoint& x) {
    return f(apply(m, x));
}

PointFn c_stabilize(const PointFn& f, long long c) {
    if (c <= 1) throw BadAuxiliary("c_stabilize needs c > 1");
    return [f, c](const TorsionPoint& x) {
        Mat2Z scalar{c, 0, 0, c};
        const double c4 = static_cast<double>(c) * c * c * c;
        return f(apply(scalar, x)) - c4 * f(x);
    };
}

std::array<std::array<long long, 2>, 2> order_matrix(const OrderElem& alpha, const CMContext& ctx) {
    return {{{alpha.s, alpha.t * ctx.q}, {alpha.t, alpha.s + alpha.t * ctx.p}}};
}

namespace {

// 4x4 block matrix of the action on (u1, -v1, u2, -v2)
Matrix cm_block_matrix(const CMContext& ctx, const Mat2O& m) {
    auto A = order_matrix(m.a, ctx), B = order_matrix(m.b, ctx);
    auto C = order_matrix(m.c, ctx), D = order_matrix(m.d, ctx);
    Matrix out(4, Row(4, 0));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            out[i][j] = A[i][j];
            out[i][j + 2] = B[i][j];
            out[i + 2][j] = C[i][j];
            out[i + 2][j + 2] = D[i][j];
        }
    return out;
}

std::vector<Rat> stack_cm(const TorsionPoint& x) {
    return {x.x1.u, -x.x1.v, x.x2.u, -x.x2.v};
}

TorsionPoint unstack_cm(const std::vector<Rat>& w) {
    return TorsionPoint(TorsionCoord(w[0], -w[1]), TorsionCoord(w[2], -w[3]));
}

}  // namespace

TorsionPoint apply_cm(const CMContext& ctx, const Mat2O& m, const TorsionPoint& x) {
    Matrix M = cm_block_matrix(ctx, m);
    auto w = stack_cm(x);
    std::vector<Rat> out(4, Rat(0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i] = out[i] + Rat(M[i][j]) * w[j];
    return unstack_cm(out);
}

std::vector<TorsionPoint> matrix_preimages_cm(const CMContext& ctx, const Mat2O& m,
                                              const TorsionPoint& x) {
    if (ctx.norm(m.det(ctx)) == 0) throw SingularMatrix("CM preimages need det != 0");
    auto sols = solve_mod1(cm_block_matrix(ctx, m), stack_cm(x));
    std::vector<TorsionPoint> out;
    out.reserve(sols.size());
    for (const auto& w : sols) out.push_back(unstack_cm(w));
    std::sort(out.begin(), out.end());
    return out;
}

cplx pushforward_sum_cm(const CMContext& ctx, const Mat2O& m, const PointFn& f,
                        const TorsionPoint& x) {
    cplx acc = 0.0;
    for (const auto& p : matrix_preimages_cm(ctx, m, x)) acc += f(p);
    return acc;
}

}  // namespace thetalift
