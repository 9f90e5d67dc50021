#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "thetalift/rational.hpp"

namespace thetalift {

using cplx = std::complex<double>;

// Base point tau in the upper half-plane. When the cm pair (p,q) is present,
// tau is the root of tau^2 = p*tau + q with positive imaginary part, and the
// order Z[tau] acts on the lattice Z + Z*tau.
struct UpperHalfPoint {
    cplx tau;
    double y;
    std::optional<std::pair<long long, long long>> cm;

    explicit UpperHalfPoint(cplx t) : tau(t), y(t.imag()) {
        if (!(y > 0.0)) throw DomainError("tau must have positive imaginary part");
    }

    static UpperHalfPoint from_cm(long long p, long long q) {
        double disc = static_cast<double>(p) * p + 4.0 * static_cast<double>(q);
        if (!(disc < 0)) throw DomainError("cm discriminant p^2 + 4q must be negative");
        cplx t(0.5 * p, 0.5 * std::sqrt(-disc));
        UpperHalfPoint pt(t);
        pt.cm = {p, q};
        return pt;
    }
};

// One torsion coordinate pair (u, v) in (Q/Z)^2, representing z = u - tau*v
// on a single elliptic factor. Always stored normalized into [0,1).
struct TorsionCoord {
    Rat u, v;

    TorsionCoord() = default;
    TorsionCoord(Rat uu, Rat vv) : u(uu.mod1()), v(vv.mod1()) {}

    bool is_zero() const { return u.is_zero() && v.is_zero(); }
    long long order() const { return std::lcm(u.den, v.den); }

    friend bool operator==(const TorsionCoord& a, const TorsionCoord& b) {
        return a.u == b.u && a.v == b.v;
    }
    friend bool operator<(const TorsionCoord& a, const TorsionCoord& b) {
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    }
};

inline TorsionCoord normalize(const TorsionCoord& c) { return TorsionCoord(c.u, c.v); }

inline cplx embed(const TorsionCoord& c, const UpperHalfPoint& tau) {
    return cplx(c.u.to_double(), 0.0) - tau.tau * c.v.to_double();
}

// Point (z1, z2) on T_tau = E_tau x E_tau.
struct TorsionPoint {
    TorsionCoord x1, x2;

    TorsionPoint() = default;
    TorsionPoint(TorsionCoord a, TorsionCoord b) : x1(a), x2(b) {}

    bool is_zero() const { return x1.is_zero() && x2.is_zero(); }
    long long order() const { return std::lcm(x1.order(), x2.order()); }

    friend bool operator==(const TorsionPoint& a, const TorsionPoint& b) {
        return a.x1 == b.x1 && a.x2 == b.x2;
    }
    friend bool operator<(const TorsionPoint& a, const TorsionPoint& b) {
        if (!(a.x1 == b.x1)) return a.x1 < b.x1;
        return a.x2 < b.x2;
    }
};

// Finite integer combination of nonzero torsion points, normalized so points
// are pairwise distinct and no coefficient is zero.
struct TorsionCycle {
    std::vector<std::pair<long long, TorsionPoint>> terms;

    TorsionCycle() = default;
    explicit TorsionCycle(std::vector<std::pair<long long, TorsionPoint>> raw) {
        std::sort(raw.begin(), raw.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
        for (const auto& [coeff, pt] : raw) {
            if (pt.is_zero()) throw ZeroPoint("torsion cycle may not contain the zero section");
            if (!terms.empty() && terms.back().second == pt)
                terms.back().first += coeff;
            else
                terms.emplace_back(coeff, pt);
        }
        std::erase_if(terms, [](const auto& t) { return t.first == 0; });
    }

    long long level() const {
        long long n = 1;
        for (const auto& [c, pt] : terms) n = std::lcm(n, pt.order());
        return n;
    }
};

// 2x2 matrix with exact rational entries, det != 0 enforced at use sites.
struct Mat2Q {
    Rat a, b, c, d;

    Mat2Q() : a(1), b(0), c(0), d(1) {}
    Mat2Q(Rat aa, Rat bb, Rat cc, Rat dd) : a(aa), b(bb), c(cc), d(dd) {}

    Rat det() const { return a * d - b * c; }
    bool is_integral() const {
        return a.is_integer() && b.is_integer() && c.is_integer() && d.is_integer();
    }

    friend Mat2Q operator*(const Mat2Q& m, const Mat2Q& n) {
        return Mat2Q(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                     m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
    }
    friend bool operator==(const Mat2Q& m, const Mat2Q& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }
};

// Integral 2x2 matrix; the type preimage enumeration works on.
struct Mat2Z {
    long long a = 1, b = 0, c = 0, d = 1;

    long long det() const { return a * d - b * c; }
    Mat2Z adj() const { return Mat2Z{d, -b, -c, a}; }

    friend Mat2Z operator*(const Mat2Z& m, const Mat2Z& n) {
        return Mat2Z{m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                     m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend bool operator==(const Mat2Z& m, const Mat2Z& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }
    Mat2Q to_q() const { return Mat2Q(Rat(a), Rat(b), Rat(c), Rat(d)); }
};

// Least positive integer multiple of m that is integral, together with that
// integral matrix. theta evaluation clears denominators through this.
inline std::pair<long long, Mat2Z> clear_denominators(const Mat2Q& m) {
    long long l = std::lcm(std::lcm(m.a.den, m.b.den), std::lcm(m.c.den, m.d.den));
    Rat s(l);
    Mat2Q scaled(m.a * s, m.b * s, m.c * s, m.d * s);
    return {l, Mat2Z{scaled.a.num, scaled.b.num, scaled.c.num, scaled.d.num}};
}

// Element s + t*tau of the order Z[tau], tau^2 = p*tau + q.
struct OrderElem {
    long long s = 0, t = 0;

    bool is_zero() const { return s == 0 && t == 0; }
    bool is_rational() const { return t == 0; }

    friend bool operator==(const OrderElem& x, const OrderElem& y) {
        return x.s == y.s && x.t == y.t;
    }
};

struct CMContext {
    UpperHalfPoint tau;
    long long p, q;

    explicit CMContext(const UpperHalfPoint& t) : tau(t), p(0), q(0) {
        if (!t.cm) throw DomainError("CMContext requires a base point with cm structure");
        p = t.cm->first;
        q = t.cm->second;
    }

    OrderElem add(OrderElem x, OrderElem y) const { return OrderElem{x.s + y.s, x.t + y.t}; }
    OrderElem neg(OrderElem x) const { return OrderElem{-x.s, -x.t}; }
    OrderElem mul(OrderElem x, OrderElem y) const {
        // (s1 + t1 tau)(s2 + t2 tau) with tau^2 = p tau + q
        return OrderElem{x.s * y.s + x.t * y.t * q, x.s * y.t + x.t * y.s + x.t * y.t * p};
    }
    long long norm(OrderElem x) const { return x.s * x.s + x.s * x.t * p - x.t * x.t * q; }
    cplx to_complex(OrderElem x) const {
        return cplx(static_cast<double>(x.s), 0.0) + tau.tau * static_cast<double>(x.t);
    }
};

// 2x2 matrix over the order.
struct Mat2O {
    OrderElem a, b, c, d;

    OrderElem det(const CMContext& ctx) const {
        return OrderElem{ctx.mul(a, d).s - ctx.mul(b, c).s, ctx.mul(a, d).t - ctx.mul(b, c).t};
    }
    bool is_rational() const {
        return a.is_rational() && b.is_rational() && c.is_rational() && d.is_rational();
    }
    friend Mat2O mul(const CMContext& ctx, const Mat2O& m, const Mat2O& n) {
        auto s = [&](OrderElem x, OrderElem y) { return ctx.add(x, y); };
        return Mat2O{s(ctx.mul(m.a, n.a), ctx.mul(m.b, n.c)), s(ctx.mul(m.a, n.b), ctx.mul(m.b, n.d)),
                     s(ctx.mul(m.c, n.a), ctx.mul(m.d, n.c)), s(ctx.mul(m.c, n.b), ctx.mul(m.d, n.d))};
    }
};

}  // namespace thetalift
