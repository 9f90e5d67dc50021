#pragma once

#include <vector>

#include "thetalift/domain.hpp"

namespace thetalift {

// Explicit Bruhat factorization of GL_2(Q) into unipotent, diagonal, and
// Weyl factors, in the fixed reading order the cocycle consumes.

struct BruhatFactor {
    enum class Kind { Unipotent, Diagonal, Weyl } kind;
    Rat u;        // Unipotent: (1 u; 0 1)
    Rat d1, d2;   // Diagonal: (d1 0; 0 d2)

    static BruhatFactor unipotent(Rat u) { return {Kind::Unipotent, u, Rat(1), Rat(1)}; }
    static BruhatFactor diagonal(Rat d1, Rat d2) { return {Kind::Diagonal, Rat(0), d1, d2}; }
    static BruhatFactor weyl() { return {Kind::Weyl, Rat(0), Rat(1), Rat(1)}; }

    Mat2Q matrix() const {
        switch (kind) {
            case Kind::Unipotent: return Mat2Q(Rat(1), u, Rat(0), Rat(1));
            case Kind::Diagonal: return Mat2Q(d1, Rat(0), Rat(0), d2);
            default: return Mat2Q(Rat(0), Rat(1), Rat(1), Rat(0));
        }
    }
};

struct BruhatFactorization {
    std::vector<BruhatFactor> factors;  // product left to right recovers the input

    Mat2Q product() const {
        Mat2Q acc;
        for (const auto& f : factors) acc = acc * f.matrix();
        return acc;
    }
};

// c != 0: [U(a/c), diag(1,c), w, U(-d/det), diag(1, -det/c)]
// c == 0: [U(b/d), diag(a,d)]
BruhatFactorization bruhat_factor(const Mat2Q& g);

}  // namespace thetalift
