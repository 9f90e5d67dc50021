#include "thetalift/bruhat.hpp"

namespace thetalift {

BruhatFactorization bruhat_factor(const Mat2Q& g) {
    const Rat det = g.det();
    if (det.is_zero()) throw SingularMatrix("bruhat_factor needs det != 0");
    BruhatFactorization out;
    if (g.c.is_zero()) {
        out.factors = {BruhatFactor::unipotent(g.b / g.d), BruhatFactor::diagonal(g.a, g.d)};
        return out;
    }
    out.factors = {BruhatFactor::unipotent(g.a / g.c),
                   BruhatFactor::diagonal(Rat(1), g.c),
                   BruhatFactor::weyl(),
                   BruhatFactor::unipotent(-(g.d / det)),
                   BruhatFactor::diagonal(Rat(1), -(det / g.c))};
    return out;
}

}  // namespace thetalift
