#include <doctest.h>

#include <cmath>

#include "thetalift/gammafn.hpp"

using namespace thetalift;
using C = std::complex<double>;

TEST_CASE("complex gamma against the real one") {
    for (double x : {0.5, 1.0, 2.5, 4.75, 9.0}) {
        CHECK(std::abs(cgamma(C(x, 0)) - std::tgamma(x)) < 1e-12 * std::tgamma(x));
        CHECK(std::abs(recip_gamma(C(x, 0)) - 1.0 / std::tgamma(x)) < 1e-13);
    }
    // reflection side
    CHECK(std::abs(cgamma(C(-0.5, 0)) - (-2.0 * std::sqrt(M_PI))) < 1e-12);
    // 1/Gamma vanishes at the poles
    CHECK(std::abs(recip_gamma(C(0, 0))) < 1e-14);
    CHECK(std::abs(recip_gamma(C(-3, 0))) < 1e-13);
    // Gamma(1+i) known value
    CHECK(std::abs(cgamma(C(1, 1)) - C(0.49801566811835604, -0.15494982830181069)) < 1e-12);
}

TEST_CASE("upper incomplete gamma closed forms") {
    for (double x : {0.1, 0.5, 1.0, 2.0, 7.5}) {
        CHECK(std::abs(upper_gamma(C(1, 0), x) - std::exp(-x)) < 1e-13);
        CHECK(std::abs(upper_gamma(C(2, 0), x) - (x + 1) * std::exp(-x)) < 1e-12);
        // Gamma(1/2, x) = sqrt(pi) erfc(sqrt(x))
        CHECK(std::abs(upper_gamma(C(0.5, 0), x) - std::sqrt(M_PI) * std::erfc(std::sqrt(x))) <
              1e-12);
        // Gamma(0, x) = E1(x)
        CHECK(std::abs(upper_gamma(C(0, 0), x) - (-std::expint(-x))) < 1e-12);
    }
}

TEST_CASE("incomplete gamma recurrence for complex and negative s") {
    // Gamma(s+1,x) = s Gamma(s,x) + x^s e^-x across the dispatch boundaries
    for (double x : {0.2, 0.9, 1.4, 3.0, 12.0}) {
        for (C s : {C(0.7, 0.3), C(-0.8, 0.1), C(-1.6, -0.4), C(2.5, 1.0), C(-0.5, 0.0)}) {
            C lhs = upper_gamma(s + 1.0, x);
            C rhs = s * upper_gamma(s, x) + std::exp(-x + s * std::log(x));
            CHECK(std::abs(lhs - rhs) < 1e-11 * (1 + std::abs(lhs)));
        }
    }
}
