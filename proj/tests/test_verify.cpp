#include <doctest.h>

#include "thetalift/verify.hpp"

using namespace thetalift;

TEST_CASE("suite registry") {
    CHECK(suite_names().size() == 8);
    CHECK_THROWS_AS(run_suite("nope", 1, 0), DomainError);
}

TEST_CASE("determinism: identical seeds give identical reports") {
    auto a = run_suite("parity", 42, 0);
    auto b = run_suite("parity", 42, 0);
    CHECK(a.cases == b.cases);
    CHECK(a.worst_error == b.worst_error);
    CHECK(a.passed());
}

TEST_CASE("hecke suite records kappa") {
    auto rep = run_suite("hecke", 7, 0, 2, 5);
    CHECK(rep.has_kappa);
    CHECK(rep.passed());
    CHECK(std::abs(rep.kappa - cplx(1.0, 0.0)) < 1e-8);
}
