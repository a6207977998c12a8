#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lieharm/special.hpp"

using namespace lieharm;

namespace {
double rel(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }
}

TEST_CASE("log_gamma matches extended-precision references on the working strip") {
    // references computed with 30-digit arithmetic
    struct Ref {
        cplx z, lg;
    };
    const Ref refs[] = {
        {{2.0, -1.0}, {-0.30434960902188368418, -0.48375784292991511173}},
        {{0.5, 3.0}, {-3.7934504504362231734, 0.30981927108643916606}},
        {{3.5, 2.0}, {0.58073321208126816934, 2.3353168419161627716}},
        {{12.5, 0.5}, {18.723939860467195811, 1.2427421765415056918}},
        {{1.0, 1.0}, {-0.65092319930185633889, -0.30164032046753319789}},
    };
    for (const auto& r : refs) CHECK(std::abs(log_gamma(r.z) - r.lg) < 1e-13 * (1 + std::abs(r.lg)));

    CHECK(rel(gamma_fn(cplx(0.2, 0.0)), cplx(4.5908437119988027836, 0.0)) < 1e-13);
    CHECK(rel(gamma_fn(cplx(0.25, -1.5)),
              cplx(0.062307528139193409387, 0.20628962293912129698)) < 1e-13);
    CHECK(rel(gamma_fn(cplx(-1.3, 0.4)),
              cplx(1.0886618631201538597, 1.1127803316768319191)) < 1e-12);
}

TEST_CASE("gamma poles") {
    CHECK(is_gamma_pole(cplx(0.0)));
    CHECK(is_gamma_pole(cplx(-3.0)));
    CHECK(!is_gamma_pole(cplx(-3.5)));
    CHECK(!is_gamma_pole(cplx(0.0, 0.1)));
    CHECK_THROWS_AS(log_gamma(cplx(-2.0)), std::domain_error);
    CHECK(rgamma(cplx(-2.0)) == cplx(0.0));
    CHECK(std::abs(rgamma(cplx(3.0)) - 0.5) < 1e-14);
}

TEST_CASE("factorials") {
    CHECK(factorial(0) == 1.0);
    CHECK(factorial(5) == 120.0);
    CHECK(std::abs(log_factorial(20) - std::log(factorial(20))) < 1e-12);
    CHECK_THROWS(factorial(-1));
}

TEST_CASE("rational detection via continued fractions") {
    auto r = to_rational(1.5);
    REQUIRE(r.has_value());
    CHECK(r->num == 3);
    CHECK(r->den == 2);
    r = to_rational(-0.75);
    REQUIRE(r.has_value());
    CHECK(r->num == -3);
    CHECK(r->den == 4);
    CHECK(!to_rational(1.0 / std::sqrt(2.0)).has_value());
    CHECK(!to_rational(std::numbers::pi).has_value());
    r = to_rational(2.0);
    REQUIRE(r.has_value());
    CHECK(r->den == 1);
}

TEST_CASE("half-integer lattice helpers") {
    CHECK(is_half_integer(1.5));
    CHECK(is_half_integer(-2.0));
    CHECK(!is_half_integer(0.3));
    CHECK(is_integer(4.0));
    CHECK(!is_integer(4.5));
}
