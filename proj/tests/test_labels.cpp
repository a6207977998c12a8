#include <cmath>

#include "doctest.h"
#include "lieharm/labels.hpp"

using namespace lieharm;

TEST_CASE("sl2c label canonicalization and casimirs") {
    SL2CLabel l(-0.5, cplx(0, -2.5));
    CHECK(l.ell0 == 0.5);
    CHECK(l.ell1 == cplx(0, 2.5));
    CHECK_THROWS(SL2CLabel(0.3, 1.0));

    auto q = casimir_values(SL2CLabel(0.5, cplx(0, 1)));
    CHECK(q[0].first == "Q1");
    CHECK(std::abs(q[0].second - cplx(-1.75)) < 1e-15);
    CHECK(std::abs(q[1].second - cplx(1.0)) < 1e-15);

    auto q2 = casimir_values(SU2Label(1.0));
    CHECK(std::abs(q2[0].second - cplx(2.0)) < 1e-15);
    CHECK(std::abs(casimir_values(SU11DiscLabel(2.0, DiscSign::plus, 0))[0].second -
                   cplx(2.0)) < 1e-15);
    CHECK(std::abs(casimir_values(E2Label(3.0, 0.0, 0))[0].second - cplx(9.0)) < 1e-15);
    cplx lam = 0.5 * cplx(-0.5, 1.0);
    CHECK(std::abs(casimir_values(SU11ContLabel(lam, lam, 0))[0].second -
                   cplx(-0.25 - 1.0)) < 1e-14);
}

TEST_CASE("unitary classification") {
    CHECK(unitary_class(SL2CLabel(0.5, cplx(0, 2.5))) == UnitaryClass::principal);
    CHECK(unitary_class(SL2CLabel(0, 0.5)) == UnitaryClass::complementary);
    CHECK(unitary_class(SL2CLabel(0.5, 2.5)) == UnitaryClass::finite_dimensional);
    CHECK(unitary_class(SL2CLabel(0.5, 2.0)) == UnitaryClass::non_unitary);
    CHECK(unitary_class(SL2CLabel(0, 1.5)) == UnitaryClass::non_unitary);
    CHECK(unitary_class(SU2Label(1.5)) == UnitaryClass::finite_dimensional);
    CHECK(unitary_class(SU11DiscLabel(1.0, DiscSign::plus, 0)) ==
          UnitaryClass::discrete_normalizable);
    CHECK(unitary_class(SU11DiscLabel(0.4, DiscSign::plus, 0)) ==
          UnitaryClass::discrete_non_normalizable);
    cplx lam = 0.5 * cplx(-0.5, 2.0);
    CHECK(unitary_class(SU11ContLabel(lam, lam, 0)) == UnitaryClass::principal);
    CHECK(unitary_class(SU11ContLabel(cplx(-0.2), cplx(-0.2), 0)) ==
          UnitaryClass::supplementary);
    CHECK(unitary_class(SU11ContLabel(cplx(1.0), cplx(1.2), 0)) ==
          UnitaryClass::non_unitary);
}

TEST_CASE("finite-dimensional spin towers") {
    SL2CLabel l(0.5, 2.5);
    auto spins = l.spins(10.0);
    REQUIRE(spins.size() == 2);
    CHECK(spins[0] == 0.5);
    CHECK(spins[1] == 1.5);
    SL2CLabel p(0.5, cplx(0, 1));
    CHECK(p.spins(2.5).size() == 3);
}

TEST_CASE("covering_required") {
    auto c = covering_required(SU11DiscLabel(0.75, DiscSign::plus, 0));
    CHECK(c.plus.q() == 2);
    CHECK(c.minus.q() == 1);
    c = covering_required(SU11DiscLabel(1.0, DiscSign::plus, 0));
    CHECK(c.plus.q() == 1);
    c = covering_required(E2Label(1.0, 1.0 / std::sqrt(2.0), 0));
    CHECK(!c.plus.is_finite());
    CHECK(c.minus.q() == 1);
    c = covering_required(SL2CLabel(0.5, 2.5));
    CHECK(c.plus.q() == 1);
    // phi+ carries 2 lambda - n, phi- carries 2 mu + n
    c = covering_required(SU11ContLabel(cplx(0.25), cplx(0.25), 0));
    CHECK(c.plus.q() == 2);
    CHECK(c.minus.q() == 2);
}

TEST_CASE("continuous label canonical window") {
    SU11ContLabel l(cplx(0.0), cplx(1.25), 3);  // mu - lambda = 1.25 -> shift by 1
    CHECK(std::abs((l.mu - l.lambda).real() - 0.25) < 1e-12);
    CHECK(l.n == 4);
    CHECK_THROWS(SU11ContLabel(cplx(0, 0.3), cplx(0, 0), 0));
    CHECK_THROWS(E2Label(1.0, 0.75, 0));
    CHECK_THROWS(SU11DiscLabel(-1.0, DiscSign::plus, 0));
}
