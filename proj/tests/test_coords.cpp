#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lieharm/coords.hpp"
#include "lieharm/testfn.hpp"

using namespace lieharm;

namespace {
constexpr double kHalfPi = std::numbers::pi / 2;
}

TEST_CASE("embed_s3c examples and constraint") {
    auto z = embed_s3c({0, 0, 0, 0, 0, 0});
    CHECK(std::abs(z[0] - 1.0) < 1e-15);
    CHECK(std::abs(z[1]) < 1e-15);
    CHECK(std::abs(z[2] - 1.0) < 1e-15);
    CHECK(std::abs(z[3]) < 1e-15);

    z = embed_s3c({kHalfPi, 0, 0, 0, 0, 0});
    CHECK(std::abs(z[0]) < 1e-15);
    CHECK(std::abs(z[1] - 1.0) < 1e-15);

    z = embed_s3c({0, 1, 0, 0, 0, 0});
    CHECK(std::abs(z[0] - std::cosh(1.0)) < 1e-14);
    CHECK(std::abs(z[1] - cplx(0, std::sinh(1.0))) < 1e-14);
    cplx c = z[0] * std::conj(z[2]) + z[1] * std::conj(z[3]);
    CHECK(std::abs(c - 1.0) < 1e-14);
}

TEST_CASE("s3c constraint holds on 10^4 random points") {
    Rng rng(11);
    double worst = 0;
    for (int i = 0; i < 10000; ++i) {
        ComplexAngles p = random_complex_angles(rng, 0.0, 1.0);
        auto z = embed_s3c(p);
        worst = std::max(worst,
                         std::abs(z[0] * std::conj(z[2]) + z[1] * std::conj(z[3]) - 1.0));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("embed_s3 examples and unit norm") {
    auto w = embed_s3({0, 0, 0});
    CHECK(std::abs(w[0] - 1.0) < 1e-15);
    CHECK(std::abs(w[1]) < 1e-15);
    w = embed_s3({std::numbers::pi / 4, 0, 0});
    CHECK(std::abs(w[0] - std::sqrt(0.5)) < 1e-15);
    CHECK(std::abs(w[1] - std::sqrt(0.5)) < 1e-15);
    w = embed_s3({std::numbers::pi / 3, kHalfPi, 0});
    CHECK(std::abs(w[0] - cplx(0, 0.5)) < 1e-15);
    CHECK(std::abs(w[1] - std::sqrt(3.0) / 2) < 1e-15);
    CHECK(std::abs(std::norm(w[0]) + std::norm(w[1]) - 1.0) < 1e-15);
}

TEST_CASE("embed_h22 examples, boundary, errors") {
    auto z = embed_h22({1e-9, 0, 0, {}});
    CHECK(std::abs(z[1]) == doctest::Approx(1e-9).epsilon(1e-6));
    CHECK(std::abs(std::norm(z[0]) - std::norm(z[1]) - 1.0) < 1e-12);

    z = embed_h22({1, 0, 0, {}});
    CHECK(std::abs(z[0] - std::cosh(1.0)) < 1e-14);
    CHECK(std::abs(z[1] - std::sinh(1.0)) < 1e-14);

    z = embed_h22({1, std::numbers::pi, kHalfPi, {}});
    CHECK(std::abs(z[0] + std::cosh(1.0)) < 1e-14);
    CHECK(std::abs(z[1] - cplx(0, std::sinh(1.0))) < 1e-14);

    CHECK_THROWS_AS(embed_h22({0, 0, 0, {}}), std::domain_error);
    CHECK_THROWS_AS(embed_h22({-1, 0, 0, {}}), std::domain_error);
}

TEST_CASE("embed_cone examples and removed apex") {
    auto z = embed_cone({1, 0, 0, {}});
    CHECK(std::abs(z[0] - 1.0) < 1e-15);
    CHECK(std::abs(z[1] - 1.0) < 1e-15);
    z = embed_cone({2, kHalfPi, 0, {}});
    CHECK(std::abs(z[0] - cplx(0, 2)) < 1e-14);
    CHECK(std::abs(z[1] - 2.0) < 1e-15);
    CHECK_THROWS_AS(embed_cone({0, 1, 1, {}}), std::domain_error);
}

TEST_CASE("h22 chart inverse") {
    auto inv = h22_chart_inverse(std::cosh(1.0), std::sinh(1.0));
    CHECK(inv.r == doctest::Approx(std::cosh(1.0)));
    CHECK(std::abs(inv.uPlus - 1.0) < 1e-14);
    CHECK(std::abs(inv.uMinus - 1.0) < 1e-14);

    inv = h22_chart_inverse(cplx(0, std::cosh(1.0)), std::sinh(1.0));
    CHECK(std::abs(inv.uPlus - cplx(0, 1)) < 1e-14);

    CHECK_THROWS_AS(h22_chart_inverse(1.0, 0.0), std::domain_error);
}

TEST_CASE("h22 inverse round-trips the forward chart") {
    Rng rng(5);
    constexpr double kTwoPi = 2 * std::numbers::pi;
    for (int i = 0; i < 200; ++i) {
        H22Point p = random_h22_point(rng);
        auto z = embed_h22(p);
        auto inv = h22_chart_inverse(z[0], z[1]);
        CHECK(std::abs(inv.r - std::cosh(p.rho)) < 1e-12 * std::cosh(p.rho));
        double pp = std::arg(inv.uPlus), pm = std::arg(inv.uMinus);
        auto wrap = [&](double a, double b) {
            double d = std::fmod(a - b, kTwoPi);
            if (d > std::numbers::pi) d -= kTwoPi;
            if (d < -std::numbers::pi) d += kTwoPi;
            return std::abs(d);
        };
        CHECK(wrap(pp, p.phiPlus) < 1e-12);
        CHECK(wrap(pm, p.phiMinus) < 1e-12);
    }
}

TEST_CASE("real forms of the complex embedding") {
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        S3Point s = random_s3_point(rng, 0.0);
        auto w = embed_s3(s);
        auto z = embed_s3c({s.theta, 0, s.phiPlus, 0, s.phiMinus, 0});
        CHECK(std::abs(z[0] - w[0]) == 0.0);
        CHECK(std::abs(z[1] - w[1]) == 0.0);

        H22Point h = random_h22_point(rng);
        auto zeta = embed_h22(h);
        auto zc = embed_s3c({0, h.rho, h.phiPlus, 0, h.phiMinus, 0});
        CHECK(std::abs(zc[0] - zeta[0]) < 1e-13 * std::cosh(h.rho));
        // the -i twist on zeta-: sin(i rho) e^{i phi} = i sinh(rho) e^{i phi}
        CHECK(std::abs(cplx(0, -1) * zc[1] - zeta[1]) < 1e-13 * std::cosh(h.rho));
    }
}

TEST_CASE("removed-set membership is exact on stored coordinates") {
    CHECK(in_removed_set(S3Point{0, 1, 2}));
    CHECK(in_removed_set(S3Point{kHalfPi, 0, 0}));
    CHECK(!in_removed_set(S3Point{std::numbers::pi / 4, 0, 0}));
    CHECK(in_removed_set(ComplexAngles{0, 0, 1, 1, 1, 1}));
    CHECK(!in_removed_set(ComplexAngles{0, 1, 0, 0, 0, 0}));
    CHECK(in_removed_set(ComplexAngles{kHalfPi, 0, 0, 0, 0, 0}));
    CHECK(in_removed_set(H22Point{0, 0, 0, {}}));
    CHECK(!in_removed_set(H22Point{0.5, 0, 0, {}}));
    CHECK(in_removed_set(ConePoint{0, 0, 0, {}}));
    CHECK(!in_removed_set(CompactConePoint{0, 0, 0, {}}));
}

TEST_CASE("covering bookkeeping") {
    CHECK(Multiplicity::finite(3).q() == 3);
    CHECK(!Multiplicity::infinite().is_finite());
    CHECK_THROWS(Multiplicity::finite(0));
    CHECK_THROWS(Multiplicity::infinite().q());
    Covering a{Multiplicity::finite(2), Multiplicity::finite(1)};
    Covering b{Multiplicity::finite(3), Multiplicity::infinite()};
    auto c = covering_lcm(a, b);
    CHECK(c.plus.q() == 6);
    CHECK(!c.minus.is_finite());
    CHECK(c.str() == "(6,inf)");
}
