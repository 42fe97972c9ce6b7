#include "chebvar/root_system.hpp"

#include <cmath>

#include "chebvar/errors.hpp"
#include "chebvar/rng.hpp"
#include "doctest.h"

using namespace chebvar;

namespace {

std::array<cplx, 2> random_torus_point(Rng& rng) {
    return {rng.unit_phase() * rng.uniform(0.6, 1.6), rng.unit_phase() * rng.uniform(0.6, 1.6)};
}

}  // namespace

TEST_CASE("weyl group order and invariance") {
    WeylGroupA2 W;
    CHECK(W.elements().size() == 6);
    // closure under multiplication
    for (const auto& g : W.elements()) {
        for (const auto& h : W.elements()) {
            Eigen::Matrix2i gh = g * h;
            bool found = false;
            for (const auto& e : W.elements()) found = found || e == gh;
            CHECK(found);
        }
    }
    // orbit sums are W-invariant
    Rng rng(1);
    for (int trial = 0; trial < 10; ++trial) {
        auto x = random_torus_point(rng);
        Eigen::Vector2i alpha(1 + trial % 3, (trial * 2) % 4);
        cplx base = weyl_orbit_value(alpha, x);
        for (const auto& B : W.elements()) {
            Eigen::Vector2i beta = B * alpha;
            CHECK(std::abs(weyl_orbit_value(beta, x) - base) < 1e-12 * (1.0 + std::abs(base)));
        }
    }
}

TEST_CASE("weyl_orbit_value basics") {
    CHECK(std::abs(weyl_orbit_value({0, 0}, {cplx(0.3, 0.4), cplx(-1.1, 0.2)}) - cplx(6.0)) < 1e-14);
    CHECK(std::abs(weyl_orbit_value({1, 0}, {cplx(1.0), cplx(1.0)}) - cplx(6.0)) < 1e-14);
    CHECK_THROWS_AS(weyl_orbit_value({1, 0}, {cplx(0.0), cplx(1.0)}), domain_error);
}

TEST_CASE("gen_cheb base cases and T11") {
    GenChebTable tab;
    auto t00 = tab.poly_double(0, 0);
    CHECK(t00.terms.at({0, 0}) == doctest::Approx(6.0));
    auto t10 = tab.poly_double(1, 0);
    CHECK(t10.terms.at({1, 0}) == doctest::Approx(1.0));
    auto t11 = tab.poly_double(1, 1);
    CHECK(t11.terms.size() == 2);
    CHECK(t11.terms.at({1, 1}) == doctest::Approx(0.25));
    CHECK(t11.terms.at({0, 0}) == doctest::Approx(-3.0));
}

TEST_CASE("orbit-polynomial oracle identity for a+b <= 8") {
    GenChebTable tab;
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto x = random_torus_point(rng);
        std::array<cplx, 2> theta{weyl_orbit_value({1, 0}, x), weyl_orbit_value({0, 1}, x)};
        for (int a = 0; a <= 8; ++a) {
            for (int b = 0; a + b <= 8; ++b) {
                cplx lhs = tab.eval(a, b, theta);
                cplx rhs = weyl_orbit_value({a, b}, x);
                CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
            }
        }
    }
}

TEST_CASE("edge and interior recurrences agree where both apply") {
    GenChebTable tab;
    Rng rng(5);
    // interior recurrence in the other variable must reproduce the table
    for (int trial = 0; trial < 10; ++trial) {
        auto x = random_torus_point(rng);
        std::array<cplx, 2> th{weyl_orbit_value({1, 0}, x), weyl_orbit_value({0, 1}, x)};
        for (int a = 1; a <= 5; ++a) {
            for (int b = 1; a + b <= 7; ++b) {
                // T_{a,b+1} = 1/2 y T_{a,b} - T_{a+1,b-1} - T_{a-1,b}
                cplx lhs = tab.eval(a, b + 1, th);
                cplx rhs = 0.5 * th[1] * tab.eval(a, b, th) - tab.eval(a + 1, b - 1, th) -
                           tab.eval(a - 1, b, th);
                CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(lhs)));
            }
        }
    }
}

TEST_CASE("a2_surface_point matches the recurrence polynomials") {
    GenChebTable tab;
    Eigen::Matrix<int, 2, 3> A;
    A << 1, 1, 2, 2, 1, 3;
    Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        std::array<cplx, 2> t{rng.complex_normal(), rng.complex_normal()};
        auto p = a2_surface_point(A, t, tab);
        // first two coordinates agree with the closed forms (1/8)(y^2 x - 4x^2 - 4y)
        // and (1/4)(xy - 12); the third is pinned by the orbit oracle instead
        cplx c0 = (t[1] * t[1] * t[0] - 4.0 * t[0] * t[0] - 4.0 * t[1]) / 8.0;
        cplx c1 = (t[0] * t[1] - 12.0) / 4.0;
        CHECK(std::abs(p[0] - c0) < 1e-9 * (1.0 + std::abs(c0)));
        CHECK(std::abs(p[1] - c1) < 1e-9 * (1.0 + std::abs(c1)));
    }
    // third coordinate via the orbit sum
    for (int trial = 0; trial < 10; ++trial) {
        auto x = random_torus_point(rng);
        std::array<cplx, 2> th{weyl_orbit_value({1, 0}, x), weyl_orbit_value({0, 1}, x)};
        auto p = a2_surface_point(A, th, tab);
        cplx ref = weyl_orbit_value({2, 3}, x);
        CHECK(std::abs(p[2] - ref) < 1e-9 * (1.0 + std::abs(ref)));
    }
}
