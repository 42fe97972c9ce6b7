#include "chebvar/curves.hpp"

#include <cmath>
#include <numeric>

#include "chebvar/errors.hpp"
#include "chebvar/rng.hpp"
#include "doctest.h"

using namespace chebvar;

namespace {

IMat row(std::initializer_list<int> vals) {
    IMat A(1, static_cast<int>(vals.size()));
    int j = 0;
    for (int v : vals) A(0, j++) = v;
    return A;
}

}  // namespace

TEST_CASE("plane_curve") {
    SUBCASE("(1,2): 2x^2 - y - 1") {
        auto r = plane_curve(1, 2);
        CHECK(r.degree == 2);
        CHECK(r.implicit.terms.at({2, 0}) == doctest::Approx(2.0));
        CHECK(r.implicit.terms.at({0, 1}) == doctest::Approx(-1.0));
        CHECK(r.implicit.terms.at({0, 0}) == doctest::Approx(-1.0));
    }
    SUBCASE("(2,4) reduces to (1,2)") {
        auto r = plane_curve(2, 4);
        auto s = plane_curve(1, 2);
        CHECK(r.g == 2);
        CHECK(r.degree == 2);
        CHECK(r.implicit.terms == s.implicit.terms);
    }
    SUBCASE("(6,7) has degree 7") {
        CHECK(plane_curve(6, 7).degree == 7);
    }
    SUBCASE("invalid") {
        CHECK_THROWS_AS(plane_curve(0, 2), invalid_input);
    }
    SUBCASE("implicit vanishes on the parametrization") {
        Rng rng(1);
        for (auto [a, b] : {std::pair{1, 2}, {2, 3}, {3, 5}, {6, 7}, {4, 6}}) {
            auto r = plane_curve(a, b);
            for (int s = 0; s < 200; ++s) {
                cplx t = s % 2 ? cplx(rng.uniform(-1.0, 1.0), 0.0)
                               : cplx(rng.uniform(-1.0, 1.0), rng.uniform(-0.4, 0.4));
                std::vector<cplx> x{eval_T(a, t), eval_T(b, t)};
                cplx val = r.implicit.eval(x);
                // scale by the evaluated term magnitudes: cancellation target
                double scale = 0.0;
                for (const auto& [e, c] : r.implicit.terms) {
                    scale += std::abs(c) * std::pow(std::abs(x[0]), e[0]) * std::pow(std::abs(x[1]), e[1]);
                }
                CHECK(std::abs(val) < 1e-9 * std::max(scale, 1.0));
            }
        }
    }
}

TEST_CASE("padua_points") {
    SUBCASE("(2,3) single point (1/2, 0)") {
        auto pts = padua_points(2, 3);
        REQUIRE(pts.size() == 1);
        CHECK(pts[0].first == doctest::Approx(0.5));
        CHECK(pts[0].second == doctest::Approx(0.0));
    }
    SUBCASE("(1,b) empty") {
        CHECK(padua_points(1, 9).empty());
    }
    SUBCASE("coprime count = (a-1)(b-1)/2") {
        for (auto [a, b] : {std::pair{2, 3}, {3, 4}, {4, 5}, {5, 7}, {6, 7}}) {
            CHECK(static_cast<int>(padua_points(a, b).size()) == (a - 1) * (b - 1) / 2);
        }
    }
    SUBCASE("points are nodal: curve and gradient vanish") {
        for (auto [a, b] : {std::pair{2, 3}, {3, 4}, {5, 6}}) {
            auto r = plane_curve(a, b);
            double nrm = r.implicit.max_abs_coeff();
            for (auto [x, y] : padua_points(a, b)) {
                CHECK(std::abs(r.implicit.eval({x, y})) < 1e-9 * nrm);
                auto g = r.implicit.gradient({x, y});
                CHECK(std::abs(g[0]) < 1e-9 * nrm);
                CHECK(std::abs(g[1]) < 1e-9 * nrm);
            }
        }
    }
}

TEST_CASE("line_real_count") {
    SUBCASE("A = [6 7]: all lines give 7") {
        Rng rng(3);
        ExponentMatrix A(row({6, 7}));
        for (int t = 0; t < 50; ++t) {
            double th = rng.uniform(0.0, 2 * M_PI);
            CHECK(line_real_count(A, {std::cos(th), std::sin(th)}) == 7);
        }
    }
    SUBCASE("coprime [a b]: count >= a") {
        Rng rng(4);
        for (auto [a, b] : {std::pair{2, 3}, {3, 5}, {4, 7}, {5, 8}}) {
            ExponentMatrix A(row({a, b}));
            for (int t = 0; t < 50; ++t) {
                double th = rng.uniform(0.0, 2 * M_PI);
                CHECK(line_real_count(A, {std::cos(th), std::sin(th)}) >= a);
            }
        }
    }
    SUBCASE("A = [1]") {
        CHECK(line_real_count(ExponentMatrix(row({1})), {2.5}) == 1);
    }
    SUBCASE("zero combination throws") {
        CHECK_THROWS_AS(line_real_count(ExponentMatrix(row({1, 2})), {0.0, 0.0}), invalid_input);
    }
}

TEST_CASE("hyperbolicity_check") {
    CHECK(hyperbolicity_check(6, ChebKind::T, 200, 7));
    CHECK(hyperbolicity_check(9, ChebKind::U, 200, 7));
    CHECK(hyperbolicity_check(1, ChebKind::T, 50, 7));
}

TEST_CASE("inversion_polynomial") {
    SUBCASE("(3,2,7) matches 2 T4(y) T1(z) - T5(x)") {
        auto P = inversion_polynomial(3, 2, 7);
        CHECK(!P.degenerate);
        CHECK(P.u == 4);
        CHECK(P.v == 1);
        CHECK(P.w == 5);
        CHECK(P.slot_a == 0);
        CHECK(P.slot_b == 1);
        CHECK(P.slot_c == 2);
    }
    SUBCASE("degenerate (1,b,c)") {
        auto P = inversion_polynomial(1, 4, 9);
        CHECK(P.degenerate);
        CHECK(P.degenerate_slot == 0);
        CHECK(P.eval({cplx(0.3), cplx(99.0), cplx(-4.0)}) == cplx(0.3));
    }
    SUBCASE("(3,4,5) gives (14,11,37)") {
        auto P = inversion_polynomial(3, 4, 5);
        CHECK(P.u == 14);
        CHECK(P.v == 11);
        CHECK(P.w == 37);
        Rng rng(9);
        for (int s = 0; s < 100; ++s) {
            cplx t{rng.uniform(-1.0, 1.0), 0.0};
            cplx val = P.eval({eval_T(3, t), eval_T(4, t), eval_T(5, t)});
            CHECK(std::abs(val - t) < 1e-6);
        }
    }
    SUBCASE("integer identities ub - vc = 1, ub + vc = wa") {
        for (auto [a, b, c] : {std::tuple{3, 2, 7}, {3, 4, 5}, {5, 3, 7}, {2, 3, 7}, {9, 4, 5}}) {
            auto P = inversion_polynomial(a, b, c);
            if (P.degenerate) continue;
            CHECK(P.u * P.b - P.v * P.c == 1);
            CHECK(P.u * P.b + P.v * P.c == P.w * P.a);
        }
    }
    SUBCASE("even first index moves the odd one into role a") {
        auto P = inversion_polynomial(2, 3, 7);
        CHECK(P.a % 2 == 1);
        Rng rng(10);
        for (int s = 0; s < 50; ++s) {
            cplx t{rng.uniform(-1.0, 1.0), 0.0};
            cplx val = P.eval({eval_T(2, t), eval_T(3, t), eval_T(7, t)});
            CHECK(std::abs(val - t) < 1e-6);
        }
    }
    SUBCASE("non-coprime throws") {
        CHECK_THROWS_AS(inversion_polynomial(2, 4, 7), invalid_input);
    }
}

TEST_CASE("ideal_generators") {
    SUBCASE("A = [3 2 7]") {
        auto gens = ideal_generators(ExponentMatrix(row({3, 2, 7})));
        REQUIRE(gens.size() == 3);
        Rng rng(11);
        for (int s = 0; s < 100; ++s) {
            cplx t{rng.uniform(-1.0, 1.0), 0.0};
            std::vector<cplx> x{eval_T(3, t), eval_T(2, t), eval_T(7, t)};
            for (const auto& g : gens) CHECK(std::abs(g->eval(x)) < 1e-6);
        }
    }
    SUBCASE("A = [1 5]: x2 - T_5(x1)") {
        auto gens = ideal_generators(ExponentMatrix(row({1, 5})));
        REQUIRE(gens.size() == 2);
        Rng rng(12);
        for (int s = 0; s < 50; ++s) {
            cplx t{rng.uniform(-1.0, 1.0), 0.0};
            std::vector<cplx> x{eval_T(1, t), eval_T(5, t)};
            for (const auto& g : gens) CHECK(std::abs(g->eval(x)) < 1e-9);
        }
    }
    SUBCASE("A = [2 3 7 11]") {
        auto gens = ideal_generators(ExponentMatrix(row({2, 3, 7, 11})));
        REQUIRE(gens.size() == 4);
        Rng rng(13);
        for (int s = 0; s < 100; ++s) {
            cplx t{rng.uniform(-1.0, 1.0), 0.0};
            std::vector<cplx> x{eval_T(2, t), eval_T(3, t), eval_T(7, t), eval_T(11, t)};
            for (const auto& g : gens) CHECK(std::abs(g->eval(x)) < 1e-6);
        }
    }
    SUBCASE("no coprime triple throws") {
        CHECK_THROWS_AS(ideal_generators(ExponentMatrix(row({2, 4, 6}))), unsupported_support);
    }
}

TEST_CASE("u_curve_identity") {
    CHECK(u_curve_identity_check(3, 100));
    CHECK(u_curve_identity_check(2, 100));
    CHECK(u_curve_identity_check(10, 100));
}

TEST_CASE("chamber_scan") {
    SUBCASE("A = [2 3 7]: counts in {3,5,7}, min 3") {
        auto scan = chamber_scan(ExponentMatrix(row({2, 3, 7})), 1000, 1);
        CHECK(scan.min_count == 3);
        for (auto [count, freq] : scan.histogram) {
            CHECK((count == 3 || count == 5 || count == 7));
        }
        CHECK(scan.histogram.size() == 3);
    }
    SUBCASE("A = [6 7]: everything is 7") {
        auto scan = chamber_scan(ExponentMatrix(row({6, 7})), 300, 2);
        REQUIRE(scan.histogram.size() == 1);
        CHECK(scan.histogram.begin()->first == 7);
    }
    SUBCASE("conjectured lower bound min_j a_j") {
        for (std::uint64_t seed : {3ull, 4ull}) {
            auto scan = chamber_scan(ExponentMatrix(row({3, 5, 7})), 300, seed);
            CHECK(scan.min_count >= 3);
        }
    }
    SUBCASE("bit-for-bit reproducible") {
        auto s1 = chamber_scan(ExponentMatrix(row({2, 3, 7})), 500, 42);
        auto s2 = chamber_scan(ExponentMatrix(row({2, 3, 7})), 500, 42);
        CHECK(s1.histogram == s2.histogram);
        CHECK(s1.min_count == s2.min_count);
    }
}
