#include "chebvar/variety.hpp"

#include <cmath>

#include "chebvar/cheb.hpp"
#include "chebvar/errors.hpp"
#include "chebvar/rng.hpp"
#include "doctest.h"

using namespace chebvar;

namespace {

IMat mat(std::initializer_list<std::initializer_list<int>> rows) {
    const int m = static_cast<int>(rows.size());
    const int n = static_cast<int>(rows.begin()->size());
    IMat A(m, n);
    int i = 0;
    for (auto& r : rows) {
        int j = 0;
        for (int v : r) A(i, j++) = v;
        ++i;
    }
    return A;
}

const IMat kRunning = mat({{1, 1, 2}, {2, 1, 3}});
const IMat kTrigSing = mat({{1, 0, 2}, {0, 1, 3}});
const IMat kCos63 = mat({{4, 4, 6, 7, 9, 2}, {8, 4, 1, 2, 6, 7}});

bool has_point(const SingularCandidates& S, std::initializer_list<double> p) {
    for (const auto& x : S.points) {
        bool same = x.size() == p.size();
        size_t i = 0;
        for (double v : p) {
            same = same && std::abs(x[i++] - v) < 1e-9;
        }
        if (same) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("tensor_dimension") {
    CHECK(tensor_dimension(ExponentMatrix(kRunning)) == 2);
    CHECK(tensor_dimension(ExponentMatrix(mat({{1, 2, 3}, {1, 2, 3}}))) == 2);  // rank 1, dim 2
    CHECK(tensor_dimension(ExponentMatrix(mat({{2, 2, 2}, {2, 2, 2}}))) == 1);
}

TEST_CASE("cosine_dimension") {
    CHECK(cosine_dimension(ExponentMatrix(kRunning)) == 2);
    CHECK(cosine_dimension(ExponentMatrix(IMat(IMat::Identity(3, 3)))) == 3);
    CHECK(cosine_dimension(ExponentMatrix(mat({{1, 2}, {2, 4}}))) == 1);
}

TEST_CASE("tensor_degree_bounds") {
    SUBCASE("running example: bounds (11, 12), density fails") {
        auto r = tensor_degree_bounds(ExponentMatrix(kRunning));
        CHECK(r.bound_PC == Rat(11));
        CHECK(r.bound_PB == Rat(12));
        CHECK(!r.density_holds);
        CHECK(!r.degree.has_value());
        REQUIRE(r.surface_bound.has_value());
        CHECK(*r.surface_bound == Rat(7));
    }
    SUBCASE("max-degree-k support: density holds, degree = m! k^m") {
        for (int k = 1; k <= 3; ++k) {
            std::vector<std::pair<int, int>> cols;
            for (int a = 0; a <= k; ++a)
                for (int b = 0; b <= k; ++b) cols.emplace_back(a, b);
            IMat A(2, static_cast<int>(cols.size()));
            for (size_t j = 0; j < cols.size(); ++j) {
                A(0, j) = cols[j].first;
                A(1, j) = cols[j].second;
            }
            auto r = tensor_degree_bounds(ExponentMatrix(A));
            CHECK(r.density_holds);
            REQUIRE(r.degree.has_value());
            CHECK(*r.degree == 2LL * k * k);
        }
    }
    SUBCASE("univariate cross-check: degree k") {
        IMat A(1, 4);
        A << 0, 1, 2, 3;
        auto r = tensor_degree_bounds(ExponentMatrix(A));
        CHECK(r.density_holds);
        CHECK(*r.degree == 3);
    }
}

TEST_CASE("surface_degree_bound") {
    SUBCASE("running example = 7") {
        CHECK(surface_degree_bound(ExponentMatrix(kRunning)) == Rat(7));
    }
    SUBCASE("possibly-strict cases still compute") {
        Rat b1 = surface_degree_bound(ExponentMatrix(mat({{2, 0, 2}, {0, 2, 2}})));
        CHECK(b1 > Rat(0));
        Rat b2 = surface_degree_bound(ExponentMatrix(mat({{1, 2, 4}, {0, 2, 4}})));
        CHECK(b2 > Rat(0));
    }
    SUBCASE("bound never exceeds the P_B bound") {
        Rng rng(6);
        int tested = 0;
        while (tested < 12) {
            IMat A(2, 3 + static_cast<int>(rng.uniform() * 3));
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < A.cols(); ++j) A(i, j) = static_cast<int>(rng.uniform() * 7);
            if (rational_rank(A) < 2) continue;
            bool zero_col = false;
            for (int j = 0; j < A.cols(); ++j) zero_col = zero_col || (A.col(j).sum() == 0);
            ++tested;
            auto S = special_polytopes(ExponentMatrix(A));
            if (S.P_B.dim < 2) continue;
            Rat pb = normalized_volume(S.P_B) * Rat(1, 4);
            CHECK(surface_degree_bound(ExponentMatrix(A)) <= pb);
        }
    }
    SUBCASE("rank deficient throws") {
        CHECK_THROWS_AS(surface_degree_bound(ExponentMatrix(mat({{1, 2}, {2, 4}}))),
                        rank_deficiency_error);
    }
}

TEST_CASE("deg_pi1") {
    CHECK(deg_pi1(ExponentMatrix(mat({{1, 0, 1}, {0, 1, 1}}))) == 2);
    CHECK(deg_pi1(ExponentMatrix(kRunning)) == 2);  // same row span as the canonical form
    CHECK(deg_pi1(ExponentMatrix(mat({{1, 0, 0, 2}, {0, 1, 0, 3}, {0, 0, 1, 0}}))) == 4);
    // square invertible A has no toric relations: every sign flip lifts
    CHECK(deg_pi1(ExponentMatrix(mat({{3, 1}, {1, 1}}))) == 4);
    CHECK(deg_pi1(ExponentMatrix(mat({{2, 1}, {1, 2}}))) == 4);
}

TEST_CASE("cosine_degree") {
    SUBCASE("elliptope = 3") {
        auto r = cosine_degree(ExponentMatrix(kRunning));
        CHECK(*r.degree == 3);
        CHECK(*r.deg_pi1_value == 2);
        CHECK(r.lattice_index_value == 1);
    }
    SUBCASE("3x4 example = 6 with deg pi1 = 4") {
        auto r = cosine_degree(ExponentMatrix(mat({{1, 0, 0, 2}, {0, 1, 0, 3}, {0, 0, 1, 0}})));
        CHECK(*r.degree == 6);
        CHECK(*r.deg_pi1_value == 4);
    }
    SUBCASE("cosine example 129") {
        auto r = cosine_degree(ExponentMatrix(kCos63));
        CHECK(*r.degree == 129);
    }
    SUBCASE("trig-sing sextic = 6") {
        auto r = cosine_degree(ExponentMatrix(kTrigSing));
        CHECK(*r.degree == 6);
    }
    SUBCASE("m = 1") {
        IMat A(1, 1);
        A << 5;
        auto r = cosine_degree(ExponentMatrix(A));
        CHECK(*r.degree == 1);
    }
}

TEST_CASE("cosine_singular_candidates") {
    SUBCASE("elliptope: 4 points, no curves") {
        auto S = cosine_singular_candidates(ExponentMatrix(kRunning));
        CHECK(S.curves.empty());
        REQUIRE(S.points.size() == 4);
        CHECK(has_point(S, {1, 1, 1}));
        CHECK(has_point(S, {1, -1, -1}));
        CHECK(has_point(S, {-1, 1, -1}));
        CHECK(has_point(S, {-1, -1, 1}));
    }
    SUBCASE("trig-sing: 4 points and 3 curves") {
        auto S = cosine_singular_candidates(ExponentMatrix(kTrigSing));
        REQUIRE(S.curves.size() == 3);
        REQUIRE(S.points.size() == 4);
        // points lie on the printed sextic and its gradient vanishes there
        ImplicitPoly F;
        F.num_vars = 3;
        F.add({4, 0, 0}, 4);
        F.add({2, 3, 1}, -16);
        F.add({2, 1, 1}, 12);
        F.add({2, 0, 0}, -4);
        F.add({0, 6, 0}, 16);
        F.add({0, 4, 0}, -24);
        F.add({0, 3, 1}, 8);
        F.add({0, 2, 0}, 9);
        F.add({0, 1, 1}, -6);
        F.add({0, 0, 2}, 1);
        for (const auto& p : S.points) {
            std::vector<cplx> x{p[0], p[1], p[2]};
            CHECK(std::abs(F.eval(x)) < 1e-8);
            for (const auto& g : F.gradient(x)) CHECK(std::abs(g) < 1e-8);
        }
        // the three curves: {x1 = 0, T3(x2) = T1(-x3)}, {x2 = +-1/2, T2(x1) = T1(-+x3)}
        int seen_x1 = 0, seen_x2_pos = 0, seen_x2_neg = 0;
        for (const auto& c : S.curves) {
            if (c.fixed_var == 0) {
                ++seen_x1;
                CHECK(std::abs(c.fixed_value) < 1e-12);
                CHECK(c.lhs_deg == 3);
                CHECK(c.sign == -1);
            } else {
                CHECK(c.fixed_var == 1);
                if (c.fixed_value > 0) {
                    ++seen_x2_pos;
                    CHECK(c.fixed_value == doctest::Approx(0.5));
                    CHECK(c.sign == -1);
                } else {
                    ++seen_x2_neg;
                    CHECK(c.fixed_value == doctest::Approx(-0.5));
                    CHECK(c.sign == 1);
                }
                CHECK(c.lhs_deg == 2);
            }
        }
        CHECK(seen_x1 == 1);
        CHECK(seen_x2_pos == 1);
        CHECK(seen_x2_neg == 1);
        // points of the curves satisfy the sextic: parametrize x2, check
        for (const auto& c : S.curves) {
            Rng rng(5);
            for (int s = 0; s < 20; ++s) {
                std::vector<cplx> x(3);
                x[c.fixed_var] = c.fixed_value;
                double free_val = rng.uniform(-1.0, 1.0);
                x[c.lhs_var] = free_val;
                // solve T_{lhs}(free) = T_{rhs}(sign x3) with rhs_deg = 1
                REQUIRE(c.rhs_deg == 1);
                x[2] = eval_T(c.lhs_deg, free_val) * static_cast<double>(c.sign);
                CHECK(std::abs(F.eval(x)) < 1e-8);
            }
        }
    }
    SUBCASE("identity: sign vertices") {
        auto S = cosine_singular_candidates(ExponentMatrix(IMat(IMat::Identity(3, 3))));
        CHECK(S.points.size() == 8);
        for (const auto& p : S.points) {
            for (double v : p) CHECK(std::abs(std::abs(v) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("implicitize") {
    SUBCASE("elliptope cubic") {
        auto F = implicitize(VarietyKind::cosine, ExponentMatrix(kRunning), 3, 0, 11);
        ImplicitPoly ref;
        ref.num_vars = 3;
        ref.add({2, 0, 0}, -0.5);
        ref.add({0, 2, 0}, -0.5);
        ref.add({0, 0, 2}, -0.5);
        ref.add({1, 1, 1}, 1.0);
        ref.add({0, 0, 0}, 0.5);
        for (const auto& [e, c] : ref.terms) {
            REQUIRE(F.terms.count(e));
            CHECK(std::abs(F.terms.at(e) - c) < 1e-6);
        }
        CHECK(F.terms.size() == ref.terms.size());
    }
    SUBCASE("vanishes on fresh samples") {
        auto F = implicitize(VarietyKind::tensor, ExponentMatrix(kRunning), 7, 0, 3);
        Rng rng(77);
        for (int s = 0; s < 200; ++s) {
            std::vector<cplx> t{std::cos(cplx(rng.uniform(0, 2 * M_PI), 0.3 * rng.normal())),
                                std::cos(cplx(rng.uniform(0, 2 * M_PI), 0.3 * rng.normal()))};
            std::vector<cplx> x(3);
            for (int j = 0; j < 3; ++j) {
                x[j] = eval_T(kRunning(0, j), t[0]) * eval_T(kRunning(1, j), t[1]);
            }
            double scale = 0.0;
            for (const auto& [e, c] : F.terms) {
                double term = std::abs(c);
                for (int i = 0; i < 3; ++i) term *= std::pow(std::abs(x[i]), e[i]);
                scale += term;
            }
            CHECK(std::abs(F.eval(x)) < 1e-7 * std::max(1.0, scale));
        }
    }
    SUBCASE("wrong bound is inconclusive") {
        CHECK_THROWS_AS(implicitize(VarietyKind::cosine, ExponentMatrix(kRunning), 2, 0, 1),
                        inconclusive_degree);
        CHECK_THROWS_AS(implicitize(VarietyKind::cosine, ExponentMatrix(kRunning), 4, 0, 1),
                        inconclusive_degree);
    }
}

TEST_CASE("toric_relations") {
    SUBCASE("running example: xy - z and the V quadrics") {
        auto rel = toric_relations(ExponentMatrix(kRunning));
        REQUIRE(rel.size() == 1);
        std::vector<int> xy{1, 1, 0}, z{0, 0, 1};
        REQUIRE(rel[0].terms.count(xy));
        REQUIRE(rel[0].terms.count(z));
        CHECK(rel[0].terms.at(xy) * rel[0].terms.at(z) == doctest::Approx(-1.0));
        auto aux = auxiliary_variety_relations(ExponentMatrix(kRunning));
        CHECK(aux.size() == 4);  // y1 y2 - y3 and three quadrics
        // each quadric vanishes on (x_j, y_j) = ((y + 1/y)/2, y)
        Rng rng(3);
        for (int s = 0; s < 20; ++s) {
            std::vector<cplx> xy6(6);
            for (int j = 0; j < 3; ++j) {
                cplx y = rng.complex_normal();
                xy6[3 + j] = y;
                xy6[j] = 0.5 * (y + 1.0 / y);
            }
            for (size_t q = 1; q < aux.size(); ++q) {
                CHECK(std::abs(aux[q].eval(xy6)) < 1e-9);
            }
        }
    }
    SUBCASE("toric curve x^7 - y^5") {
        auto rel = toric_relations(ExponentMatrix(mat({{5, 7}})));
        REQUIRE(rel.size() == 1);
        std::vector<int> x7{7, 0}, y5{0, 5};
        CHECK(rel[0].terms.count(x7));
        CHECK(rel[0].terms.count(y5));
    }
    SUBCASE("square invertible: none") {
        CHECK(toric_relations(ExponentMatrix(mat({{2, 1}, {1, 1}}))).empty());
    }
}

TEST_CASE("implicitize toric matches binomial") {
    auto F = implicitize(VarietyKind::toric, ExponentMatrix(kRunning), 2, 0, 9);
    // xy - z up to sign and scale
    std::vector<int> xy{1, 1, 0}, z{0, 0, 1};
    REQUIRE(F.terms.count(xy));
    REQUIRE(F.terms.count(z));
    CHECK(std::abs(std::abs(F.terms.at(xy)) - 1.0) < 1e-7);
    CHECK(std::abs(std::abs(F.terms.at(z)) - 1.0) < 1e-7);
}
