#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "chebvar/cheb.hpp"
#include "chebvar/implicit_poly.hpp"
#include "chebvar/polytope.hpp"
#include "chebvar/rng.hpp"

namespace chebvar {

/// Plane T-curve (T_a(t), T_b(t)): implicit equation and degree.
struct PlaneCurveReport {
    int a = 0, b = 0;
    int g = 1;        // gcd(a, b)
    int a_red = 0;    // a / g
    int b_red = 0;    // b / g
    int degree = 0;   // = b_red for a <= b
    ImplicitPoly implicit;  // T_{b'}(x) - T_{a'}(y) expanded into monomials
};

PlaneCurveReport plane_curve(int a, int b);

/// Nodal singularities (cos(k pi / b), cos(l pi / a)), k = l mod 2.
std::vector<std::pair<double, double>> padua_points(int a, int b);

/// Number of real roots of sum_j v_j T_{a_j}(t), via colleague_roots.
int line_real_count(const ExponentMatrix& A, const std::vector<double>& v,
                    ChebKind kind = ChebKind::T);

/// Samples lines through the origin; true iff every line meets the curve
/// (C_a, C_{a+1}) in a+1 real points.
bool hyperbolicity_check(int a, ChebKind kind, int trials, std::uint64_t seed);

/// P = 2 T_u(y) T_v(z) - T_w(x) with P(T_a, T_b, T_c) = t; slots record
/// which input index plays which role.
struct InversionPoly {
    int a = 0, b = 0, c = 0;        // role values (a odd unless degenerate)
    int slot_a = 0, slot_b = 1, slot_c = 2;  // input positions of the roles
    long long u = 0, v = 0, w = 0;
    bool degenerate = false;        // some index is 1: P = that variable slot
    int degenerate_slot = -1;

    /// Evaluates P at the point (x_0, x_1, x_2) given in input-slot order.
    cplx eval(const std::vector<cplx>& x) const;
};

InversionPoly inversion_polynomial(int a, int b, int c);

/// Expression tree for space-curve ideal generators; kept as compositions.
struct PolyExpr {
    enum class Kind { Var, Const, Sum, Product, ChebT, ChebU };
    Kind kind = Kind::Const;
    int var = -1;          // Var
    double value = 0.0;    // Const
    int cheb_index = 0;    // ChebT / ChebU
    std::vector<std::shared_ptr<PolyExpr>> children;

    cplx eval(const std::vector<cplx>& x) const;

    static std::shared_ptr<PolyExpr> variable(int slot);
    static std::shared_ptr<PolyExpr> constant(double c);
    static std::shared_ptr<PolyExpr> sum(std::vector<std::shared_ptr<PolyExpr>> terms);
    static std::shared_ptr<PolyExpr> product(std::vector<std::shared_ptr<PolyExpr>> factors);
    static std::shared_ptr<PolyExpr> cheb_t(int k, std::shared_ptr<PolyExpr> inner);
};

/// Generators x_j - T_{a_j}(P) of the ideal of a smooth space T-curve.
std::vector<std::shared_ptr<PolyExpr>> ideal_generators(const ExponentMatrix& A);

/// Checks y^3 - 2y - z = x (1 + y z) on (U_{k-2}, U_k, U_{k+2}) samples.
bool u_curve_identity_check(int k, int samples);

struct ChamberScan {
    std::map<int, int> histogram;  // real-root count -> occurrences
    int min_count = 0;
};

/// Samples directions on the unit sphere and records line_real_count.
ChamberScan chamber_scan(const ExponentMatrix& A, int samples, std::uint64_t seed);

}  // namespace chebvar
