#pragma once

#include <Eigen/Dense>
#include <vector>

#include "chebvar/rational.hpp"

namespace chebvar {

using RatVec = std::vector<Rat>;
using IVec = Eigen::VectorXi;
using IMat = Eigen::MatrixXi;

/// Multi-index matrix A; columns are the exponent vectors a_j.
struct ExponentMatrix {
    IMat E;

    ExponentMatrix() = default;
    explicit ExponentMatrix(IMat e) : E(std::move(e)) {}
    int m() const { return static_cast<int>(E.rows()); }
    int n() const { return static_cast<int>(E.cols()); }
    IVec col(int j) const { return E.col(j); }

    /// True if column c appears in A.
    bool has_column(const IVec& c) const;

    /// Downward closure under a_j - e_i, Eq.-style density test.
    /// Returns {column, coordinate} of a violation, or {-1,-1}.
    std::pair<int, int> density_violation() const;
};

/// normal . x <= offset
struct Facet {
    RatVec normal;
    Rat offset;
};

/// Vertex + facet description of a rational polytope in R^m, m <= 3.
/// Lower-dimensional polytopes carry equality constraints as facet pairs.
struct LatticePolytope {
    int ambient_dim = 0;
    int dim = -1;  // affine dimension, -1 for empty
    std::vector<RatVec> vertices;
    std::vector<Facet> facets;

    bool contains(const RatVec& x) const;
    bool contains(const IVec& x) const;
};

LatticePolytope convex_hull(const std::vector<RatVec>& points, int ambient_dim);
LatticePolytope convex_hull_int(const std::vector<IVec>& points, int ambient_dim);

/// m! * Euclidean volume, exact. Requires dim == ambient_dim.
Rat normalized_volume(const LatticePolytope& P);

/// All integer points of P, sorted lexicographically.
std::vector<IVec> lattice_points(const LatticePolytope& P);

LatticePolytope dilate(const LatticePolytope& P, int k);

/// Minkowski sum with the standard simplex conv(0, e_1..e_m).
LatticePolytope minkowski_sum_simplex(const LatticePolytope& P, int m);

/// [Z^m : ZA] = gcd of the m x m minors. Requires rank(A) = m.
long long lattice_index(const ExponentMatrix& A);

/// Lattice basis of ker_Z(A).
std::vector<IVec> integer_kernel(const ExponentMatrix& A);

/// Rank of an integer matrix over Q.
int rational_rank(const IMat& A);

struct SpecialPolytopes {
    LatticePolytope P_A;      // conv(A u 0)
    LatticePolytope P_B;      // conv of the sign boxes B_j
    LatticePolytope P_C;      // conv of the Newton boxes of the T_{a_j} u 0
    LatticePolytope P_A_cos;  // conv(A u -A)
};

SpecialPolytopes special_polytopes(const ExponentMatrix& A);

/// Vertex sets as canonical sorted lists; equality of polytopes.
bool same_polytope(const LatticePolytope& P, const LatticePolytope& Q);

}  // namespace chebvar
