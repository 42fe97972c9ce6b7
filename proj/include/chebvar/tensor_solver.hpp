#pragma once

#include <Eigen/Sparse>
#include <cstdint>
#include <map>
#include <vector>

#include "chebvar/linalg.hpp"
#include "chebvar/polytope.hpp"

namespace chebvar {

enum class SystemBasis { tensor, cosine };

/// Square system c0 + C . T_A(t) = 0 in a Chebyshev basis.
struct ChebSystem {
    SystemBasis basis = SystemBasis::tensor;
    ExponentMatrix A;
    RMat C;
    RVec c0;

    int m() const { return A.m(); }
    int n() const { return A.n(); }
    void validate() const;
};

/// Multi-index supports and the Macaulay-type matrix of shifted equations.
struct MacaulayAssembly {
    std::vector<IVec> A_ext, B, A0;
    std::map<std::vector<int>, int> col_index;
    CMat M;                 // (m |B|) x |A_ext|
    long long delta = -1;   // expected solution count (dense supports)
    bool density = false;
};

/// Lattice supports of the paper's construction; requires the density
/// condition.
std::tuple<std::vector<IVec>, std::vector<IVec>, std::vector<IVec>> build_support(
    const ExponentMatrix& A);

/// Coefficients of T_b . f over the extended support.
std::map<int, double> tensor_product_row(const IVec& b, const ChebSystem& system,
                                         const std::map<std::vector<int>, int>& col_index,
                                         int equation);

MacaulayAssembly assemble_M(const ChebSystem& system);

/// Multiplication-by-t_i matrix: t_i T_{A0}(t) = C_i T_{A_ext}(t).
Eigen::SparseMatrix<double> mult_matrix(int i, const std::vector<IVec>& A0,
                                        const std::map<std::vector<int>, int>& col_index);

struct SolutionPoint {
    CVec t;
    double residual = 0.0;
    bool is_real = false;
    bool in_box = false;
};

struct SolutionSet {
    std::vector<SolutionPoint> points;
    std::uint64_t seed = 0;
    long long expected = -1;        // delta for dense supports
    bool density = false;
    Eigen::Index macaulay_rank = -1;
    double real_tol = 1e-8;
    double box_slack = 1e-10;
};

struct TensorSolveOptions {
    std::uint64_t seed = 0;
    RankPolicy rank_policy;
    int newton_steps = 8;
    double residual_keep = 1e-8;  // candidate filter for non-dense supports
};

SolutionSet solve_tensor(const ChebSystem& system, const TensorSolveOptions& opts = {});

/// Values of the system at t (tensor basis).
CVec tensor_system_values(const ChebSystem& system, const CVec& t);

/// Exact Chebyshev-basis Jacobian at t.
CMat tensor_system_jacobian(const ChebSystem& system, const CVec& t);

/// Relative residual with term-magnitude scaling.
double tensor_relative_residual(const ChebSystem& system, const CVec& t);

}  // namespace chebvar
