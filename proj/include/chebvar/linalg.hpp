#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace chebvar {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

/// Singular values below relative_threshold * sigma_max or below
/// absolute_floor are treated as zero.
struct RankPolicy {
    double relative_threshold = 1e-10;
    double absolute_floor = 1e-14;
};

struct EigPair {
    std::complex<double> value;
    CVec vector;
};

/// Number of singular values above the policy thresholds.
Eigen::Index numerical_rank(const CMat& M, const RankPolicy& policy = {});

/// Orthonormal basis of the kernel, cols(M) - rank columns.
CMat nullspace_basis(const CMat& M, const RankPolicy& policy = {});

/// Rank and kernel basis from a single decomposition.
std::pair<Eigen::Index, CMat> rank_and_nullspace(const CMat& M, const RankPolicy& policy = {});

/// Left pseudo-inverse of a full-column-rank matrix.
CMat left_pseudo_inverse(const CMat& N, const RankPolicy& policy = {});

/// All eigenpairs of a square matrix.
std::vector<EigPair> eig_pairs(const CMat& M);

/// Eigenvalues and the eigenvector matrix in one call.
std::pair<CVec, CMat> eig_full(const CMat& M);

void check_finite(const CMat& M, const char* who);

}  // namespace chebvar
