#include "chebvar/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "chebvar/errors.hpp"

namespace chebvar {

namespace {

bool is_real(const CMat& M) {
    return (M.imag().array() == 0.0).all();
}

Eigen::Index count_above(const RVec& sv, const RankPolicy& policy) {
    if (sv.size() == 0) return 0;
    const double smax = sv(0);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > policy.relative_threshold * smax && sv(i) > policy.absolute_floor) ++r;
    }
    return r;
}

}  // namespace

void check_finite(const CMat& M, const char* who) {
    if (!M.allFinite()) throw invalid_input(std::string(who) + ": non-finite entries");
}

Eigen::Index numerical_rank(const CMat& M, const RankPolicy& policy) {
    if (M.size() == 0) throw invalid_input("numerical_rank: empty matrix");
    check_finite(M, "numerical_rank");
    if (is_real(M)) {
        Eigen::BDCSVD<RMat> svd(M.real());
        return count_above(svd.singularValues(), policy);
    }
    Eigen::BDCSVD<CMat> svd(M);
    return count_above(svd.singularValues(), policy);
}

std::pair<Eigen::Index, CMat> rank_and_nullspace(const CMat& M, const RankPolicy& policy) {
    if (M.size() == 0) throw invalid_input("nullspace_basis: empty matrix");
    check_finite(M, "nullspace_basis");
    if (is_real(M)) {
        Eigen::BDCSVD<RMat> svd(M.real(), Eigen::ComputeThinU | Eigen::ComputeFullV);
        const Eigen::Index r = count_above(svd.singularValues(), policy);
        return {r, svd.matrixV().rightCols(M.cols() - r).cast<std::complex<double>>()};
    }
    Eigen::BDCSVD<CMat> svd(M, Eigen::ComputeThinU | Eigen::ComputeFullV);
    const Eigen::Index r = count_above(svd.singularValues(), policy);
    return {r, svd.matrixV().rightCols(M.cols() - r)};
}

CMat nullspace_basis(const CMat& M, const RankPolicy& policy) {
    return rank_and_nullspace(M, policy).second;
}

CMat left_pseudo_inverse(const CMat& N, const RankPolicy& policy) {
    if (N.size() == 0) throw invalid_input("left_pseudo_inverse: empty matrix");
    check_finite(N, "left_pseudo_inverse");
    Eigen::BDCSVD<CMat> svd(N, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RVec& sv = svd.singularValues();
    const Eigen::Index r = count_above(sv, policy);
    if (r < N.cols()) {
        throw rank_deficiency_error("left_pseudo_inverse: rank " + std::to_string(r) + " < " +
                                    std::to_string(N.cols()) + " columns");
    }
    CMat inv = svd.matrixV() * sv.cwiseInverse().asDiagonal().toDenseMatrix().cast<std::complex<double>>() *
               svd.matrixU().adjoint();
    return inv;
}

std::pair<CVec, CMat> eig_full(const CMat& M) {
    if (M.rows() != M.cols()) throw invalid_input("eig_pairs: matrix must be square");
    check_finite(M, "eig_pairs");
    if (is_real(M)) {
        Eigen::EigenSolver<RMat> es(M.real());
        if (es.info() != Eigen::Success) throw iteration_limit("eig_pairs: QR iteration failed");
        return {es.eigenvalues(), es.eigenvectors()};
    }
    Eigen::ComplexEigenSolver<CMat> es(M);
    if (es.info() != Eigen::Success) throw iteration_limit("eig_pairs: QR iteration failed");
    return {es.eigenvalues(), es.eigenvectors()};
}

std::vector<EigPair> eig_pairs(const CMat& M) {
    auto [vals, vecs] = eig_full(M);
    std::vector<EigPair> out;
    out.reserve(vals.size());
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        out.push_back({vals(i), vecs.col(i)});
    }
    return out;
}

}  // namespace chebvar
