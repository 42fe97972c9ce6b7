#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chebvar/implicit_poly.hpp"
#include "chebvar/linalg.hpp"
#include "chebvar/polytope.hpp"

namespace chebvar {

enum class VarietyKind { toric, tensor, cosine, a2 };

struct VarietyReport {
    VarietyKind kind = VarietyKind::tensor;
    int dimension = 0;
    std::optional<long long> degree;
    Rat bound_PC;                     // m! vol(P_C)
    Rat bound_PB;                     // m! 2^-m vol(P_B)
    std::optional<Rat> surface_bound; // m = 2 refinement
    bool density_holds = false;
    std::optional<long long> deg_pi1_value;
    long long lattice_index_value = 1;
};

/// Generic Jacobian rank of the tensor-product parametrization.
int tensor_dimension(const ExponentMatrix& A);

/// rank(A) over Q.
int cosine_dimension(const ExponentMatrix& A);

/// Degree bounds (and the exact degree when the support is dense).
VarietyReport tensor_degree_bounds(const ExponentMatrix& A);

/// Sharper surface bound for m = 2.
Rat surface_degree_bound(const ExponentMatrix& A);

/// Sign vectors s extending to an integer matrix G with G a_j = s_j a_j.
long long deg_pi1(const ExponentMatrix& A);

/// Thm-5.3-style degree of the cosine Chebyshev variety.
VarietyReport cosine_degree(const ExponentMatrix& A);

/// One singular curve of a cosine surface in canonical 2 x 3 form:
/// x_{fixed_var} is pinned and T_{lhs_deg}(x_{lhs_var}) = T_{rhs_deg}(sign x_{rhs_var}).
struct SingularCurve {
    int fixed_var = 0;
    double fixed_value = 0.0;
    long long angle_num = 0, angle_den = 1;  // fixed_value = cos(pi num / den)
    int lhs_var = 0, lhs_deg = 0;
    int rhs_var = 0, rhs_deg = 0;
    int sign = 1;
    std::string description;
};

struct SingularCandidates {
    std::vector<std::vector<double>> points;
    std::vector<SingularCurve> curves;
    // raw family data: (J, kappa) for points, (I, nu) for self-intersections
    std::vector<std::pair<std::vector<int>, std::vector<long long>>> point_families;
    std::vector<std::pair<std::vector<int>, std::vector<long long>>> curve_families;
};

SingularCandidates cosine_singular_candidates(const ExponentMatrix& A);

/// Fits the unique degree <= bound hypersurface through parametrization
/// samples. Requires n = rank(A) + 1.
ImplicitPoly implicitize(VarietyKind kind, const ExponentMatrix& A, int degree_bound, int samples,
                         std::uint64_t seed);

/// Binomial generators x^{u+} - x^{u-} of the toric ideal.
std::vector<ImplicitPoly> toric_relations(const ExponentMatrix& A);

/// Relations of the auxiliary variety V in 2n variables (x, y):
/// the y-binomials plus the quadrics y_j^2 - 2 x_j y_j + 1.
std::vector<ImplicitPoly> auxiliary_variety_relations(const ExponentMatrix& A);

}  // namespace chebvar
