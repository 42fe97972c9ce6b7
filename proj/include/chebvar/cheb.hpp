#pragma once

#include <complex>
#include <vector>

namespace chebvar {

using cplx = std::complex<double>;

enum class ChebKind { T, U };

/// Polynomial expressed in the Chebyshev T- or U-basis. coeffs[k]
/// multiplies T_k (or U_k).
struct ChebCoeffs {
    ChebKind kind = ChebKind::T;
    std::vector<double> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    /// Drops trailing coefficients below 1e-14 * max|coeff|.
    void trim();
};

/// T_k(t). Uses cos(k acos t) for real t in [-1,1], the three-term
/// recurrence elsewhere.
cplx eval_T(int k, cplx t);

/// U_k(t), same evaluation policy with the U recurrence.
cplx eval_U(int k, cplx t);

/// Derivative T_k'(t) = k U_{k-1}(t).
cplx eval_T_deriv(int k, cplx t);

/// Clenshaw evaluation of a T- or U-series.
cplx clenshaw_eval(const ChebCoeffs& p, cplx t);

/// Product of two T-basis polynomials via 2 T_a T_b = T_{a+b} + T_{|a-b|}.
ChebCoeffs cheb_multiply(const ChebCoeffs& p, const ChebCoeffs& q);

/// Roots cos((l + 1/2) pi / k), l = 0..k-1, strictly decreasing.
std::vector<double> t_roots(int k);

/// All complex roots of p via the colleague matrix.
std::vector<cplx> colleague_roots(const ChebCoeffs& p);

/// Monomial coefficients of T_k (index = power of t). Exact integers,
/// stored as doubles; intended for small k and for test oracles.
std::vector<double> t_monomial_coeffs(int k);

}  // namespace chebvar
