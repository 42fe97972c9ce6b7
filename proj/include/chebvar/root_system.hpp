#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "chebvar/cheb.hpp"
#include "chebvar/implicit_poly.hpp"
#include "chebvar/rational.hpp"

namespace chebvar {

/// The A2 Weyl group acting on the weight lattice Z w1 + Z w2, generated
/// from the simple reflections s1(w1) = -w1 + w2, s1(w2) = w2 and the
/// symmetric s2.
class WeylGroupA2 {
  public:
    WeylGroupA2();
    const std::vector<Eigen::Matrix2i>& elements() const { return elements_; }

  private:
    std::vector<Eigen::Matrix2i> elements_;
};

/// Theta_alpha(x) = sum over W of x^{B alpha}; x must avoid the axes.
cplx weyl_orbit_value(const Eigen::Vector2i& alpha, const std::array<cplx, 2>& x);

/// Memoized table of generalized Chebyshev polynomials from the A2
/// recurrences, with exact rational coefficients.
class GenChebTable {
  public:
    /// T_{a,b} as a bivariate polynomial in (x, y).
    const std::map<std::pair<int, int>, Rat>& poly(int a, int b);

    /// Same polynomial with double coefficients.
    ImplicitPoly poly_double(int a, int b);

    cplx eval(int a, int b, const std::array<cplx, 2>& t);

  private:
    using RatPoly = std::map<std::pair<int, int>, Rat>;
    RatPoly build(int a, int b);
    std::map<std::pair<int, int>, RatPoly> memo_;
};

/// (T_{a_1}(t), T_{a_2}(t), T_{a_3}(t)) for the columns of a 2 x 3 matrix,
/// with T from the generalized table.
std::array<cplx, 3> a2_surface_point(const Eigen::Matrix<int, 2, 3>& A, const std::array<cplx, 2>& t,
                                     GenChebTable& table);

}  // namespace chebvar
