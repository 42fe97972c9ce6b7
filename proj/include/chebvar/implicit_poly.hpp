#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace chebvar {

/// Dense multivariate polynomial in the monomial basis.
struct ImplicitPoly {
    int num_vars = 0;
    std::map<std::vector<int>, double> terms;

    void add(const std::vector<int>& expo, double c) {
        if (c == 0.0) return;
        auto it = terms.find(expo);
        if (it == terms.end()) {
            terms[expo] = c;
        } else {
            it->second += c;
            if (it->second == 0.0) terms.erase(it);
        }
    }

    std::complex<double> eval(const std::vector<std::complex<double>>& x) const;

    /// Partial derivative values at x.
    std::vector<std::complex<double>> gradient(const std::vector<std::complex<double>>& x) const;

    int total_degree() const;
    double max_abs_coeff() const;

    /// Scales so the largest-magnitude coefficient becomes +1.
    void normalize();

    /// Drops coefficients below tol * max|coeff|.
    void prune(double tol);

    std::string str(const std::vector<std::string>& var_names = {}) const;
};

}  // namespace chebvar
