#include "chebvar/implicit_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace chebvar {

std::complex<double> ImplicitPoly::eval(const std::vector<std::complex<double>>& x) const {
    std::complex<double> s = 0.0;
    for (const auto& [e, c] : terms) {
        std::complex<double> t = c;
        for (int i = 0; i < num_vars; ++i) {
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        }
        s += t;
    }
    return s;
}

std::vector<std::complex<double>> ImplicitPoly::gradient(const std::vector<std::complex<double>>& x) const {
    std::vector<std::complex<double>> g(num_vars, 0.0);
    for (const auto& [e, c] : terms) {
        for (int i = 0; i < num_vars; ++i) {
            if (e[i] == 0) continue;
            std::complex<double> t = c * static_cast<double>(e[i]);
            for (int j = 0; j < num_vars; ++j) {
                const int p = (j == i) ? e[j] - 1 : e[j];
                for (int k = 0; k < p; ++k) t *= x[j];
            }
            g[i] += t;
        }
    }
    return g;
}

int ImplicitPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms) {
        int s = 0;
        for (int v : e) s += v;
        d = std::max(d, s);
    }
    return d;
}

double ImplicitPoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [e, c] : terms) m = std::max(m, std::abs(c));
    return m;
}

void ImplicitPoly::normalize() {
    double best = 0.0;
    double sign = 1.0;
    for (const auto& [e, c] : terms) {
        if (std::abs(c) > best) {
            best = std::abs(c);
            sign = c > 0 ? 1.0 : -1.0;
        }
    }
    if (best == 0.0) return;
    for (auto& [e, c] : terms) c /= best * sign;
}

void ImplicitPoly::prune(double tol) {
    const double cut = tol * max_abs_coeff();
    for (auto it = terms.begin(); it != terms.end();) {
        if (std::abs(it->second) < cut) {
            it = terms.erase(it);
        } else {
            ++it;
        }
    }
}

std::string ImplicitPoly::str(const std::vector<std::string>& var_names) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) os << (c >= 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        os << std::abs(c);
        for (int i = 0; i < num_vars; ++i) {
            if (e[i] == 0) continue;
            os << "*";
            if (i < static_cast<int>(var_names.size())) os << var_names[i];
            else os << "x" << i + 1;
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace chebvar
