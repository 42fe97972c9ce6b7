#include "chebvar/cheb.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "chebvar/errors.hpp"

namespace chebvar {

namespace {

bool real_in_unit_interval(cplx t) {
    return t.imag() == 0.0 && std::abs(t.real()) <= 1.0;
}

cplx recurrence(int k, cplx t, cplx f0, cplx f1) {
    if (k == 0) return f0;
    cplx prev = f0, cur = f1;
    for (int i = 2; i <= k; ++i) {
        cplx next = 2.0 * t * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace

void ChebCoeffs::trim() {
    double mx = 0.0;
    for (double c : coeffs) mx = std::max(mx, std::abs(c));
    const double tol = 1e-14 * mx;
    while (coeffs.size() > 1 && std::abs(coeffs.back()) <= tol) coeffs.pop_back();
}

cplx eval_T(int k, cplx t) {
    if (k < 0) throw invalid_input("eval_T: negative index");
    if (real_in_unit_interval(t)) {
        return {std::cos(k * std::acos(t.real())), 0.0};
    }
    return recurrence(k, t, 1.0, t);
}

cplx eval_U(int k, cplx t) {
    if (k < 0) throw invalid_input("eval_U: negative index");
    if (real_in_unit_interval(t)) {
        const double th = std::acos(t.real());
        const double s = std::sin(th);
        if (std::abs(s) > 1e-8) {
            return {std::sin((k + 1) * th) / s, 0.0};
        }
        // endpoints t = +-1: fall through to the recurrence
    }
    return recurrence(k, t, 1.0, 2.0 * t);
}

cplx eval_T_deriv(int k, cplx t) {
    if (k == 0) return 0.0;
    return static_cast<double>(k) * eval_U(k - 1, t);
}

cplx clenshaw_eval(const ChebCoeffs& p, cplx t) {
    if (p.coeffs.empty()) return 0.0;
    const int n = p.degree();
    cplx b1 = 0.0, b2 = 0.0;
    for (int k = n; k >= 1; --k) {
        cplx b = p.coeffs[k] + 2.0 * t * b1 - b2;
        b2 = b1;
        b1 = b;
    }
    // phi_1 - 2t phi_0 is -t for the T basis and 0 for the U basis
    if (p.kind == ChebKind::T) return p.coeffs[0] + t * b1 - b2;
    return p.coeffs[0] + 2.0 * t * b1 - b2;
}

ChebCoeffs cheb_multiply(const ChebCoeffs& p, const ChebCoeffs& q) {
    if (p.kind != ChebKind::T || q.kind != ChebKind::T)
        throw unsupported_kind("cheb_multiply: only T-basis products are supported");
    if (p.coeffs.empty() || q.coeffs.empty()) return {ChebKind::T, {}};
    ChebCoeffs r{ChebKind::T, std::vector<double>(p.coeffs.size() + q.coeffs.size() - 1, 0.0)};
    for (size_t a = 0; a < p.coeffs.size(); ++a) {
        for (size_t b = 0; b < q.coeffs.size(); ++b) {
            const double c = 0.5 * p.coeffs[a] * q.coeffs[b];
            r.coeffs[a + b] += c;
            r.coeffs[a > b ? a - b : b - a] += c;
        }
    }
    return r;
}

std::vector<double> t_roots(int k) {
    std::vector<double> r;
    r.reserve(std::max(k, 0));
    for (int l = 0; l < k; ++l) {
        r.push_back(std::cos((0.5 + l) * M_PI / k));
    }
    return r;
}

std::vector<cplx> colleague_roots(const ChebCoeffs& p) {
    ChebCoeffs q = p;
    q.trim();
    double mx = 0.0;
    for (double c : q.coeffs) mx = std::max(mx, std::abs(c));
    if (mx == 0.0) throw invalid_input("colleague_roots: zero polynomial");
    const int n = q.degree();
    if (n < 1) throw invalid_input("colleague_roots: degree must be >= 1 after trimming");

    // multiplication-by-t matrix on span{phi_0..phi_{n-1}} modulo q,
    // with the leading coefficient scaled to 1
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
    const double lead = q.coeffs[n];
    const bool u_kind = (q.kind == ChebKind::U);
    for (int k = 0; k < n - 1; ++k) {
        if (k == 0 && !u_kind) {
            M(0, 1) = 1.0;  // t T_0 = T_1
        } else {
            if (k > 0) M(k, k - 1) = 0.5;
            M(k, k + 1) = 0.5;
        }
    }
    // last row: t phi_{n-1} = 1/2 phi_{n-2} + c phi_n, reduce phi_n by q
    const double top = (n == 1 && !u_kind) ? 1.0 : 0.5;
    if (n >= 2) M(n - 1, n - 2) = 0.5;
    for (int j = 0; j < n; ++j) {
        M(n - 1, j) -= top * q.coeffs[j] / lead;
    }

    Eigen::EigenSolver<Eigen::MatrixXd> es(M);
    if (es.info() != Eigen::Success)
        throw iteration_limit("colleague_roots: eigenvalue iteration failed");
    std::vector<cplx> roots(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

std::vector<double> t_monomial_coeffs(int k) {
    std::vector<double> prev{1.0}, cur{0.0, 1.0};
    if (k == 0) return prev;
    for (int i = 2; i <= k; ++i) {
        std::vector<double> next(i + 1, 0.0);
        for (size_t j = 0; j < cur.size(); ++j) next[j + 1] += 2.0 * cur[j];
        for (size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace chebvar
