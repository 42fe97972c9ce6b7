#include "chebvar/curves.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "chebvar/errors.hpp"

namespace chebvar {

namespace {

constexpr double kRealTol = 1e-8;  // imaginary-part tolerance for root classification

ChebCoeffs unit_cheb(ChebKind kind, int k) {
    ChebCoeffs p{kind, std::vector<double>(k + 1, 0.0)};
    p.coeffs[k] = 1.0;
    return p;
}

}  // namespace

PlaneCurveReport plane_curve(int a, int b) {
    if (a <= 0) throw invalid_input("plane_curve: a must be positive");
    if (a > b) throw invalid_input("plane_curve: expected a <= b");
    PlaneCurveReport r;
    r.a = a;
    r.b = b;
    r.g = std::gcd(a, b);
    r.a_red = a / r.g;
    r.b_red = b / r.g;
    r.degree = r.b_red;
    r.implicit.num_vars = 2;
    auto bx = t_monomial_coeffs(r.b_red);
    for (size_t k = 0; k < bx.size(); ++k) {
        if (bx[k] != 0.0) r.implicit.add({static_cast<int>(k), 0}, bx[k]);
    }
    auto ay = t_monomial_coeffs(r.a_red);
    for (size_t k = 0; k < ay.size(); ++k) {
        if (ay[k] != 0.0) r.implicit.add({0, static_cast<int>(k)}, -ay[k]);
    }
    return r;
}

std::vector<std::pair<double, double>> padua_points(int a, int b) {
    if (a < 1 || b < 1) throw invalid_input("padua_points: indices must be >= 1");
    std::vector<std::pair<double, double>> pts;
    for (int k = 1; k <= b - 1; ++k) {
        for (int l = 1; l <= a - 1; ++l) {
            if ((k - l) % 2 != 0) continue;
            pts.emplace_back(std::cos(k * M_PI / b), std::cos(l * M_PI / a));
        }
    }
    return pts;
}

int line_real_count(const ExponentMatrix& A, const std::vector<double>& v, ChebKind kind) {
    if (A.m() != 1) throw invalid_input("line_real_count: A must be 1 x n");
    if (static_cast<int>(v.size()) != A.n())
        throw invalid_input("line_real_count: coefficient count mismatch");
    int dmax = 0;
    for (int j = 0; j < A.n(); ++j) dmax = std::max(dmax, A.E(0, j));
    ChebCoeffs p{kind, std::vector<double>(dmax + 1, 0.0)};
    for (int j = 0; j < A.n(); ++j) p.coeffs[A.E(0, j)] += v[j];
    double mx = 0.0;
    for (double c : p.coeffs) mx = std::max(mx, std::abs(c));
    if (mx == 0.0) throw invalid_input("line_real_count: identically zero combination");
    int count = 0;
    for (cplx r : colleague_roots(p)) {
        if (std::abs(r.imag()) < kRealTol) ++count;
    }
    return count;
}

bool hyperbolicity_check(int a, ChebKind kind, int trials, std::uint64_t seed) {
    if (a < 1) throw invalid_input("hyperbolicity_check: a must be >= 1");
    Rng rng(seed);
    IMat A(1, 2);
    A << a, a + 1;
    ExponentMatrix E(A);
    for (int t = 0; t < trials; ++t) {
        const double th = rng.uniform(0.0, 2.0 * M_PI);
        if (line_real_count(E, {std::cos(th), std::sin(th)}, kind) != a + 1) return false;
    }
    return true;
}

cplx InversionPoly::eval(const std::vector<cplx>& x) const {
    if (degenerate) return x[degenerate_slot];
    return 2.0 * eval_T(static_cast<int>(u), x[slot_b]) * eval_T(static_cast<int>(v), x[slot_c]) -
           eval_T(static_cast<int>(w), x[slot_a]);
}

InversionPoly inversion_polynomial(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw invalid_input("inversion_polynomial: indices must be >= 1");
    if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1)
        throw invalid_input("inversion_polynomial: indices must be pairwise coprime");
    InversionPoly P;
    int vals[3] = {a, b, c};
    for (int i = 0; i < 3; ++i) {
        if (vals[i] == 1) {
            P.degenerate = true;
            P.degenerate_slot = i;
            P.a = a;
            P.b = b;
            P.c = c;
            return P;
        }
    }
    // the odd index plays the role of a; at most one of the three is even
    int slots[3] = {0, 1, 2};
    if (vals[0] % 2 == 0) {
        std::swap(vals[0], vals[1]);
        std::swap(slots[0], slots[1]);
        if (vals[0] % 2 == 0) {
            std::swap(vals[0], vals[2]);
            std::swap(slots[0], slots[2]);
        }
    }
    const long long ra = vals[0], rb = vals[1], rc = vals[2];
    // minimal u, v >= 1 with u rb - v rc = 1
    long long u = -1, v = -1;
    for (long long uu = 1; uu <= rc + rb * rc; ++uu) {
        if ((uu * rb - 1) % rc == 0) {
            long long vv = (uu * rb - 1) / rc;
            if (vv >= 1) {
                u = uu;
                v = vv;
                break;
            }
        }
    }
    if (u < 0) throw internal_consistency_error("inversion_polynomial: no (u, v) found");
    // shift u += x rc, v += x rb until u rb + v rc = 0 mod ra
    long long x = 0;
    while ((u * rb + v * rc) % ra != 0) {
        ++x;
        u += rc;
        v += rb;
        if (x > 2 * ra) throw internal_consistency_error("inversion_polynomial: shift search failed");
    }
    P.a = static_cast<int>(ra);
    P.b = static_cast<int>(rb);
    P.c = static_cast<int>(rc);
    P.slot_a = slots[0];
    P.slot_b = slots[1];
    P.slot_c = slots[2];
    P.u = u;
    P.v = v;
    P.w = (u * rb + v * rc) / ra;
    return P;
}

cplx PolyExpr::eval(const std::vector<cplx>& x) const {
    switch (kind) {
        case Kind::Var:
            return x[var];
        case Kind::Const:
            return value;
        case Kind::Sum: {
            cplx s = 0.0;
            for (const auto& ch : children) s += ch->eval(x);
            return s;
        }
        case Kind::Product: {
            cplx p = 1.0;
            for (const auto& ch : children) p *= ch->eval(x);
            return p;
        }
        case Kind::ChebT:
            return eval_T(cheb_index, children[0]->eval(x));
        case Kind::ChebU:
            return eval_U(cheb_index, children[0]->eval(x));
    }
    return 0.0;
}

std::shared_ptr<PolyExpr> PolyExpr::variable(int slot) {
    auto e = std::make_shared<PolyExpr>();
    e->kind = Kind::Var;
    e->var = slot;
    return e;
}

std::shared_ptr<PolyExpr> PolyExpr::constant(double c) {
    auto e = std::make_shared<PolyExpr>();
    e->kind = Kind::Const;
    e->value = c;
    return e;
}

std::shared_ptr<PolyExpr> PolyExpr::sum(std::vector<std::shared_ptr<PolyExpr>> terms) {
    auto e = std::make_shared<PolyExpr>();
    e->kind = Kind::Sum;
    e->children = std::move(terms);
    return e;
}

std::shared_ptr<PolyExpr> PolyExpr::product(std::vector<std::shared_ptr<PolyExpr>> factors) {
    auto e = std::make_shared<PolyExpr>();
    e->kind = Kind::Product;
    e->children = std::move(factors);
    return e;
}

std::shared_ptr<PolyExpr> PolyExpr::cheb_t(int k, std::shared_ptr<PolyExpr> inner) {
    auto e = std::make_shared<PolyExpr>();
    e->kind = Kind::ChebT;
    e->cheb_index = k;
    e->children = {std::move(inner)};
    return e;
}

std::vector<std::shared_ptr<PolyExpr>> ideal_generators(const ExponentMatrix& A) {
    if (A.m() != 1) throw invalid_input("ideal_generators: A must be 1 x n");
    const int n = A.n();
    for (int j = 0; j < n; ++j) {
        if (A.E(0, j) < 1) throw invalid_input("ideal_generators: entries must be >= 1");
    }
    // P built either from a slot with value 1 or from a pairwise-coprime triple
    std::shared_ptr<PolyExpr> P;
    int unit_slot = -1;
    for (int j = 0; j < n; ++j) {
        if (A.E(0, j) == 1) {
            unit_slot = j;
            break;
        }
    }
    if (unit_slot >= 0) {
        P = PolyExpr::variable(unit_slot);
    } else {
        int si = -1, sj = -1, sk = -1;
        for (int i = 0; i < n && si < 0; ++i) {
            for (int j = i + 1; j < n && si < 0; ++j) {
                for (int k = j + 1; k < n && si < 0; ++k) {
                    if (std::gcd(A.E(0, i), A.E(0, j)) == 1 && std::gcd(A.E(0, i), A.E(0, k)) == 1 &&
                        std::gcd(A.E(0, j), A.E(0, k)) == 1) {
                        si = i;
                        sj = j;
                        sk = k;
                    }
                }
            }
        }
        if (si < 0)
            throw unsupported_support("ideal_generators: no pairwise-coprime triple in the support");
        InversionPoly ip = inversion_polynomial(A.E(0, si), A.E(0, sj), A.E(0, sk));
        const int slot_map[3] = {si, sj, sk};
        P = PolyExpr::sum(
            {PolyExpr::product({PolyExpr::constant(2.0),
                                PolyExpr::cheb_t(static_cast<int>(ip.u), PolyExpr::variable(slot_map[ip.slot_b])),
                                PolyExpr::cheb_t(static_cast<int>(ip.v), PolyExpr::variable(slot_map[ip.slot_c]))}),
             PolyExpr::product({PolyExpr::constant(-1.0),
                                PolyExpr::cheb_t(static_cast<int>(ip.w), PolyExpr::variable(slot_map[ip.slot_a]))})});
    }
    std::vector<std::shared_ptr<PolyExpr>> gens;
    for (int j = 0; j < n; ++j) {
        gens.push_back(PolyExpr::sum(
            {PolyExpr::variable(j),
             PolyExpr::product({PolyExpr::constant(-1.0), PolyExpr::cheb_t(A.E(0, j), P)})}));
    }
    return gens;
}

bool u_curve_identity_check(int k, int samples) {
    if (k < 2) throw invalid_input("u_curve_identity_check: k must be >= 2");
    Rng rng(2024);
    for (int s = 0; s < samples; ++s) {
        cplx t{rng.uniform(-1.0, 1.0), 0.0};
        if (s % 3 == 2) t += cplx(0.0, rng.uniform(-0.5, 0.5));
        const cplx x = eval_U(k - 2, t), y = eval_U(k, t), z = eval_U(k + 2, t);
        const cplx lhs = y * y * y - 2.0 * y - z;
        const cplx rhs = x * (1.0 + y * z);
        const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        if (std::abs(lhs - rhs) > 1e-9 * scale) return false;
    }
    return true;
}

ChamberScan chamber_scan(const ExponentMatrix& A, int samples, std::uint64_t seed) {
    if (A.m() != 1 || A.n() < 2) throw invalid_input("chamber_scan: A must be 1 x n with n >= 2");
    ChamberScan out;
    Rng base(seed);
    const int n = A.n();
    bool first = true;
    for (int s = 0; s < samples; ++s) {
        Rng rng = base.fork(static_cast<std::uint64_t>(s));
        std::vector<double> v(n);
        double nrm = 0.0;
        do {
            nrm = 0.0;
            for (int j = 0; j < n; ++j) {
                v[j] = rng.normal();
                nrm += v[j] * v[j];
            }
        } while (nrm == 0.0);
        nrm = std::sqrt(nrm);
        for (double& x : v) x /= nrm;
        const int c = line_real_count(A, v);
        out.histogram[c] += 1;
        if (first || c < out.min_count) {
            out.min_count = c;
            first = false;
        }
    }
    return out;
}

}  // namespace chebvar
