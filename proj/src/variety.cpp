#include "chebvar/variety.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "chebvar/cheb.hpp"
#include "chebvar/errors.hpp"
#include "chebvar/rng.hpp"
#include "chebvar/root_system.hpp"

namespace chebvar {

namespace {

using RatMat = std::vector<std::vector<Rat>>;

RatMat to_rat(const IMat& A) {
    RatMat M(A.rows(), std::vector<Rat>(A.cols()));
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) M[i][j] = Rat(A(i, j));
    return M;
}

/// Solves the m x m rational system M x = rhs by Gaussian elimination.
std::vector<Rat> solve_rat(RatMat M, std::vector<Rat> rhs) {
    const int m = static_cast<int>(M.size());
    for (int col = 0; col < m; ++col) {
        int piv = -1;
        for (int i = col; i < m; ++i) {
            if (M[i][col].num != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) throw rank_deficiency_error("solve_rat: singular system");
        std::swap(M[piv], M[col]);
        std::swap(rhs[piv], rhs[col]);
        for (int i = 0; i < m; ++i) {
            if (i == col || M[i][col].num == 0) continue;
            Rat f = M[i][col] / M[col][col];
            for (int j = col; j < m; ++j) M[i][j] -= f * M[col][j];
            rhs[i] -= f * rhs[col];
        }
    }
    std::vector<Rat> x(m);
    for (int i = 0; i < m; ++i) x[i] = rhs[i] / M[i][i];
    return x;
}

/// First lexicographic set of m linearly independent columns.
std::vector<int> independent_columns(const IMat& A) {
    const int m = static_cast<int>(A.rows());
    std::vector<int> cols;
    for (int j = 0; j < A.cols() && static_cast<int>(cols.size()) < m; ++j) {
        cols.push_back(j);
        IMat sub(m, cols.size());
        for (size_t k = 0; k < cols.size(); ++k) sub.col(k) = A.col(cols[k]);
        if (rational_rank(sub) < static_cast<int>(cols.size())) cols.pop_back();
    }
    if (static_cast<int>(cols.size()) < m)
        throw rank_deficiency_error("independent_columns: rank(A) < m");
    return cols;
}

std::vector<std::vector<int>> monomials_up_to(int nvars, int bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(nvars, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == nvars) {
            out.push_back(e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[pos] = k;
            self(self, pos + 1, left - k);
        }
        e[pos] = 0;
    };
    rec(rec, 0, bound);
    return out;
}

cplx tensor_value(const IMat& A, int j, const std::vector<cplx>& t) {
    cplx v = 1.0;
    for (int i = 0; i < A.rows(); ++i) v *= eval_T(A(i, j), t[i]);
    return v;
}

}  // namespace

int tensor_dimension(const ExponentMatrix& A) {
    const int m = A.m(), n = A.n();
    Rng rng(0xC0FFEEull);
    int best = 0;
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<cplx> t(m);
        for (int i = 0; i < m; ++i) t[i] = rng.uniform(0.3, 0.9);
        CMat J(n, m);
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < m; ++i) {
                cplx d = eval_T_deriv(A.E(i, j), t[i]);
                for (int k = 0; k < m; ++k) {
                    if (k != i) d *= eval_T(A.E(k, j), t[k]);
                }
                J(j, i) = d;
            }
        }
        best = std::max(best, static_cast<int>(numerical_rank(J)));
    }
    return best;
}

int cosine_dimension(const ExponentMatrix& A) {
    return rational_rank(A.E);
}

VarietyReport tensor_degree_bounds(const ExponentMatrix& A) {
    const int m = A.m();
    if ((A.E.array() < 0).any())
        throw invalid_input("tensor_degree_bounds: negative exponents");
    if (tensor_dimension(A) != m)
        throw rank_deficiency_error("tensor_degree_bounds: variety dimension < m");
    VarietyReport r;
    r.kind = VarietyKind::tensor;
    r.dimension = m;
    auto S = special_polytopes(A);
    r.bound_PC = normalized_volume(S.P_C);
    r.bound_PB = normalized_volume(S.P_B) / Rat(1LL << m);
    r.lattice_index_value = lattice_index(A);
    auto [vj, vi] = A.density_violation();
    r.density_holds = vj < 0;
    if (r.density_holds) {
        Rat volA = normalized_volume(S.P_A);
        if (!(volA == r.bound_PC) || !(volA == r.bound_PB) || !same_polytope(S.P_A, S.P_C))
            throw internal_consistency_error(
                "tensor_degree_bounds: dense support but P_A, P_C, P_B/2^m disagree");
        if (!volA.is_integer())
            throw internal_consistency_error("tensor_degree_bounds: non-integral degree");
        r.degree = volA.num;
    }
    if (m == 2) r.surface_bound = surface_degree_bound(A);
    return r;
}

Rat surface_degree_bound(const ExponentMatrix& A) {
    if (A.m() != 2) throw invalid_input("surface_degree_bound: A must be 2 x n");
    if (rational_rank(A.E) < 2) throw rank_deficiency_error("surface_degree_bound: rank(A) < 2");
    const int n = A.n();
    // columns sorted by first row, stable
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return A.E(0, i) < A.E(0, j); });
    std::vector<long long> a(n + 1, 0), b(n + 1, 0);  // index 0 is the sentinel
    for (int k = 0; k < n; ++k) {
        a[k + 1] = A.E(0, order[k]);
        b[k + 1] = A.E(1, order[k]);
    }
    // sigma: stable order of b
    std::vector<int> sigma(n + 1, 0);
    {
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 1);
        std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return b[i] < b[j]; });
        for (int k = 0; k < n; ++k) sigma[k + 1] = idx[k];
    }
    int alpha = 0;
    for (int j = n - 1; j >= 0; --j) {
        if (b[j] != b[n]) {
            alpha = j;
            break;
        }
    }
    int beta = 0;
    auto a_sig = [&](int j) { return j == 0 ? 0 : a[sigma[j]]; };
    auto b_sig = [&](int j) { return j == 0 ? 0 : b[sigma[j]]; };
    for (int j = n - 1; j >= 0; --j) {
        if (a_sig(j) != a_sig(n)) {
            beta = j;
            break;
        }
    }
    auto S = special_polytopes(A);
    Rat volB = normalized_volume(S.P_B);  // = 2 vol(P_B) for m = 2
    Rat bound = (volB - Rat(4 * b[n] * (a[n] - a[alpha])) -
                 Rat(4 * a_sig(n) * (b_sig(n) - b_sig(beta)))) *
                Rat(1, 4);
    return bound;
}

long long deg_pi1(const ExponentMatrix& A) {
    const int m = A.m(), n = A.n();
    if (n > 20) throw enumeration_cap("deg_pi1: n > 20");
    if (rational_rank(A.E) < m) throw rank_deficiency_error("deg_pi1: rank(A) < m");
    // s is a valid sheet of pi_1 iff a_j -> s_j a_j preserves the toric
    // relations: sum_j w_j s_j a_j = 0 for every kernel vector w. This is
    // the same as requiring a rational G with G a_j = s_j a_j.
    const auto kernel = integer_kernel(A);
    long long count = 0;
    for (long long mask = 0; mask < (1LL << n); ++mask) {
        bool ok = true;
        for (const IVec& w : kernel) {
            for (int i = 0; i < m && ok; ++i) {
                long long s = 0;
                for (int j = 0; j < n; ++j) {
                    const long long sj = (mask >> j) & 1 ? -1 : 1;
                    s += w(j) * sj * A.E(i, j);
                }
                if (s != 0) ok = false;
            }
            if (!ok) break;
        }
        if (ok) ++count;
    }
    return count;
}

VarietyReport cosine_degree(const ExponentMatrix& A) {
    const int m = A.m();
    if (m > 3) throw unsupported_dimension("cosine_degree: m > 3");
    if (rational_rank(A.E) < m) throw rank_deficiency_error("cosine_degree: rank(A) < m");
    VarietyReport r;
    r.kind = VarietyKind::cosine;
    r.dimension = m;
    auto S = special_polytopes(A);
    Rat vol = normalized_volume(S.P_A_cos);
    r.deg_pi1_value = deg_pi1(A);
    r.lattice_index_value = lattice_index(A);
    Rat deg = vol / (Rat(*r.deg_pi1_value) * Rat(r.lattice_index_value));
    if (!deg.is_integer())
        throw internal_consistency_error("cosine_degree: non-integral degree " + deg.str() +
                                         " (deg pi1 heuristic may not apply)");
    r.degree = deg.num;
    return r;
}

namespace {

/// A in canonical form [1_m | R] via rational row reduction; throws when
/// the leftmost m x m block is singular.
RatMat canonical_form(const ExponentMatrix& A) {
    const int m = A.m(), n = A.n();
    IMat left(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) left(i, j) = A.E(i, j);
    if (rational_rank(left) < m)
        throw unsupported_dimension(
            "cosine_singular_candidates: leftmost m x m block must be invertible");
    RatMat C(m, std::vector<Rat>(n));
    for (int j = m; j < n; ++j) {
        RatMat L = to_rat(left);
        std::vector<Rat> rhs(m);
        for (int i = 0; i < m; ++i) rhs[i] = Rat(A.E(i, j));
        auto col = solve_rat(L, rhs);
        for (int i = 0; i < m; ++i) C[i][j] = col[i];
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) C[i][j] = Rat(i == j ? 1 : 0);
    return C;
}

int rank_of_columns(const RatMat& C, const std::vector<int>& cols) {
    const int m = static_cast<int>(C.size());
    RatMat W(m, std::vector<Rat>(cols.size()));
    for (int i = 0; i < m; ++i)
        for (size_t k = 0; k < cols.size(); ++k) W[i][k] = C[i][cols[k]];
    // elimination
    int rank = 0;
    int rows = m, ncols = static_cast<int>(cols.size());
    int row = 0;
    for (int col = 0; col < ncols && row < rows; ++col) {
        int piv = -1;
        for (int i = row; i < rows; ++i) {
            if (W[i][col].num != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(W[piv], W[row]);
        for (int i = row + 1; i < rows; ++i) {
            if (W[i][col].num == 0) continue;
            Rat f = W[i][col] / W[row][col];
            for (int j = col; j < ncols; ++j) W[i][j] -= f * W[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

SingularCandidates cosine_singular_candidates(const ExponentMatrix& A) {
    const int m = A.m(), n = A.n();
    if (m > 3) throw unsupported_dimension("cosine_singular_candidates: m > 3");
    if (rational_rank(A.E) < m)
        throw rank_deficiency_error("cosine_singular_candidates: rank(A) < m");
    RatMat C = canonical_form(A);
    SingularCandidates out;

    // ---- H-families and closed-form curves (m = 2, n = 3, positive rest) ----
    bool closed_form = false;
    if (m == 2 && n == 3 && C[0][2].sign() > 0 && C[1][2].sign() > 0) {
        closed_form = true;
        const long long a1 = C[0][2].num, a2 = C[0][2].den;
        const long long b1 = C[1][2].num, b2 = C[1][2].den;
        // I = {0}: u0 = nu a2 pi / a1, sign (-1)^nu; interior iff a1 does not divide nu a2
        auto emit = [&](int fixed_var, long long p1, long long p2, int other_var, long long q1,
                        long long q2) {
            // fixed coordinate value cos(nu p2 pi / p1), relation T_{q1}(x_other) = T_{q2}(s x_2)
            std::set<std::pair<long long, int>> seen;  // (nu p2 mod 2 p1, sign)
            for (long long nu = 0; nu <= 4 * p1; ++nu) {
                if ((nu * p2) % p1 == 0) continue;  // extremal: no singularity
                long long k = (nu * p2) % (2 * p1);
                int s = (nu % 2 == 0) ? 1 : -1;
                // cos(k pi / p1) duplicates under k -> 2 p1 - k
                long long kc = std::min(k, 2 * p1 - k);
                if (!seen.insert({kc, s}).second) continue;
                SingularCurve c;
                c.fixed_var = fixed_var;
                c.angle_num = kc;
                c.angle_den = p1;
                c.fixed_value = std::cos(M_PI * static_cast<double>(kc) / static_cast<double>(p1));
                c.lhs_var = other_var;
                c.lhs_deg = static_cast<int>(q1);
                c.rhs_var = 2;
                c.rhs_deg = static_cast<int>(q2);
                c.sign = s;
                std::ostringstream os;
                os << "x" << fixed_var + 1 << " = cos(" << kc << "pi/" << p1 << "), T_" << q1 << "(x"
                   << other_var + 1 << ") = T_" << q2 << "(" << (s > 0 ? "" : "-") << "x3)";
                c.description = os.str();
                out.curves.push_back(c);
                out.curve_families.push_back({{fixed_var}, {nu}});
            }
        };
        emit(0, a1, a2, 1, b1, b2);
        emit(1, b1, b2, 0, a1, a2);
    } else {
        // raw (I, nu) families only
        for (int imask = 1; imask < (1 << m) - 1; ++imask) {
            std::vector<int> I;
            for (int i = 0; i < m; ++i) {
                if ((imask >> i) & 1) I.push_back(i);
            }
            long long range = 2;
            for (int j = m; j < n; ++j) {
                for (int i : I) range = std::max(range, 2 * std::abs(C[i][j].num) * C[i][j].den);
            }
            std::vector<long long> nu(n - m, 0);
            out.curve_families.push_back({I, nu});  // representative; full range documented
            (void)range;
        }
    }

    // ---- L-families: maximal J with full-rank complement; finite point images ----
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::vector<int>> maximal_J;
    for (int jmask = 0; jmask < (1 << n); ++jmask) {
        std::vector<int> J, K;
        for (int j = 0; j < n; ++j) {
            if ((jmask >> j) & 1) J.push_back(j);
            else K.push_back(j);
        }
        if (rank_of_columns(C, J) >= m) continue;  // J itself must be rank-deficient
        if (rank_of_columns(C, K) < m) continue;   // complement must pin u
        maximal_J.push_back(J);
    }
    // keep only maximal by inclusion
    std::vector<std::vector<int>> keep;
    for (const auto& J : maximal_J) {
        bool dominated = false;
        for (const auto& J2 : maximal_J) {
            if (J2.size() > J.size() && std::includes(J2.begin(), J2.end(), J.begin(), J.end()))
                dominated = true;
        }
        if (!dominated) keep.push_back(J);
    }

    std::set<std::vector<long long>> point_keys;
    for (const auto& J : keep) {
        std::vector<int> K;
        for (int j = 0; j < n; ++j) {
            if (std::find(J.begin(), J.end(), j) == J.end()) K.push_back(j);
        }
        // m independent columns of K
        std::vector<int> K0;
        for (int j : K) {
            K0.push_back(j);
            if (rank_of_columns(C, K0) < static_cast<int>(K0.size())) K0.pop_back();
            if (static_cast<int>(K0.size()) == m) break;
        }
        // u = pi * sum_k kappa_k w_k, w solves (A_{K0})^T w_k = e_k
        RatMat BT(m, std::vector<Rat>(m));
        for (int r = 0; r < m; ++r)
            for (int c2 = 0; c2 < m; ++c2) BT[r][c2] = C[c2][K0[r]];
        std::vector<std::vector<Rat>> w(m);
        for (int k = 0; k < m; ++k) {
            std::vector<Rat> e(m);
            e[k] = Rat(1);
            w[k] = solve_rat(BT, e);
        }
        // kappa period: lcm of denominators of a_l . w_k over all l, k
        long long L = 2;
        for (int l = 0; l < n; ++l) {
            for (int k = 0; k < m; ++k) {
                Rat q;
                for (int i = 0; i < m; ++i) q += C[i][l] * w[k][i];
                L = std::lcm(L, q.den);
            }
        }
        L = std::min(L * 2, 60LL);  // enumeration window per coordinate
        std::vector<long long> kappa(m, 0);
        auto rec = [&](auto&& self, int depth) -> void {
            if (depth == m) {
                // u/pi as rational vector
                std::vector<Rat> upi(m);
                for (int i = 0; i < m; ++i) {
                    for (int k = 0; k < m; ++k) upi[i] += w[k][i] * Rat(kappa[k]);
                }
                // consistency on the rest of K
                for (int l : K) {
                    Rat q;
                    for (int i = 0; i < m; ++i) q += C[i][l] * upi[i];
                    if (!q.is_integer()) return;
                }
                std::vector<double> x(n);
                std::vector<long long> key;
                for (int l = 0; l < n; ++l) {
                    Rat q;
                    for (int i = 0; i < m; ++i) q += C[i][l] * upi[i];
                    double val = std::cos(M_PI * q.to_double());
                    x[l] = std::abs(std::abs(val) - 1.0) < 1e-12 ? std::round(val) : val;
                    key.push_back(static_cast<long long>(std::llround(x[l] * (1LL << 30))));
                }
                if (point_keys.insert(key).second) {
                    out.points.push_back(x);
                    out.point_families.push_back({J, kappa});
                }
            } else {
                for (kappa[depth] = 0; kappa[depth] < L; ++kappa[depth]) self(self, depth + 1);
            }
        };
        rec(rec, 0);
    }

    // drop points that already lie on an emitted closed-form curve
    if (closed_form && !out.curves.empty()) {
        std::vector<std::vector<double>> pts;
        std::vector<std::pair<std::vector<int>, std::vector<long long>>> fams;
        for (size_t p = 0; p < out.points.size(); ++p) {
            const auto& x = out.points[p];
            bool on_curve = false;
            for (const auto& c : out.curves) {
                if (std::abs(x[c.fixed_var] - c.fixed_value) > 1e-9) continue;
                cplx lhs = eval_T(c.lhs_deg, x[c.lhs_var]);
                cplx rhs = eval_T(c.rhs_deg, static_cast<double>(c.sign) * x[c.rhs_var]);
                if (std::abs(lhs - rhs) < 1e-9) {
                    on_curve = true;
                    break;
                }
            }
            if (!on_curve) {
                pts.push_back(x);
                fams.push_back(out.point_families[p]);
            }
        }
        out.points = std::move(pts);
        out.point_families = std::move(fams);
    }
    return out;
}

ImplicitPoly implicitize(VarietyKind kind, const ExponentMatrix& A, int degree_bound, int samples,
                         std::uint64_t seed) {
    const int m = A.m(), n = A.n();
    const int rank = rational_rank(A.E);
    int nvars = n;
    if (kind != VarietyKind::a2 && n != rank + 1)
        throw invalid_input("implicitize: expected a hypersurface (n = rank(A) + 1)");
    if (kind == VarietyKind::a2 && !(m == 2 && n == 3))
        throw invalid_input("implicitize: a2 kind expects a 2 x 3 matrix");

    auto mons = monomials_up_to(nvars, degree_bound);
    const int cols = static_cast<int>(mons.size());
    const int rows = std::max(samples, 2 * cols);

    Rng rng(seed);
    GenChebTable table;
    Eigen::Matrix<int, 2, 3> A23;
    if (kind == VarietyKind::a2) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 3; ++j) A23(i, j) = A.E(i, j);
    }

    CMat V(rows, cols);
    for (int s = 0; s < rows; ++s) {
        std::vector<cplx> x(nvars);
        if (kind == VarietyKind::tensor) {
            std::vector<cplx> t(m);
            for (int i = 0; i < m; ++i)
                t[i] = std::cos(cplx(rng.uniform(0.0, 2.0 * M_PI), 0.4 * rng.normal()));
            for (int j = 0; j < n; ++j) x[j] = tensor_value(A.E, j, t);
        } else if (kind == VarietyKind::cosine) {
            std::vector<cplx> u(m);
            for (int i = 0; i < m; ++i) u[i] = cplx(rng.uniform(0.0, 2.0 * M_PI), 0.4 * rng.normal());
            for (int j = 0; j < n; ++j) {
                cplx arg = 0.0;
                for (int i = 0; i < m; ++i) arg += static_cast<double>(A.E(i, j)) * u[i];
                x[j] = std::cos(arg);
            }
        } else if (kind == VarietyKind::toric) {
            std::vector<cplx> t(m);
            for (int i = 0; i < m; ++i) t[i] = rng.unit_phase() * rng.uniform(0.8, 1.25);
            for (int j = 0; j < n; ++j) {
                cplx v = 1.0;
                for (int i = 0; i < m; ++i) {
                    for (int k = 0; k < A.E(i, j); ++k) v *= t[i];
                }
                x[j] = v;
            }
        } else {  // a2
            std::array<cplx, 2> xc{rng.unit_phase() * rng.uniform(0.7, 1.4),
                                   rng.unit_phase() * rng.uniform(0.7, 1.4)};
            std::array<cplx, 2> th{weyl_orbit_value(Eigen::Vector2i(1, 0), xc),
                                   weyl_orbit_value(Eigen::Vector2i(0, 1), xc)};
            auto p = a2_surface_point(A23, th, table);
            x = {p[0], p[1], p[2]};
        }
        for (int c = 0; c < cols; ++c) {
            cplx v = 1.0;
            for (int i = 0; i < nvars; ++i) {
                for (int k = 0; k < mons[c][i]; ++k) v *= x[i];
            }
            V(s, c) = v;
        }
    }
    // row scaling, then column scaling
    for (int s = 0; s < rows; ++s) {
        double nr = V.row(s).norm();
        if (nr > 0) V.row(s) /= nr;
    }
    RMat W(2 * rows, cols);
    W.topRows(rows) = V.real();
    W.bottomRows(rows) = V.imag();
    RVec colnorm(cols);
    for (int c = 0; c < cols; ++c) {
        colnorm(c) = W.col(c).norm();
        if (colnorm(c) == 0) colnorm(c) = 1.0;
        W.col(c) /= colnorm(c);
    }
    Eigen::BDCSVD<RMat> svd(W, Eigen::ComputeThinU | Eigen::ComputeFullV);
    const RVec& sv = svd.singularValues();
    int nullity = 0;
    for (int i = 0; i < sv.size(); ++i) {
        if (sv(i) < 1e-8 * sv(0)) ++nullity;
    }
    if (nullity != 1)
        throw inconclusive_degree("implicitize: nullspace dimension " + std::to_string(nullity) +
                                  " at degree bound " + std::to_string(degree_bound) +
                                  " (retry with a different bound)");
    RVec coef = svd.matrixV().col(cols - 1);
    for (int c = 0; c < cols; ++c) coef(c) /= colnorm(c);
    ImplicitPoly out;
    out.num_vars = nvars;
    for (int c = 0; c < cols; ++c) out.add(mons[c], coef(c));
    out.normalize();
    out.prune(1e-8);
    return out;
}

std::vector<ImplicitPoly> toric_relations(const ExponentMatrix& A) {
    if (A.m() > 3) throw unsupported_dimension("toric_relations: m > 3");
    std::vector<ImplicitPoly> out;
    for (const IVec& u : integer_kernel(A)) {
        ImplicitPoly p;
        p.num_vars = A.n();
        std::vector<int> pos(A.n(), 0), neg(A.n(), 0);
        for (int j = 0; j < A.n(); ++j) {
            if (u(j) > 0) pos[j] = u(j);
            if (u(j) < 0) neg[j] = -u(j);
        }
        p.add(pos, 1.0);
        p.add(neg, -1.0);
        out.push_back(p);
    }
    return out;
}

std::vector<ImplicitPoly> auxiliary_variety_relations(const ExponentMatrix& A) {
    const int n = A.n();
    std::vector<ImplicitPoly> out;
    for (const IVec& u : integer_kernel(A)) {
        ImplicitPoly p;
        p.num_vars = 2 * n;
        std::vector<int> pos(2 * n, 0), neg(2 * n, 0);
        for (int j = 0; j < n; ++j) {
            if (u(j) > 0) pos[n + j] = u(j);
            if (u(j) < 0) neg[n + j] = -u(j);
        }
        p.add(pos, 1.0);
        p.add(neg, -1.0);
        out.push_back(p);
    }
    for (int j = 0; j < n; ++j) {
        ImplicitPoly q;
        q.num_vars = 2 * n;
        std::vector<int> e(2 * n, 0);
        e[n + j] = 2;
        q.add(e, 1.0);
        e[n + j] = 1;
        e[j] = 1;
        q.add(e, -2.0);
        std::vector<int> one(2 * n, 0);
        q.add(one, 1.0);
        out.push_back(q);
    }
    return out;
}

}  // namespace chebvar
