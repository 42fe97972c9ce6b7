#include "chebvar/tensor_solver.hpp"

#include <algorithm>
#include <cmath>

#include "chebvar/cheb.hpp"
#include "chebvar/errors.hpp"
#include "chebvar/rng.hpp"

namespace chebvar {

namespace {

std::vector<int> key_of(const IVec& v) {
    return std::vector<int>(v.data(), v.data() + v.size());
}

/// conv(0 u {sign-masked columns}): the positive part of P_B.
LatticePolytope positive_box_polytope(const ExponentMatrix& A) {
    const int m = A.m();
    std::vector<IVec> pts{IVec::Zero(m)};
    for (int j = 0; j < A.n(); ++j) {
        for (int mask = 0; mask < (1 << m); ++mask) {
            IVec p = A.col(j);
            for (int i = 0; i < m; ++i) {
                if ((mask >> i) & 1) p(i) = 0;
            }
            pts.push_back(p);
        }
    }
    return convex_hull_int(pts, m);
}

std::vector<IVec> points_of(const LatticePolytope& P, bool add_simplex, int m) {
    return lattice_points(add_simplex ? minkowski_sum_simplex(P, m) : P);
}

struct Supports {
    std::vector<IVec> A_ext, B, A0;
    bool density;
};

Supports supports_for(const ExponentMatrix& A) {
    const int m = A.m();
    if (m > 3) throw unsupported_dimension("tensor solver: m > 3");
    if (rational_rank(A.E) < m) throw rank_deficiency_error("tensor solver: rank(A) < m");
    Supports S;
    auto [vj, vi] = A.density_violation();
    S.density = vj < 0;
    if (S.density) {
        std::vector<IVec> ptsA{IVec::Zero(m)};
        for (int j = 0; j < A.n(); ++j) ptsA.push_back(A.col(j));
        LatticePolytope PA = convex_hull_int(ptsA, m);
        S.A_ext = points_of(dilate(PA, m), true, m);
        S.B = points_of(dilate(PA, m - 1), true, m);
        S.A0 = points_of(dilate(PA, m), false, m);
    } else {
        LatticePolytope PBp = positive_box_polytope(A);
        S.A_ext = points_of(dilate(PBp, m), true, m);
        S.B = points_of(dilate(PBp, m - 1), true, m);
        S.A0 = S.B;
    }
    return S;
}

}  // namespace

void ChebSystem::validate() const {
    if (A.m() == 0 || A.n() == 0) throw invalid_input("ChebSystem: empty support");
    if (C.rows() != A.m() || C.cols() != A.n())
        throw invalid_input("ChebSystem: coefficient matrix shape mismatch");
    if (c0.size() != A.m()) throw invalid_input("ChebSystem: constant vector shape mismatch");
    if (basis == SystemBasis::tensor && (A.E.array() < 0).any())
        throw invalid_input("ChebSystem: tensor basis requires nonnegative exponents");
}

std::tuple<std::vector<IVec>, std::vector<IVec>, std::vector<IVec>> build_support(
    const ExponentMatrix& A) {
    auto [vj, vi] = A.density_violation();
    if (vj >= 0)
        throw unsupported_support("build_support: density condition fails at column " +
                                  std::to_string(vj) + ", coordinate " + std::to_string(vi));
    Supports S = supports_for(A);
    return {S.A_ext, S.B, S.A0};
}

std::map<int, double> tensor_product_row(const IVec& b, const ChebSystem& system,
                                         const std::map<std::vector<int>, int>& col_index,
                                         int equation) {
    const int m = system.m(), n = system.n();
    std::map<int, double> row;
    auto it = col_index.find(key_of(b));
    if (it == col_index.end())
        throw internal_consistency_error("tensor_product_row: shift index outside A_ext");
    row[it->second] += system.c0(equation);
    const double w = std::pow(0.5, m);
    IVec idx(m);
    for (int j = 0; j < n; ++j) {
        for (int mask = 0; mask < (1 << m); ++mask) {
            for (int i = 0; i < m; ++i) {
                const int s = (mask >> i) & 1 ? -1 : 1;
                idx(i) = std::abs(b(i) + s * system.A.E(i, j));
            }
            auto jt = col_index.find(key_of(idx));
            if (jt == col_index.end())
                throw internal_consistency_error(
                    "tensor_product_row: product index escapes A_ext (support construction bug)");
            row[jt->second] += w * system.C(equation, j);
        }
    }
    return row;
}

MacaulayAssembly assemble_M(const ChebSystem& system) {
    system.validate();
    if (system.basis != SystemBasis::tensor)
        throw invalid_input("assemble_M: tensor basis expected");
    const int m = system.m();
    Supports S = supports_for(system.A);
    MacaulayAssembly out;
    out.A_ext = std::move(S.A_ext);
    out.B = std::move(S.B);
    out.A0 = std::move(S.A0);
    out.density = S.density;
    for (size_t c = 0; c < out.A_ext.size(); ++c) out.col_index[key_of(out.A_ext[c])] = static_cast<int>(c);
    if (out.density) {
        std::vector<IVec> ptsA{IVec::Zero(m)};
        for (int j = 0; j < system.n(); ++j) ptsA.push_back(system.A.col(j));
        Rat vol = normalized_volume(convex_hull_int(ptsA, m));
        if (!vol.is_integer())
            throw internal_consistency_error("assemble_M: non-integral normalized volume");
        out.delta = vol.num;
    }
    const int rows = m * static_cast<int>(out.B.size());
    const int cols = static_cast<int>(out.A_ext.size());
    RMat M = RMat::Zero(rows, cols);
    int r = 0;
    for (int i = 0; i < m; ++i) {
        for (const IVec& b : out.B) {
            for (const auto& [c, v] : tensor_product_row(b, system, out.col_index, i)) M(r, c) += v;
            ++r;
        }
    }
    out.M = M.cast<std::complex<double>>();
    return out;
}

Eigen::SparseMatrix<double> mult_matrix(int i, const std::vector<IVec>& A0,
                                        const std::map<std::vector<int>, int>& col_index) {
    const int rows = static_cast<int>(A0.size());
    int cols = 0;
    for (const auto& [k, c] : col_index) cols = std::max(cols, c + 1);
    std::vector<Eigen::Triplet<double>> trips;
    for (int r = 0; r < rows; ++r) {
        IVec up = A0[r];
        up(i) += 1;
        auto it = col_index.find(key_of(up));
        if (it == col_index.end())
            throw internal_consistency_error("mult_matrix: A0 + e_i escapes A_ext");
        if (A0[r](i) == 0) {
            trips.emplace_back(r, it->second, 1.0);
        } else {
            trips.emplace_back(r, it->second, 0.5);
            IVec dn = A0[r];
            dn(i) -= 1;
            auto jt = col_index.find(key_of(dn));
            if (jt == col_index.end())
                throw internal_consistency_error("mult_matrix: A0 - e_i escapes A_ext");
            trips.emplace_back(r, jt->second, 0.5);
        }
    }
    Eigen::SparseMatrix<double> C(rows, cols);
    C.setFromTriplets(trips.begin(), trips.end());
    return C;
}

CVec tensor_system_values(const ChebSystem& system, const CVec& t) {
    const int m = system.m(), n = system.n();
    CVec vals(n);
    for (int j = 0; j < n; ++j) {
        cplx v = 1.0;
        for (int i = 0; i < m; ++i) v *= eval_T(system.A.E(i, j), t(i));
        vals(j) = v;
    }
    return system.c0.cast<cplx>() + system.C.cast<cplx>() * vals;
}

CMat tensor_system_jacobian(const ChebSystem& system, const CVec& t) {
    const int m = system.m(), n = system.n();
    CMat J = CMat::Zero(m, m);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < m; ++k) {
            cplx d = eval_T_deriv(system.A.E(k, j), t(k));
            if (d == cplx(0.0)) continue;
            for (int i = 0; i < m; ++i) {
                if (i != k) d *= eval_T(system.A.E(i, j), t(i));
            }
            for (int i = 0; i < m; ++i) J(i, k) += system.C(i, j) * d;
        }
    }
    return J;
}

double tensor_relative_residual(const ChebSystem& system, const CVec& t) {
    const int m = system.m(), n = system.n();
    CVec f = tensor_system_values(system, t);
    double worst = 0.0;
    for (int i = 0; i < m; ++i) {
        double scale = 1.0 + std::abs(system.c0(i));
        for (int j = 0; j < n; ++j) {
            double mag = 1.0;
            for (int k = 0; k < m; ++k) mag *= std::abs(eval_T(system.A.E(k, j), t(k)));
            scale += std::abs(system.C(i, j)) * mag;
        }
        worst = std::max(worst, std::abs(f(i)) / scale);
    }
    return worst;
}

SolutionSet solve_tensor(const ChebSystem& system, const TensorSolveOptions& opts) {
    system.validate();
    const int m = system.m();
    MacaulayAssembly asmb = assemble_M(system);
    auto [rank, N] = rank_and_nullspace(asmb.M, opts.rank_policy);
    const Eigen::Index kerdim = N.cols();
    if (asmb.density && kerdim != asmb.delta) {
        throw genericity_error("solve_tensor: kernel dimension " + std::to_string(kerdim) +
                               " != delta = " + std::to_string(asmb.delta) +
                               " (coefficients may be special)");
    }
    if (kerdim == 0) throw genericity_error("solve_tensor: empty kernel");

    // rows indexed by A0
    CMat NA0(asmb.A0.size(), kerdim);
    for (size_t r = 0; r < asmb.A0.size(); ++r) {
        NA0.row(r) = N.row(asmb.col_index.at(key_of(asmb.A0[r])));
    }
    // rank-r0 compression N_{A0} = Q S Z^H; multiplication pencil on the
    // column space removes contributions that vanish on the A0 rows
    Eigen::BDCSVD<CMat> svd(NA0, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RVec& sv = svd.singularValues();
    Eigen::Index r0 = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > opts.rank_policy.relative_threshold * sv(0) &&
            sv(i) > opts.rank_policy.absolute_floor)
            ++r0;
    }
    if (asmb.density && r0 != asmb.delta)
        throw genericity_error("solve_tensor: rank(N_A0) = " + std::to_string(r0) +
                               " != delta = " + std::to_string(asmb.delta));
    CMat Q = svd.matrixU().leftCols(r0);
    CMat Z = svd.matrixV().leftCols(r0);
    RVec S0 = sv.head(r0);

    std::vector<CMat> D;  // compressed multiplication operators
    for (int i = 0; i < m; ++i) {
        Eigen::SparseMatrix<double> Ci = mult_matrix(i, asmb.A0, asmb.col_index);
        CMat CiN = Ci.cast<std::complex<double>>() * N;
        CMat Di = Q.adjoint() * CiN * Z;
        for (Eigen::Index rr = 0; rr < r0; ++rr) Di.row(rr) /= S0(rr);
        D.push_back(std::move(Di));
    }

    Rng rng(opts.seed);
    CMat E = CMat::Zero(r0, r0);
    for (int i = 0; i < m; ++i) E += cplx(rng.normal()) * D[i];
    auto [vals, vecs] = eig_full(E);

    // coordinates via the shared eigenvectors: t_i = diag(V^-1 D_i V)
    Eigen::PartialPivLU<CMat> lu(vecs);
    std::vector<CVec> coords(m);
    for (int i = 0; i < m; ++i) {
        CMat X = lu.solve(D[i] * vecs);
        coords[i] = X.diagonal();
    }

    SolutionSet out;
    out.seed = opts.seed;
    out.expected = asmb.density ? asmb.delta : -1;
    out.density = asmb.density;
    out.macaulay_rank = rank;

    std::vector<SolutionPoint> cands;
    for (Eigen::Index j = 0; j < r0; ++j) {
        CVec t(m);
        for (int i = 0; i < m; ++i) t(i) = coords[i](j);
        // Newton refinement on the original system
        for (int step = 0; step < opts.newton_steps; ++step) {
            CVec f = tensor_system_values(system, t);
            if (f.norm() == 0.0) break;
            CMat J = tensor_system_jacobian(system, t);
            Eigen::PartialPivLU<CMat> jlu(J);
            CVec dt = jlu.solve(f);
            if (!dt.allFinite()) break;
            t -= dt;
            if (dt.norm() < 1e-15 * (1.0 + t.norm())) break;
        }
        SolutionPoint p;
        p.t = t;
        p.residual = tensor_relative_residual(system, t);
        double max_im = 0.0, max_re = 0.0;
        for (int i = 0; i < m; ++i) {
            max_im = std::max(max_im, std::abs(t(i).imag()));
            max_re = std::max(max_re, std::abs(t(i).real()));
        }
        p.is_real = max_im < out.real_tol;
        p.in_box = p.is_real && max_re <= 1.0 + out.box_slack;
        cands.push_back(std::move(p));
    }

    if (asmb.density) {
        out.points = std::move(cands);
    } else {
        // spurious directions from the toric boundary do not converge:
        // keep residual-verified candidates, deduplicated
        for (auto& p : cands) {
            if (!p.t.allFinite() || p.residual > opts.residual_keep) continue;
            bool dup = false;
            for (const auto& q : out.points) {
                if ((p.t - q.t).norm() < 1e-8 * (1.0 + q.t.norm())) dup = true;
            }
            if (!dup) out.points.push_back(std::move(p));
        }
    }
    std::sort(out.points.begin(), out.points.end(), [](const SolutionPoint& a, const SolutionPoint& b) {
        for (int i = 0; i < a.t.size(); ++i) {
            if (a.t(i).real() != b.t(i).real()) return a.t(i).real() < b.t(i).real();
            if (a.t(i).imag() != b.t(i).imag()) return a.t(i).imag() < b.t(i).imag();
        }
        return false;
    });
    return out;
}

}  // namespace chebvar
