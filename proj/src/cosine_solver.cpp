#include "chebvar/cosine_solver.hpp"

#include <algorithm>
#include <cmath>

#include "chebvar/errors.hpp"
#include "chebvar/rng.hpp"
#include "chebvar/variety.hpp"

namespace chebvar {

namespace {

cplx ipow(cplx x, int k) {
    cplx r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

CVec monomials(const ExponentMatrix& A, const CVec& v) {
    CVec w(A.n());
    for (int j = 0; j < A.n(); ++j) {
        cplx p = 1.0;
        for (int i = 0; i < A.m(); ++i) p *= ipow(v(i), A.E(i, j));
        w(j) = p;
    }
    return w;
}

CVec inverse_point(const CVec& v) {
    CVec w(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) w(i) = 1.0 / v(i);
    return w;
}

bool close(const CVec& a, const CVec& b, double tol) {
    double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
    return (a - b).cwiseAbs().maxCoeff() < tol * scale;
}

CVec canonical_rep(const CVec& v) {
    const double m1 = std::abs(v(0));
    if (m1 > 1.0 + 1e-12) return v;
    if (m1 < 1.0 - 1e-12) return inverse_point(v);
    // |v_1| = 1: break the tie by the phase of the first coordinate
    return std::arg(v(0)) >= 0 ? v : inverse_point(v);
}

Params random_params(int m, int n, Rng& rng, double scale = 1.0) {
    Params P;
    P.C = CMat(m, n);
    P.c0 = CVec(m);
    for (int i = 0; i < m; ++i) {
        P.c0(i) = scale * rng.complex_normal();
        for (int j = 0; j < n; ++j) P.C(i, j) = scale * rng.complex_normal();
    }
    return P;
}

std::pair<CVec, CMat> eval_jac_at(const ExponentMatrix& A, const Params& P, const CVec& v) {
    LaurentSystem L{A, P.C, P.c0};
    return eval_jac(L, v);
}

CVec values_at(const ExponentMatrix& A, const Params& P, const CVec& v) {
    CVec w = monomials(A, v);
    CVec cosw(w.size());
    for (Eigen::Index j = 0; j < w.size(); ++j) cosw(j) = 0.5 * (w(j) + 1.0 / w(j));
    return P.c0 + P.C * cosw;
}

bool corrector(const ExponentMatrix& A, const Params& P, CVec& v, const TrackerConfig& cfg,
               double tol, int iters, double* total_move = nullptr) {
    LaurentSystem L{A, P.C, P.c0};
    if (total_move) *total_move = 0.0;
    for (int it = 0; it < iters; ++it) {
        auto [f, J] = eval_jac(L, v);
        RVec scale = residual_scale(L, v);
        double rel = 0.0;
        for (int i = 0; i < L.m(); ++i) rel = std::max(rel, std::abs(f(i)) / scale(i));
        if (rel < tol) return true;
        Eigen::PartialPivLU<CMat> lu(J);
        CVec dv = lu.solve(f);
        if (!dv.allFinite()) return false;
        v -= dv;
        if (total_move) *total_move += dv.cwiseAbs().maxCoeff();
        if (!v.allFinite() || v.cwiseAbs().minCoeff() < 1e-14) return false;
    }
    LaurentSystem L2{A, P.C, P.c0};
    return relative_residual(L2, v) < tol;
}

}  // namespace

bool OrbitSet::contains(const CVec& v) const {
    CVec iv = inverse_point(v);
    for (const CVec& r : representatives) {
        if (close(v, r, dedup_tol) || close(iv, r, dedup_tol)) return true;
    }
    return false;
}

bool OrbitSet::insert(const CVec& v) {
    if (contains(v)) return false;
    representatives.push_back(canonical_rep(v));
    return true;
}

LaurentSystem to_laurent(const ChebSystem& system) {
    if (system.basis != SystemBasis::cosine)
        throw invalid_input("to_laurent: cosine basis expected");
    system.validate();
    LaurentSystem L;
    L.A = system.A;
    L.C = system.C.cast<cplx>();
    L.c0 = system.c0.cast<cplx>();
    return L;
}

std::pair<CVec, CMat> eval_jac(const LaurentSystem& L, const CVec& v) {
    const int m = L.m(), n = L.n();
    if (v.cwiseAbs().minCoeff() == 0.0) throw domain_error("eval_jac: zero coordinate");
    CVec w = monomials(L.A, v);
    CVec cosw(n), sinw(n);
    for (int j = 0; j < n; ++j) {
        cosw(j) = 0.5 * (w(j) + 1.0 / w(j));
        sinw(j) = 0.5 * (w(j) - 1.0 / w(j));
    }
    CVec f = L.c0 + L.C * cosw;
    CMat J(m, m);
    for (int k = 0; k < m; ++k) {
        CVec col(n);
        for (int j = 0; j < n; ++j) col(j) = static_cast<double>(L.A.E(k, j)) * sinw(j) / v(k);
        J.col(k) = L.C * col;
    }
    return {f, J};
}

RVec residual_scale(const LaurentSystem& L, const CVec& v) {
    CVec w = monomials(L.A, v);
    RVec t(L.n());
    for (int j = 0; j < L.n(); ++j) t(j) = 0.5 * std::abs(w(j) + 1.0 / w(j));
    RVec s(L.m());
    for (int i = 0; i < L.m(); ++i) {
        double acc = 1.0 + std::abs(L.c0(i));
        for (int j = 0; j < L.n(); ++j) acc += std::abs(L.C(i, j)) * t(j);
        s(i) = acc;
    }
    return s;
}

double relative_residual(const LaurentSystem& L, const CVec& v) {
    auto [f, J] = eval_jac(L, v);
    RVec s = residual_scale(L, v);
    double rel = 0.0;
    for (int i = 0; i < L.m(); ++i) rel = std::max(rel, std::abs(f(i)) / s(i));
    return rel;
}

std::optional<CVec> newton_correct(const LaurentSystem& L, CVec v, const TrackerConfig& cfg) {
    Params P{L.C, L.c0};
    if (corrector(L.A, P, v, cfg, cfg.corrector_tol, cfg.max_corrector_iters)) return v;
    return std::nullopt;
}

std::optional<CVec> track_path(const ExponentMatrix& A, const Params& start, const Params& target,
                               const CVec& v_start, const TrackerConfig& cfg, cplx gamma,
                               double initial_step_override) {
    const CMat dC = target.C - start.C;
    const CVec dc0 = target.c0 - start.c0;
    Params delta{dC, dc0};
    auto params_at = [&](double s) -> std::pair<Params, cplx> {
        const cplx den = gamma * s + (1.0 - s);
        const cplx tau = gamma * s / den;
        Params P{start.C + tau * dC, start.c0 + tau * dc0};
        const cplx dtau = gamma / (den * den);
        return {P, dtau};
    };
    auto velocity = [&](const CVec& v, double s) -> std::optional<CVec> {
        auto [P, dtau] = params_at(s);
        auto [f, J] = eval_jac_at(A, P, v);
        (void)f;
        // df/ds = dtau * f(v; dC, dc0): the system is affine in the parameters
        LaurentSystem Ld{A, dC, dc0};
        auto [fd, Jd] = eval_jac(Ld, v);
        (void)Jd;
        Eigen::PartialPivLU<CMat> lu(J);
        CVec out = lu.solve(dtau * fd);
        if (!out.allFinite()) return std::nullopt;
        return -out;
    };

    const double h0 = initial_step_override > 0 ? initial_step_override : cfg.initial_step;
    CVec v = v_start;
    double s = 0.0, h = h0;
    int streak = 0;
    while (s < 1.0) {
        h = std::min(h, 1.0 - s);
        auto k1 = velocity(v, s);
        bool ok = k1.has_value();
        CVec vp;
        if (ok) {
            auto k2 = velocity(v + 0.5 * h * (*k1), s + 0.5 * h);
            auto k3 = k2 ? velocity(v + 0.5 * h * (*k2), s + 0.5 * h) : std::nullopt;
            auto k4 = k3 ? velocity(CVec(v + h * (*k3)), s + h) : std::nullopt;
            ok = k4.has_value();
            if (ok) {
                vp = v + (h / 6.0) * (*k1 + 2.0 * (*k2) + 2.0 * (*k3) + *k4);
                ok = vp.allFinite() && vp.cwiseAbs().minCoeff() > 1e-14;
            }
        }
        double corr = 0.0;
        if (ok) {
            auto [Pn, dn] = params_at(s + h);
            CVec vc = vp;
            ok = corrector(A, Pn, vc, cfg, cfg.corrector_tol, cfg.max_corrector_iters, &corr);
            if (ok) {
                const double pred = h * k1->cwiseAbs().maxCoeff();
                if (corr > std::max(0.3 * pred, 1e-8 * std::max(1.0, v.cwiseAbs().maxCoeff()))) {
                    ok = false;  // landed too far from the predicted point: likely a path jump
                }
            }
            if (ok) vp = vc;
        }
        if (ok) {
            v = vp;
            s += h;
            if (++streak >= 3) {
                h = std::min(h * cfg.step_expand, 2.0 * h0);
                streak = 0;
            }
        } else {
            h *= cfg.step_contract;
            streak = 0;
            if (h < cfg.min_step) return std::nullopt;
        }
    }
    // final polish at the target parameters
    CVec vf = v;
    if (!corrector(A, target, vf, cfg, 1e-13, 3 * cfg.max_corrector_iters)) {
        if (!corrector(A, target, vf, cfg, cfg.corrector_tol, cfg.max_corrector_iters))
            return std::nullopt;
    }
    return vf;
}

MonodromyResult monodromy_solve(const LaurentSystem& L, long long target_orbit_count,
                                std::uint64_t seed, int max_loops, const TrackerConfig& cfg) {
    if (target_orbit_count < 1) throw invalid_input("monodromy_solve: target_orbit_count < 1");
    const int m = L.m(), n = L.n();
    Rng rng(seed);

    // seed solution: random v0, then the minimum-norm correction of random
    // parameters so that v0 solves the system exactly
    CVec v0(m);
    for (int i = 0; i < m; ++i) v0(i) = rng.unit_phase() * rng.uniform(0.8, 1.25);
    Params P0 = random_params(m, n, rng);
    {
        CVec w = monomials(L.A, v0);
        CVec z(n + 1);
        z(0) = 1.0;
        for (int j = 0; j < n; ++j) z(j + 1) = 0.5 * (w(j) + 1.0 / w(j));
        const double zn = z.squaredNorm();
        for (int i = 0; i < m; ++i) {
            CVec p(n + 1);
            p(0) = P0.c0(i);
            for (int j = 0; j < n; ++j) p(j + 1) = P0.C(i, j);
            // bilinear p . z, not the Hermitian dot
            cplx alpha = (p.transpose() * z)(0, 0) / zn;
            p -= alpha * z.conjugate();
            P0.c0(i) = p(0);
            for (int j = 0; j < n; ++j) P0.C(i, j) = p(j + 1);
        }
    }
    MonodromyResult res;
    res.start_params = P0;
    res.orbits.insert(v0);
    res.all_solutions = {v0, inverse_point(v0)};
    auto known = [&](const CVec& v) {
        for (const CVec& s : res.all_solutions) {
            if (close(v, s, res.orbits.dedup_tol)) return true;
        }
        return false;
    };

    int loops = 0;
    while (static_cast<long long>(res.orbits.representatives.size()) < target_orbit_count &&
           loops < max_loops) {
        ++loops;
        const double scale = std::vector<double>{0.5, 1.0, 2.0}[loops % 3];
        Params Pa = random_params(m, n, rng, scale);
        Params Pb = random_params(m, n, rng, scale);
        const size_t snapshot = res.all_solutions.size();
        for (size_t idx = 0; idx < snapshot; ++idx) {
            CVec v = res.all_solutions[idx];
            auto x1 = track_path(L.A, P0, Pa, v, cfg);
            if (!x1) continue;
            auto x2 = track_path(L.A, Pa, Pb, *x1, cfg);
            if (!x2) continue;
            auto x3 = track_path(L.A, Pb, P0, *x2, cfg);
            if (!x3) continue;
            if (!known(*x3)) {
                res.all_solutions.push_back(*x3);
                CVec inv = inverse_point(*x3);
                if (!known(inv)) res.all_solutions.push_back(inv);
                res.orbits.insert(*x3);
                if (static_cast<long long>(res.orbits.representatives.size()) >= target_orbit_count)
                    break;
            }
        }
    }
    res.loops_used = loops;
    res.reached_target =
        static_cast<long long>(res.orbits.representatives.size()) >= target_orbit_count;
    return res;
}

CosineSolutionSet solve_cosine(const ChebSystem& system, const CosineSolveOptions& opts) {
    LaurentSystem L = to_laurent(system);
    const int m = L.m(), n = L.n();
    if (rational_rank(system.A.E) < m)
        throw rank_deficiency_error("solve_cosine: rank(A) < m");

    CosineSolutionSet out;
    out.seed = opts.seed;

    VarietyReport deg = cosine_degree(system.A);
    out.variety_degree = *deg.degree;
    // number of (v, v^-1) pairs of the Laurent system: the Kushnirenko count
    // of conv(A u -A) halved by the inverse action
    auto S = special_polytopes(system.A);
    Rat vol = normalized_volume(S.P_A_cos);
    Rat pairs = vol / Rat(2);
    if (!pairs.is_integer())
        throw internal_consistency_error("solve_cosine: odd Kushnirenko count");
    out.expected_pairs = pairs.num;

    Rng rng(opts.seed);
    MonodromyResult mono =
        monodromy_solve(L, out.expected_pairs, rng.raw(), opts.max_loops, opts.cfg);
    out.monodromy_loops = mono.loops_used;

    Params target{L.C, L.c0};
    const cplx gamma = std::exp(cplx(0.0, rng.uniform(-1.2, 1.2)));

    std::vector<std::optional<CVec>> finals(mono.all_solutions.size());
    for (size_t i = 0; i < mono.all_solutions.size(); ++i) {
        finals[i] =
            track_path(system.A, mono.start_params, target, mono.all_solutions[i], opts.cfg, gamma);
    }
    // collision / failure repair: retrack with smaller steps along the same homotopy
    for (int round = 0; round < 3; ++round) {
        std::vector<size_t> bad;
        std::vector<std::pair<size_t, CVec>> seen;
        for (size_t i = 0; i < finals.size(); ++i) {
            if (!finals[i]) {
                bad.push_back(i);
                continue;
            }
            bool dup = false;
            for (auto& [j, y] : seen) {
                if (close(*finals[i], y, 1e-7)) {
                    bad.push_back(i);
                    bad.push_back(j);
                    dup = true;
                    break;
                }
            }
            if (!dup) seen.emplace_back(i, *finals[i]);
        }
        std::sort(bad.begin(), bad.end());
        bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
        if (bad.empty()) break;
        const double h0 = opts.cfg.initial_step / std::pow(5.0, round + 1);
        for (size_t i : bad) {
            finals[i] = track_path(system.A, mono.start_params, target, mono.all_solutions[i],
                                   opts.cfg, gamma, h0);
        }
    }

    LaurentSystem Lt{system.A, target.C, target.c0};
    std::vector<CVec> sols;
    auto add_solution = [&](const CVec& v) -> bool {
        if (!v.allFinite()) return false;
        if (relative_residual(Lt, v) > 1e-7) return false;
        for (const CVec& s : sols) {
            if (close(v, s, 1e-7)) return false;
        }
        sols.push_back(v);
        return true;
    };
    int fails = 0;
    for (auto& f : finals) {
        if (f) {
            add_solution(*f);
        } else {
            ++fails;
        }
    }
    // completion: monodromy loops based at the target parameters
    const long long expected_solutions = 2 * out.expected_pairs;
    int tries = 0;
    while (static_cast<long long>(sols.size()) < expected_solutions && tries < 24) {
        ++tries;
        const double scale = std::vector<double>{1.0, 2.0, 0.5, 4.0}[tries % 4];
        Params Qa = random_params(m, n, rng, scale);
        Params Qb = random_params(m, n, rng, scale);
        const size_t snapshot = sols.size();
        for (size_t i = 0; i < snapshot; ++i) {
            auto x1 = track_path(system.A, target, Qa, sols[i], opts.cfg);
            if (!x1) continue;
            auto x2 = track_path(system.A, Qa, Qb, *x1, opts.cfg);
            if (!x2) continue;
            auto x3 = track_path(system.A, Qb, target, *x2, opts.cfg);
            if (!x3) continue;
            if (add_solution(*x3)) add_solution(inverse_point(*x3));
        }
    }
    out.path_failures = fails;
    out.complete = static_cast<long long>(sols.size()) == expected_solutions;

    // pair into orbits and classify
    OrbitSet orbit_set;
    orbit_set.dedup_tol = 1e-7;
    for (const CVec& v : sols) orbit_set.insert(v);
    for (const CVec& rep : orbit_set.representatives) {
        CosineOrbit o;
        o.v = rep;
        o.residual = relative_residual(Lt, rep);
        double max_im = 0.0, max_mod = 0.0;
        for (int i = 0; i < m; ++i) {
            max_im = std::max(max_im, std::abs(rep(i).imag()));
            max_mod = std::max(max_mod, std::abs(std::abs(rep(i)) - 1.0));
        }
        o.real_v = max_im < 1e-8 * std::max(1.0, rep.cwiseAbs().maxCoeff());
        o.real_u = max_mod < 1e-8;
        o.u = CVec(m);
        for (int i = 0; i < m; ++i) {
            double re = std::arg(rep(i));
            if (re < 0) re += 2.0 * M_PI;
            o.u(i) = cplx(re, -std::log(std::abs(rep(i))));
        }
        out.orbits.push_back(std::move(o));
    }
    std::sort(out.orbits.begin(), out.orbits.end(), [](const CosineOrbit& a, const CosineOrbit& b) {
        for (int i = 0; i < a.u.size(); ++i) {
            if (a.u(i).real() != b.u(i).real()) return a.u(i).real() < b.u(i).real();
            if (a.u(i).imag() != b.u(i).imag()) return a.u(i).imag() < b.u(i).imag();
        }
        return false;
    });
    return out;
}

}  // namespace chebvar
