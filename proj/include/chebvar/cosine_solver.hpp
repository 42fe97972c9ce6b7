#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chebvar/cheb.hpp"
#include "chebvar/linalg.hpp"
#include "chebvar/polytope.hpp"
#include "chebvar/tensor_solver.hpp"

namespace chebvar {

/// Eq.-(23)-style Laurent form of a cosine system; defined on (C \ 0)^m.
struct LaurentSystem {
    ExponentMatrix A;
    CMat C;
    CVec c0;

    int m() const { return A.m(); }
    int n() const { return A.n(); }
};

struct TrackerConfig {
    double initial_step = 0.05;
    double min_step = 1e-7;
    double corrector_tol = 1e-10;
    int max_corrector_iters = 5;
    double step_expand = 2.0;
    double step_contract = 0.5;
};

/// Solution orbits {v, v^-1} with a canonical representative.
struct OrbitSet {
    std::vector<CVec> representatives;
    double dedup_tol = 1e-6;

    bool contains(const CVec& v) const;
    bool insert(const CVec& v);  // canonicalizes; false if already present
};

LaurentSystem to_laurent(const ChebSystem& system);

/// Values and the exact Jacobian of the Laurent form at v.
std::pair<CVec, CMat> eval_jac(const LaurentSystem& L, const CVec& v);

/// Per-equation scale |c0_i| + sum_j |C_ij| |w_j + 1/w_j|/2 used for
/// relative residuals.
RVec residual_scale(const LaurentSystem& L, const CVec& v);

double relative_residual(const LaurentSystem& L, const CVec& v);

std::optional<CVec> newton_correct(const LaurentSystem& L, CVec v, const TrackerConfig& cfg);

/// Parameter pair (C, c0) of the homotopy family.
struct Params {
    CMat C;
    CVec c0;
};

/// Tracks from the solution v_start of (A, start) to the parameters
/// `target` along the gamma-rescaled segment.
std::optional<CVec> track_path(const ExponentMatrix& A, const Params& start, const Params& target,
                               const CVec& v_start, const TrackerConfig& cfg,
                               cplx gamma = cplx(1.0, 0.0), double initial_step_override = 0.0);

struct MonodromyResult {
    OrbitSet orbits;
    std::vector<CVec> all_solutions;  // representatives and inverses
    Params start_params;
    int loops_used = 0;
    bool reached_target = false;
};

/// Seeds one solution at random complex parameters and grows the solution
/// set with monodromy loops until target_orbit_count orbits are known.
MonodromyResult monodromy_solve(const LaurentSystem& L, long long target_orbit_count,
                                std::uint64_t seed, int max_loops, const TrackerConfig& cfg = {});

struct CosineOrbit {
    CVec v;          // canonical representative, |v_1| >= 1
    CVec u;          // -i log v, real part reduced into [0, 2pi)
    double residual = 0.0;
    bool real_v = false;  // v is a real vector
    bool real_u = false;  // all |v_k| = 1
};

struct CosineSolutionSet {
    std::vector<CosineOrbit> orbits;
    long long expected_pairs = 0;
    long long variety_degree = 0;
    std::uint64_t seed = 0;
    int path_failures = 0;
    int monodromy_loops = 0;
    bool complete = false;
};

struct CosineSolveOptions {
    std::uint64_t seed = 0;
    int max_loops = 200;
    TrackerConfig cfg;
};

CosineSolutionSet solve_cosine(const ChebSystem& system, const CosineSolveOptions& opts = {});

}  // namespace chebvar
