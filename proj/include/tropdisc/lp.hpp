#pragma once
// Exact rational linear programming, small scale. Two-phase primal simplex
// with Bland's anti-cycling rule; everything in mpq, no tolerances.
//
// On top of the raw solver sit the cone queries the rest of the library
// needs: does the strictly-positive hull of a generator list meet a linear
// subspace, and does an affine ray cone hit a polyhedral cone (and if so,
// in its relative interior or only on the boundary).

#include "tropdisc/matrix.hpp"

#include <vector>

namespace tropdisc {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status;
    Rat objective;   // meaningful for optimal
    RatVec x;        // a solution attaining it
};

// minimize c·x subject to A x = b, x >= 0
LpResult solve_lp_min(const std::vector<RatVec>& a, const RatVec& b, const RatVec& c);

// feasibility of A x = b, x >= 0
bool lp_feasible(const std::vector<RatVec>& a, const RatVec& b);

// Decide whether sum_j lambda_j g_j lies in span(subspace columns) for some
// choice with every lambda_j >= 1 (equivalently all strictly positive, by
// homogeneity). `gens` and the columns of `subspace` live in R^n.
// Throws Errc::dimension_mismatch on inconsistent lengths.
bool strict_cone_meets_subspace(const std::vector<IntVec>& gens, const IntMatrix& subspace);

// Closed-cone variant used for genericity certification: the last generator's
// coefficient is pinned to 1, the rest only need to be >= 0.
bool closed_cone_meets_subspace_pinned(const std::vector<IntVec>& gens, const IntMatrix& subspace);

// Ray-shooting query: does w + sum beta_j dirs_j (all beta_j > 0) meet
// { sum lambda_i rays_i + lineality·y : lambda_i > 0 } ?
//   hit      — strict solution exists
//   boundary — only solutions with some beta/lambda = 0 exist (non-generic w)
//   miss     — no solution at all, even closed
enum class RayHit { miss, boundary, hit };
RayHit strict_ray_hits_cone(const RatVec& w,
                            const std::vector<IntVec>& rays,
                            const std::vector<IntVec>& lineality,
                            const std::vector<IntVec>& dirs);

} // namespace tropdisc
