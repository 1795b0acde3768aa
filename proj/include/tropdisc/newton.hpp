#pragma once
// Newton polytope reconstruction for A-discriminants: sample extreme
// monomials with random weight vectors, summarize their convex hull exactly,
// and recover the discriminant's coefficients by interpolation along the
// Horn uniformization
//   phi_A(u, t) = (u_1 t^{a_1} : ... : u_n t^{a_n}),   u in ker(A),
// whose image is dense in the dual variety when it is a hypersurface.

#include <cstdint>
#include <map>
#include <vector>

#include "tropdisc/config.hpp"
#include "tropdisc/errors.hpp"
#include "tropdisc/numeric.hpp"

namespace tropdisc {

// Deduplicated extreme monomials of the discriminant, each with the list of
// weight vectors that selected it (in draw order).
struct MonomialSet {
    Int degree = 0; // common exponent sum; 0 when no monomial was found
    std::map<IntVec, std::vector<IntVec>> monomials;
};

// Exact combinatorial summary of conv(points).
struct PolytopeSummary {
    int dim = 0;                  // affine dimension
    std::vector<long> fvector;    // face counts by dimension 0 .. dim-1
    std::vector<IntVec> vertices; // in the input coordinates, sorted
};

// Extreme monomials of the discriminant of A from `samples` seeded weight
// draws (entries uniform in [0, 10^6]; the draw for sample k uses stream
// seed + k).  Vectors in `explicit_ws` are evaluated first and their
// genericity failures propagate; failures among the random draws are
// silently skipped.  Requires codimension 1 (throws Error(defective)).
// Sampling is probabilistic: it cannot certify that all vertices appear.
MonomialSet sample_extreme_monomials(const Configuration& a, int samples,
                                     std::uint64_t seed,
                                     const std::vector<IntVec>& explicit_ws = {});

// Exact f-vector and vertex list of conv(points) by brute force: vertices
// via convex-combination feasibility, facets from spanning subsets of
// vertices, lower faces as intersections of facets.  Guarded to affine
// dimension <= 4 (Error(dimension_too_large)) and <= 200 points
// (Error(invalid_input)).
PolytopeSummary hull_summary(const std::vector<IntVec>& points);

// All lattice points of conv(vertices), sorted.  The polytope may sit in a
// proper affine subspace; enumeration happens in exact intrinsic coordinates,
// so no points are missed.  Throws Error(lattice_too_large) if the intrinsic
// bounding box exceeds an internal cap.
std::vector<IntVec> lattice_points(const std::vector<IntVec>& vertices);

// Coefficients of the discriminant on the lattice points of the candidate
// Newton polytope conv(newton_vertices): builds the evaluation matrix of all
// lattice-point monomials at seeded Horn samples and returns its kernel,
// normalized to a primitive integer vector whose first nonzero coefficient
// (in lexicographic point order) is positive.  Lattice points outside the
// support keep an explicit zero.  The kernel must be one-dimensional and is
// re-verified on fresh samples; after the internal resampling budget the
// failure is reported as Error(kernel_not_one_dimensional).  Requires
// codimension 1 and at most 500 lattice points.
std::map<IntVec, Int> recover_discriminant(const Configuration& a,
                                           const std::vector<IntVec>& newton_vertices,
                                           std::uint64_t seed = 1);

} // namespace tropdisc
