#pragma once
// Initial cycles of a tropical dual variety and the degree computations they
// support.
//
// For a point configuration A (d x n, valid in the sense of config.hpp) the
// dual variety of the projective toric variety X_A has some codimension c in
// P^{n-1}.  Given a generic weight vector w, the initial ideal in_w of the
// defining ideal is a union of coordinate-subspace components: every
// associated prime is generated by c coordinates {x_i : i in tau}, and the
// cycle records the multiplicity of each such prime.  Summing the
// multiplicities of a generic initial cycle gives the degree of the dual
// variety; when c = 1 the cycle is a single monomial, namely the extreme
// monomial of the A-discriminant selected by w.
//
// Two independent engines are provided and kept deliberately separate:
//   * the chain engine works from the flat lattice of the Gale dual and
//     counts lattice-normalized determinants over flags of flats,
//   * the fan engine shoots rays from w along coordinate directions and
//     counts weighted intersections with an explicit weighted fan.
// Tests compare them entry by entry.

#include <cstdint>
#include <map>
#include <vector>

#include "tropdisc/config.hpp"
#include "tropdisc/errors.hpp"
#include "tropdisc/fan.hpp"
#include "tropdisc/numeric.hpp"

namespace tropdisc {

// A formal sum of coordinate subspaces of codimension `codim`.  Keys are
// strictly increasing 0-based index sets of size `codim`; values are the
// (positive) multiplicities.  Index sets that do not appear have
// multiplicity zero.
struct InitialCycle {
    int codim = 0;
    std::map<std::vector<int>, Int> entries;

    // Sum of all multiplicities; for a generic weight vector this is the
    // degree of the underlying projective variety.
    Int total_degree() const;

    bool operator==(const InitialCycle&) const = default;
};

// Codimension of the dual variety of X_A: n minus the largest dimension of
// span(rows of A, incidence vectors of a flag of flats) over all maximal
// proper flags in the flat lattice of the Gale dual matroid.  Always between
// 1 and n - d.
int codimension(const Configuration& a);

// True when the dual variety is not a hypersurface (codimension > 1).
bool is_defective(const Configuration& a);

// Chain engine.  Computes the initial cycle of the dual variety at w by
// summing |det(A^t | flag incidence vectors | e_tau)| over all flags of
// flats sigma with n - d - c elements such that the open cone spanned by
// {incidence vectors of sigma} u {-e_t : t in tau} u {-w} meets the row
// space of A.  Throws GenericityError (attempts = 1) as soon as any of the
// cone queries answers differently in open and closed form, which certifies
// that w lies on the boundary locus; throws Error(dimension_mismatch) if w
// does not have n entries.
InitialCycle initial_cycle(const Configuration& a, const RatVec& w);

// Exponent vector of the extreme monomial of the A-discriminant selected by
// a generic w (min convention).  Requires codimension 1; otherwise throws
// Error(defective).  Entry i is the multiplicity of the prime (x_i).
IntVec initial_monomial(const Configuration& a, const RatVec& w);

// Degree of the dual variety.  Samples integer weight vectors with entries
// uniform in [0, 10^6] from a deterministic PRNG stream seeded by `seed`,
// discards non-generic samples, and returns the total degree once two
// independent generic samples agree.  Throws GenericityError when `budget`
// samples are spent without two agreeing successes.
Int degree(const Configuration& a, std::uint64_t seed = 1, int budget = 32);

// Fan engine.  `fan` must be pure of dimension n - c (after accounting for
// its lineality space); otherwise throws Error(non_pure_fan).  For every
// c-subset tau the multiplicity is the sum, over cones sigma whose relative
// interior is crossed by the open cone w + R_{>0}{e_t : t in tau}, of
//   weight(sigma) * |det(basis of e_tau lattice | lattice basis of sigma)|.
// A ray meeting a cone boundary certifies w as non-generic: throws
// GenericityError (attempts = 1).
InitialCycle initial_cycle_of_fan(const WeightedFan& fan, const RatVec& w, int c);

// Degree computed with the fan engine, with the same sampling and
// cross-check protocol as degree().
Int degree_of_fan(const WeightedFan& fan, int c, std::uint64_t seed = 1,
                  int budget = 32);

} // namespace tropdisc
