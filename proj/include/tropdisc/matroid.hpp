#pragma once
// The geometric lattice of flats of the matroid realized by the rows of an
// integer matrix (for a configuration A this matrix is the Gale dual B, and
// the lattice is L(A): flats are the zero-sets of kernel vectors of A).
// Provides closure, full flat enumeration, maximal and length-restricted
// chains, irreducible flats, nested sets, and the greedy max-weight-basis
// membership test for the Bergman fan.
//
// Ground sets are limited to 64 elements (bitmask representation); the tool
// is desk-scale by design.

#include "tropdisc/matrix.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace tropdisc {

using Mask = std::uint64_t;

std::vector<int> mask_elements(Mask m);           // sorted, 0-based
IntVec incidence_vector(int n, Mask m);           // e_X as a 0/1 vector
inline bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }

// Matroid realized by the rows of an integer matrix, with an exact,
// memoized rank oracle.
class RowMatroid {
public:
    explicit RowMatroid(IntMatrix rows);

    int ground_size() const { return rows_.rows(); }
    const IntMatrix& rows() const { return rows_; }
    int rank() const { return rank_of(full_mask_); }
    int rank_of(Mask s) const;
    Mask closure(Mask s) const;
    bool independent(Mask s) const;
    Mask loops() const;                       // elements of rank 0

    // all bases, as masks, sorted ascending (enumerated once, cached)
    const std::vector<Mask>& bases() const;

    // Connected components of the restriction to s, via fundamental
    // circuits over a greedy basis. Loops form singleton components.
    std::vector<Mask> components(Mask s) const;

private:
    IntMatrix rows_;
    Mask full_mask_;
    mutable std::unordered_map<Mask, int> rank_memo_;
    mutable std::vector<Mask> bases_memo_;
};

// All flats of the matroid, graded by rank, including bottom (the empty set
// for loop-free ground matrices) and top (the full ground set). Flats are
// sorted by (rank, lexicographic element sequence); chains reference flats
// by index into this order.
class FlatLattice {
public:
    // Throws Error(pyramid_input) if the matroid has a loop (closure of the
    // empty set is nonempty), Error(lattice_too_large) past max_flats.
    static FlatLattice build(RowMatroid matroid, std::size_t max_flats = 100000);

    const RowMatroid& matroid() const { return matroid_; }
    int ground_size() const { return matroid_.ground_size(); }
    int top_rank() const { return top_rank_; }
    int flat_count() const { return static_cast<int>(flats_.size()); }
    Mask flat(int idx) const { return flats_[idx]; }
    int rank(int idx) const { return ranks_[idx]; }
    const std::vector<Mask>& flats() const { return flats_; }
    int bottom_index() const { return 0; }
    int top_index() const { return flat_count() - 1; }
    int index_of(Mask m) const;               // -1 if not a flat
    // upward covers, as sorted flat indices
    const std::vector<std::vector<int>>& covers() const { return covers_; }

    // join = closure of the union; always a flat
    int join(int a, int b) const;

private:
    RowMatroid matroid_{IntMatrix()};
    int top_rank_ = 0;
    std::vector<Mask> flats_;
    std::vector<int> ranks_;
    std::vector<std::vector<int>> covers_;
    std::unordered_map<Mask, int> index_;
};

// A chain of proper flats, strictly increasing under inclusion, stored as
// flat indices into the lattice order.
using Chain = std::vector<int>;

// All chains with exactly top_rank-1 elements (one flat per rank 1..top-1),
// in lexicographic order of their index sequences.
std::vector<Chain> maximal_chains(const FlatLattice& lattice);

// All proper chains with exactly k elements, ranks not necessarily
// consecutive, in lexicographic order. k = 0 yields the single empty chain.
std::vector<Chain> chains_of_length(const FlatLattice& lattice, int k);

// All proper chains with exactly k elements of ranks exactly 1, 2, ..., k
// (paths of upward covers from a rank-1 flat), in lexicographic order.
// Requires k <= top_rank - 1; k = 0 yields the single empty chain.
std::vector<Chain> bottom_saturated_chains(const FlatLattice& lattice, int k);

// Flat indices whose lower interval is directly indecomposable (restriction
// connected), plus the top flat always. Sorted ascending. Bottom excluded.
std::vector<int> irreducible_flats(const FlatLattice& lattice);

// Inclusion-maximal nested subsets of the proper irreducible flats: every
// >= 2 pairwise incomparable members must have their join outside the
// irreducible set (with the top flat always counting as irreducible, so an
// antichain joining to the top is never nested). Each maximal nested set has
// exactly top_rank-1 elements. Deterministic order.
std::vector<std::vector<int>> maximal_nested_sets(const FlatLattice& lattice);

// Bergman fan membership of w for the matroid of rows: true iff every ground
// element lies in some maximum-w-weight basis (greedy matroid optimization).
bool bergman_membership(const RowMatroid& matroid, const RatVec& w);

// The bases of maximal w-weight for w in the relative interior of the flag
// cone of `chain`: exactly the bases meeting every chain flat X in rk(X)
// elements. Canonical (sorted) — equal keys identify chains whose cones span
// the same maximal Bergman cone.
std::vector<Mask> chain_basis_key(const FlatLattice& lattice, const Chain& chain);

// Convenience wrapper on the spec'd closure operation: the common zero-set
// of all kernel vectors vanishing on S, i.e. the matroid closure of S in the
// row matroid of the kernel basis. 0-based element lists.
std::vector<int> flat_closure(const IntMatrix& kernel_basis, const std::vector<int>& s);

} // namespace tropdisc
