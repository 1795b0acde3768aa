#pragma once
// Cayley configurations and sparse resultants.
//
// A family A_1, ..., A_m of point sets in Z^r is encoded as the Cayley
// configuration: the point {e_i} x A_i in Z^{m+r} for each point of A_i.
// Regular subdivisions of a configuration induced by a lifting w translate,
// through the Cayley trick, into coherent mixed subdivisions of the
// Minkowski sum A_1 + ... + A_m; their mixed cells carry the Bernstein
// count, which yields the degree of the sparse resultant, and their fully
// mixed cells characterize membership in the tropical resultant variety.
//
// Columns are labeled 0-based in block order: block i contributes the
// consecutive labels sum(|A_1|..|A_{i-1}|) .. sum(..|A_i|) - 1, matching
// the columns of cayley_matrix.  The CLI shifts labels to 1-based on
// output only.

#include <cstdint>
#include <vector>

#include "tropdisc/config.hpp"
#include "tropdisc/errors.hpp"
#include "tropdisc/numeric.hpp"

namespace tropdisc {

struct CayleyConfig {
    int r = 0;                              // dimension of the point sets
    std::vector<std::vector<IntVec>> blocks; // A_1, ..., A_m

    int m() const { return static_cast<int>(blocks.size()); }
    int n() const {
        int total = 0;
        for (const auto& block : blocks) total += static_cast<int>(block.size());
        return total;
    }
};

// The (m+r) x n matrix with column (e_i, p) for each p in A_i, validated as
// a Configuration.  Throws Error(invalid_input) on empty blocks or points of
// the wrong length; configuration validation errors propagate.  For m = 1
// this prepends a row of ones to the single block.
Configuration cayley_matrix(const CayleyConfig& cfg);

// True when sum_{i in I} A_i has affine dimension >= |I| for every nonempty
// subset I of blocks with |I| <= r.
bool is_essential(const CayleyConfig& cfg);

// One cell of a regular subdivision: the set of all column labels lying on
// one lower facet of the lifted configuration.  A cell of a d x n
// configuration is a simplex exactly when it has d labels.
struct SubdivisionCell {
    std::vector<int> labels; // sorted, 0-based
    bool simplicial = false;

    bool operator==(const SubdivisionCell&) const = default;
};

struct Subdivision {
    RatVec lifting;
    std::vector<SubdivisionCell> cells; // sorted by label set

    bool is_triangulation() const;
};

// The regular subdivision induced by w: columns are lifted to (a_i, w_i) in
// R^{d+1} and every facet of the lower convex hull (seen from w = -infinity)
// contributes the cell of all columns lying on it.  Non-generic w produce
// genuine subdivisions whose non-simplex cells are reported as-is.  Throws
// Error(dimension_mismatch) when w does not have n entries.
Subdivision regular_subdivision(const Configuration& a, const RatVec& w);

// Normalized volume of conv(points) with respect to the full lattice Z^k:
// k! times the Euclidean volume, computed exactly by summing determinants
// over a generic regular triangulation.  Returns 0 when the points do not
// affinely span R^k.
Int normalized_volume(const std::vector<IntVec>& points);

// One cell of a coherent mixed subdivision of A_1 + ... + A_m, obtained
// from a full-dimensional cell of the regular subdivision of the Cayley
// configuration.  The cell decomposes uniquely as a Minkowski sum
// F_1 + ... + F_m with F_i the block-i labels of the Cayley cell.
struct MixedCell {
    std::vector<std::vector<int>> summands; // per block, global 0-based labels
    Int volume;       // normalized volume of F_1 + ... + F_m in Z^r
    bool mixed;       // affine dimensions of the F_i sum to exactly r
    bool fully_mixed; // every F_i has affine dimension >= 1
};

// The coherent mixed subdivision induced by lifting the Cayley configuration
// with w.  Cells appear in the order of regular_subdivision.  Degenerate
// families (whose Cayley matrix would not validate as a Configuration, e.g.
// all blocks single points) are allowed; their cells simply have volume 0.
std::vector<MixedCell> mixed_subdivision(const CayleyConfig& cfg, const RatVec& w);

// Degree of the sparse resultant variety: the sum over r-element subsets
// {i_1, ..., i_r} of blocks of the mixed volume MV(A_{i_1}, ..., A_{i_r}),
// each obtained as a Bernstein count over the mixed cells of a generic
// coherent mixed subdivision of the subfamily.  Requires an essential family
// with m >= r+1 blocks; throws Error(not_essential) or
// Error(too_few_blocks).  Sampling of generic liftings is seeded and
// deterministic; GenericityError after the retry budget is exhausted.
Int resultant_degree(const CayleyConfig& cfg, std::uint64_t seed = 1);

// True when w lies in the tropical resultant variety, decided by whether
// the mixed subdivision induced by w has a fully mixed maximal cell.
// Requires an essential family with m >= r+1 blocks.
bool membership_via_mixed(const CayleyConfig& cfg, const RatVec& w);

// One observed equivalence class of weight vectors: all sampled w that
// select the same extreme monomial of the A-discriminant.
struct DeltaClass {
    IntVec monomial;        // shared extreme monomial, length n
    IntVec witness_w;       // first sampled weight vector in the class
    Subdivision witness_pi; // regular subdivision induced by witness_w
    long hits = 0;          // how many samples landed in the class
};

// Groups `samples` seeded weight vectors by their extreme monomial and
// reports one witness subdivision per class, ordered by monomial.  The class
// count is a sampling lower bound for the number of connected components of
// the complement of the tropical discriminant.  Non-generic draws are
// skipped; requires codimension 1 (throws Error(defective)).
std::vector<DeltaClass> delta_equivalence_classes(const Configuration& a,
                                                  int samples, std::uint64_t seed);

} // namespace tropdisc
