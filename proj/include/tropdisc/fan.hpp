#pragma once
// Tropical varieties as weighted fans: lists of rational polyhedral cones
// with primitive integer ray generators, intrinsic multiplicities, and a
// shared lineality space. The three constructions provided are
//   - the Bergman (flag) fan of the column span of an integer matrix,
//   - its pushforward along an integer linear map, with multiplicities given
//     by lattice indices of image lattices,
//   - the tropical dual variety of a point configuration, assembled as the
//     Minkowski sum of the co-Bergman fan and the row space.
// Cones are stored as a covering family, not a polyhedral complex: image
// cones that overlap are kept separately, because the intersection-cycle
// engine sums over all of them. Coarse cone counting and one-dimensional
// graph summaries (for fans that are two-dimensional modulo lineality) are
// provided for reporting.

#include "tropdisc/config.hpp"
#include "tropdisc/matroid.hpp"

#include <utility>
#include <vector>

namespace tropdisc {

struct WeightedCone {
    std::vector<IntVec> rays; // primitive integer generators, no lineality part
    Int mult = 1;             // intrinsic multiplicity, always >= 1
};

struct WeightedFan {
    int ambient = 0;                 // dimension of the surrounding space
    std::vector<IntVec> lineality;   // basis of the common lineality space
    std::vector<WeightedCone> cones; // cones of the maximal (pure) dimension
    int pure_dim = 0;                // dimension of every listed cone

    int lineality_dim() const { return static_cast<int>(lineality.size()); }
};

// Flag fan of the column span of u: one cone per maximal chain of flats of
// the matroid of rows of u, with rays the incidence vectors of the chain
// flats, lineality spanned by (1,...,1), and all multiplicities 1. The fan
// depends on u only through its row matroid; redundant columns are harmless.
// A zero row (a loop) is rejected by the lattice build as Errc::pyramid_input.
WeightedFan bergman_fan(const IntMatrix& u);

// Image fan under x -> v x. Rays are mapped and re-normalized to primitive
// vectors, the lineality basis is mapped and saturated (its dimension may
// drop), cones whose image dimension falls below the maximum are discarded,
// and every kept cone gets multiplicity
//   source mult * [saturation of the image span
//                   : image of the source lattice + image lineality lattice],
// i.e. the lattice index modulo the lineality space, where the intrinsic
// multiplicities of a lineality-invariant cycle live.
// Overlapping image cones are kept as separate entries on purpose.
WeightedFan pushforward(const WeightedFan& fan, const IntMatrix& v);

// Tropicalization of the dual variety of the toric variety of a: one cone
// per bottom-saturated flag of flats (ranks 1, 2, ...) of length pure_dim - d
// in the flat lattice of a — for a non-defective configuration these are
// exactly the maximal proper chains.  Each cone is the nonnegative span of
// the flag incidence vectors plus the row space of a, with lattice-index
// multiplicity; lineality = rowspace(a).  Degenerate flags (whose cone falls
// below the maximal dimension) are dropped; by purity of the support they
// are covered by the rest.
WeightedFan tropical_discriminant(const Configuration& a);

// Exact membership of w in the closed support of the fan.
bool membership(const WeightedFan& fan, const RatVec& w);

// Maximal chains grouped into the maximal cones of the Bergman fan proper:
// two chains belong together exactly when the same bases of the row matroid
// are tight on both flags, i.e. the flag cones span the same coarse cone.
// Groups are ordered by their basis key.
std::vector<std::vector<Chain>> bergman_cone_classes(const FlatLattice& lattice);

// For each coarse class, the dimension of v * (span of the class rays plus
// the all-ones vector). Used for counts of the form "k of the maximal cones
// map to codimension one"; order matches bergman_cone_classes.
std::vector<int> class_image_dims(const FlatLattice& lattice, const IntMatrix& v);

// The U and V blocks realizing the dual variety as the image of a linear
// space under a monomial map: u = blockdiag(gale(a), I_d), v = (I_n | A^t).
// pushforward(bergman_fan(u), v) has the same support as
// tropical_discriminant(a); the two routes are kept separate for testing.
struct UVMap {
    IntMatrix u;
    IntMatrix v;
};
UVMap discriminant_uv(const Configuration& a);

// One-dimensional summary of a fan that is two-dimensional modulo its
// lineality space: rays of the coarsest fan structure on the support become
// vertices, the two-dimensional sectors between consecutive rays become
// edges. Vertices are primitive vectors in quotient coordinates (the rows of
// `projection` span the orthogonal complement of the lineality space, so
// composing with it kills exactly the lineality). Throws Errc::invalid_input
// if the fan is not two-dimensional modulo lineality.
struct GraphSummary {
    IntMatrix projection;                    // (ambient - lin dim) x ambient
    std::vector<IntVec> vertices;            // sorted primitive quotient vectors
    std::vector<std::pair<int, int>> edges;  // vertex index pairs, first < second
    std::vector<int> degrees;                // per vertex, parallel to vertices
};
GraphSummary graph_summary(const WeightedFan& fan);

} // namespace tropdisc
