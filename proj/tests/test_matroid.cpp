#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tropdisc/config.hpp"
#include "tropdisc/linalg.hpp"
#include "tropdisc/lp.hpp"
#include "tropdisc/matroid.hpp"
#include "tropdisc/rng.hpp"

#include "example_data.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

using namespace tropdisc;

namespace {

FlatLattice lattice_of(const IntMatrix& a) {
    Configuration cfg(a);
    return FlatLattice::build(RowMatroid(cfg.gale()));
}

// closed membership w ∈ R_{>=0}{rays} + R·(1,...,1), by LP feasibility
bool in_flag_cone_closed(const std::vector<IntVec>& rays, const RatVec& w) {
    int n = static_cast<int>(w.size());
    std::vector<RatVec> rows(n);
    for (int i = 0; i < n; ++i) {
        RatVec r;
        for (const auto& ray : rays) r.push_back(Rat(ray[i]));
        r.push_back(Rat(1));  // +mu
        r.push_back(Rat(-1)); // -mu
        rows[i] = std::move(r);
    }
    return lp_feasible(rows, w);
}

std::vector<IntVec> chain_rays(const FlatLattice& lat, const Chain& c) {
    std::vector<IntVec> rays;
    for (int idx : c) rays.push_back(incidence_vector(lat.ground_size(), lat.flat(idx)));
    return rays;
}

} // namespace

TEST_CASE("flat_closure basics") {
    Configuration cfg(examples::veronese);
    // no loops: closure of the empty set is empty
    CHECK(flat_closure(cfg.gale(), {}).empty());
    // the circuit through points 1,2 (0-based 0,1) also contains point 4 (0-based 3)
    CHECK(flat_closure(cfg.gale(), {0, 1}) == std::vector<int>{0, 1, 3});
    // closure is idempotent and extensive
    auto c = flat_closure(cfg.gale(), {0, 1});
    CHECK(flat_closure(cfg.gale(), c) == c);
}

TEST_CASE("Veronese flat lattice") {
    FlatLattice lat = lattice_of(examples::veronese);
    CHECK(lat.ground_size() == 6);
    CHECK(lat.top_rank() == 3);
    CHECK(lat.flat(lat.bottom_index()) == 0);
    CHECK(lat.flat(lat.top_index()) == 0b111111);

    int r1 = 0, r2 = 0;
    for (int i = 0; i < lat.flat_count(); ++i) {
        if (lat.rank(i) == 1) ++r1;
        if (lat.rank(i) == 2) ++r2;
    }
    CHECK(r1 == 6); // all six singletons are closed
    CHECK(r2 == 9); // three 3-point circuits plus six free pairs
    CHECK(lat.flat_count() == 17);

    // the three circuits 124, 235, 456 (1-based)
    CHECK(lat.index_of(0b001011) >= 0);
    CHECK(lat.index_of(0b010110) >= 0);
    CHECK(lat.index_of(0b111000) >= 0);

    // flats are closed under intersection
    for (int i = 0; i < lat.flat_count(); ++i)
        for (int j = i + 1; j < lat.flat_count(); ++j)
            CHECK(lat.index_of(lat.flat(i) & lat.flat(j)) >= 0);
}

TEST_CASE("trivial and Boolean lattices") {
    // n = d+1: one-dimensional kernel, no proper flats
    Configuration line(IntMatrix{{1, 1}});
    FlatLattice lat = FlatLattice::build(RowMatroid(line.gale()));
    CHECK(lat.top_rank() == 1);
    CHECK(lat.flat_count() == 2);
    auto chains = maximal_chains(lat);
    REQUIRE(chains.size() == 1);
    CHECK(chains[0].empty());

    // two-block configuration: Boolean rank-2 lattice on atoms {1,2}, {3,4}
    FlatLattice boolean_lat = lattice_of(examples::boolean2);
    CHECK(boolean_lat.top_rank() == 2);
    CHECK(boolean_lat.flat_count() == 4);
    CHECK(boolean_lat.index_of(0b0011) >= 0);
    CHECK(boolean_lat.index_of(0b1100) >= 0);
    auto bool_chains = maximal_chains(boolean_lat);
    CHECK(bool_chains.size() == 2);
}

TEST_CASE("pyramid input is rejected at lattice build") {
    // kernel basis with a zero row: element 2 is in every kernel zero-set
    IntMatrix b{{1}, {-1}, {0}};
    CHECK_THROWS_AS(FlatLattice::build(RowMatroid(b)), Error);
    try {
        FlatLattice::build(RowMatroid(b));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::pyramid_input);
    }
}

TEST_CASE("Veronese maximal chains") {
    FlatLattice lat = lattice_of(examples::veronese);
    auto chains = maximal_chains(lat);
    CHECK(chains.size() == 21); // 3 circuits x 3 atoms + 6 pairs x 2 atoms
    std::set<Chain> dedup(chains.begin(), chains.end());
    CHECK(dedup.size() == chains.size());
    for (const auto& c : chains) {
        REQUIRE(c.size() == 2);
        CHECK(lat.rank(c[0]) == 1);
        CHECK(lat.rank(c[1]) == 2);
        CHECK(mask_subset(lat.flat(c[0]), lat.flat(c[1])));
    }
    // deterministic lexicographic order
    CHECK(std::is_sorted(chains.begin(), chains.end()));
}

TEST_CASE("chains_of_length consistency with maximal chains") {
    FlatLattice lat = lattice_of(examples::veronese);
    auto k0 = chains_of_length(lat, 0);
    REQUIRE(k0.size() == 1);
    CHECK(k0[0].empty());

    auto k2 = chains_of_length(lat, 2);
    auto maximal = maximal_chains(lat);
    CHECK(k2 == maximal);

    // oracle: k-subsets of maximal chains, deduplicated
    auto k1 = chains_of_length(lat, 1);
    std::set<Chain> expect;
    for (const auto& c : maximal)
        for (int idx : c) expect.insert({idx});
    CHECK(k1.size() == expect.size());
    for (const auto& c : k1) CHECK(expect.count(c) == 1);
    CHECK(k1.size() == 15); // every proper flat occurs in some maximal chain
}

TEST_CASE("chains_of_length against subset oracle on the quadrics Cayley configuration") {
    FlatLattice lat = lattice_of(examples::three_quadrics);
    int top = lat.top_rank();
    auto maximal = maximal_chains(lat);
    for (int k = 1; k < top; ++k) {
        auto direct = chains_of_length(lat, k);
        std::set<Chain> expect;
        // all k-subsets of each maximal chain (subsets of a chain are chains,
        // and every chain extends to a maximal one)
        for (const auto& c : maximal) {
            int m = static_cast<int>(c.size());
            for (Mask pick = 0; pick < (Mask(1) << m); ++pick) {
                if (std::popcount(pick) != k) continue;
                Chain sub;
                for (int t = 0; t < m; ++t)
                    if (pick >> t & 1) sub.push_back(c[t]);
                expect.insert(sub);
            }
        }
        CHECK(direct.size() == expect.size());
        std::set<Chain> got(direct.begin(), direct.end());
        CHECK(got == expect);
    }
}

TEST_CASE("irreducible flats") {
    FlatLattice lat = lattice_of(examples::veronese);
    auto irr = irreducible_flats(lat);
    // six atoms + three circuits + top
    CHECK(irr.size() == 10);
    std::set<Mask> irr_masks;
    for (int i : irr) irr_masks.insert(lat.flat(i));
    CHECK(irr_masks.count(0b001011) == 1);
    CHECK(irr_masks.count(0b010110) == 1);
    CHECK(irr_masks.count(0b111000) == 1);
    CHECK(irr_masks.count(0b111111) == 1);
    // atoms are always irreducible
    for (int i = 0; i < lat.flat_count(); ++i)
        if (lat.rank(i) == 1)
            CHECK(std::find(irr.begin(), irr.end(), i) != irr.end());
    // two-element rank-2 flats are products of atoms, not irreducible
    int pair_flat = lat.index_of(0b000101); // {1,3} 1-based
    REQUIRE(pair_flat >= 0);
    CHECK(std::find(irr.begin(), irr.end(), pair_flat) == irr.end());

    // Boolean lattice: only atoms (and the artificially added top)
    FlatLattice bl = lattice_of(examples::boolean2);
    auto birr = irreducible_flats(bl);
    CHECK(birr.size() == 3);
}

TEST_CASE("irreducibility agrees with brute-force rank-additive bipartitions") {
    FlatLattice lat = lattice_of(examples::veronese);
    const RowMatroid& m = lat.matroid();
    for (int i = 1; i < lat.flat_count(); ++i) {
        Mask x = lat.flat(i);
        auto elems = mask_elements(x);
        int nx = static_cast<int>(elems.size());
        // reducible iff some proper bipartition is rank-additive
        bool reducible = false;
        for (Mask pick = 1; pick + 1 < (Mask(1) << nx) && !reducible; ++pick) {
            Mask part = 0;
            for (int t = 0; t < nx; ++t)
                if (pick >> t & 1) part |= Mask(1) << elems[t];
            if (m.rank_of(part) + m.rank_of(x & ~part) == m.rank_of(x)) reducible = true;
        }
        bool claimed_irreducible = m.components(x).size() == 1;
        CHECK(claimed_irreducible == !reducible);
    }
}

TEST_CASE("maximal nested sets") {
    FlatLattice lat = lattice_of(examples::veronese);
    auto nested = maximal_nested_sets(lat);
    CHECK(nested.size() == 15); // 9 atom-in-circuit chains + 6 free atom pairs
    for (const auto& s : nested) CHECK(s.size() == lat.top_rank() - 1);
    auto chains = maximal_chains(lat);
    CHECK(nested.size() <= chains.size());

    // Boolean: each maximal nested set is a single atom
    FlatLattice bl = lattice_of(examples::boolean2);
    auto bnested = maximal_nested_sets(bl);
    REQUIRE(bnested.size() == 2);
    std::set<Mask> seen;
    for (const auto& s : bnested) {
        REQUIRE(s.size() == 1);
        CHECK(bl.rank(s[0]) == 1);
        seen.insert(bl.flat(s[0]));
    }
    CHECK(seen.size() == 2);
}

TEST_CASE("every flag chain lies in exactly one maximal nested cone") {
    for (const IntMatrix* a : {&examples::veronese, &examples::boolean2}) {
        FlatLattice lat = lattice_of(*a);
        auto nested = maximal_nested_sets(lat);
        for (const auto& chain : maximal_chains(lat)) {
            // interior point of the chain cone
            RatVec p(lat.ground_size(), Rat(0));
            for (int idx : chain) {
                IntVec e = incidence_vector(lat.ground_size(), lat.flat(idx));
                for (int i = 0; i < lat.ground_size(); ++i) p[i] += Rat(e[i]);
            }
            int containing = 0;
            for (const auto& s : nested) {
                std::vector<IntVec> rays;
                for (int idx : s) rays.push_back(incidence_vector(lat.ground_size(), lat.flat(idx)));
                if (in_flag_cone_closed(rays, p)) ++containing;
            }
            CHECK(containing == 1);
        }
    }
}

TEST_CASE("UV matroid: lattice, chains, Bergman cone count") {
    RowMatroid m(examples::uv_u);
    CHECK(m.rank() == 3);
    FlatLattice lat = FlatLattice::build(m);
    CHECK(lat.ground_size() == 5);
    CHECK(lat.top_rank() == 3);

    int r2 = 0, triangles = 0;
    for (int i = 0; i < lat.flat_count(); ++i)
        if (lat.rank(i) == 2) {
            ++r2;
            if (std::popcount(lat.flat(i)) == 3) ++triangles;
        }
    CHECK(r2 == 6);
    CHECK(triangles == 2);

    auto chains = maximal_chains(lat);
    CHECK(chains.size() == 14);

    CHECK(lat.matroid().bases().size() == 8); // C(5,3) minus the two triangles

    // group chains by max-weight-basis key: the merged classes are the
    // maximal Bergman cones; the complex is the complete bipartite graph
    // K_{3,3}, so there are 9 of them
    std::map<std::vector<Mask>, std::vector<Chain>> classes;
    for (const auto& c : chains) classes[chain_basis_key(lat, c)].push_back(c);
    CHECK(classes.size() == 9);

    // nested-set fan strictly refines it here (10 cones)
    CHECK(maximal_nested_sets(lat).size() == 10);
}

TEST_CASE("Veronese Bergman cone count via basis keys") {
    FlatLattice lat = lattice_of(examples::veronese);
    std::map<std::vector<Mask>, int> classes;
    for (const auto& c : maximal_chains(lat)) ++classes[chain_basis_key(lat, c)];
    CHECK(classes.size() == 15); // 9 circuit chains + 6 merged pair flats
    for (const auto& [key, count] : classes) CHECK_FALSE(key.empty());
}

TEST_CASE("bergman membership: constants, flats, chain combinations") {
    Configuration cfg(examples::veronese);
    RowMatroid m(cfg.gale());
    FlatLattice lat = FlatLattice::build(RowMatroid(cfg.gale()));

    RatVec constant(6, Rat(7));
    CHECK(bergman_membership(m, constant));

    for (int i = 1; i < lat.flat_count() - 1; ++i) {
        RatVec w = to_rat(incidence_vector(6, lat.flat(i)));
        CHECK(bergman_membership(m, w));
    }

    Rng rng(414);
    for (const auto& chain : maximal_chains(lat)) {
        RatVec w(6, Rat(0));
        for (int idx : chain) {
            long lambda = rng.range(1, 50);
            IntVec e = incidence_vector(6, lat.flat(idx));
            for (int i = 0; i < 6; ++i) w[i] += Rat(lambda * e[i].get_si());
        }
        CHECK(bergman_membership(m, w));
    }
}

TEST_CASE("bergman membership agrees with the flag-cone test on random w") {
    for (const IntMatrix* rows : {&examples::uv_u}) {
        RowMatroid m(*rows);
        FlatLattice lat = FlatLattice::build(RowMatroid(*rows));
        auto chains = maximal_chains(lat);
        int n = m.ground_size();
        Rng rng(2718);
        int members = 0;
        for (int trial = 0; trial < 100; ++trial) {
            RatVec w(n, Rat(0));
            if (trial % 2 == 0) {
                // generic draw: almost surely off the (lower-dimensional) fan
                for (auto& x : w) x = Rat(rng.range(-30, 30));
            } else {
                // on-fan draw: positive chain combination plus a lineality shift
                const Chain& c = chains[rng.below(chains.size() - 1)];
                for (int idx : c) {
                    long lambda = rng.range(1, 9);
                    IntVec e = incidence_vector(n, lat.flat(idx));
                    for (int i = 0; i < n; ++i) w[i] += Rat(lambda * e[i].get_si());
                }
                long mu = rng.range(-5, 5);
                for (int i = 0; i < n; ++i) w[i] += Rat(mu);
            }
            bool greedy = bergman_membership(m, w);
            bool cone = false;
            for (const auto& c : chains)
                if (in_flag_cone_closed(chain_rays(lat, c), w)) { cone = true; break; }
            CHECK(greedy == cone);
            if (greedy) ++members;
        }
        // the suite must exercise both outcomes
        CHECK(members >= 50);
        CHECK(members < 100);
    }
}
