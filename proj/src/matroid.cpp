#include "tropdisc/matroid.hpp"

#include "tropdisc/errors.hpp"
#include "tropdisc/linalg.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

namespace tropdisc {

std::vector<int> mask_elements(Mask m) {
    std::vector<int> out;
    for (int i = 0; m != 0; ++i, m >>= 1)
        if (m & 1) out.push_back(i);
    return out;
}

IntVec incidence_vector(int n, Mask m) {
    IntVec v(n, 0);
    for (int i = 0; i < n; ++i)
        if (m >> i & 1) v[i] = 1;
    return v;
}

namespace {

// lexicographic comparison of masks as ascending element sequences
bool mask_lex_less(Mask a, Mask b) {
    while (a != 0 && b != 0) {
        int ea = std::countr_zero(a);
        int eb = std::countr_zero(b);
        if (ea != eb) return ea < eb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

RowMatroid::RowMatroid(IntMatrix rows) : rows_(std::move(rows)) {
    int n = rows_.rows();
    if (n > 64)
        throw Error(Errc::dimension_too_large, "ground set exceeds 64 elements");
    full_mask_ = n == 64 ? ~Mask(0) : ((Mask(1) << n) - 1);
}

int RowMatroid::rank_of(Mask s) const {
    auto it = rank_memo_.find(s);
    if (it != rank_memo_.end()) return it->second;
    int r = tropdisc::rank_of(rows_.select_rows(mask_elements(s)));
    rank_memo_.emplace(s, r);
    return r;
}

Mask RowMatroid::closure(Mask s) const {
    int r0 = rank_of(s);
    Mask out = s;
    for (int i = 0; i < ground_size(); ++i) {
        if (s >> i & 1) continue;
        if (rank_of(s | Mask(1) << i) == r0) out |= Mask(1) << i;
    }
    return out;
}

bool RowMatroid::independent(Mask s) const {
    return rank_of(s) == std::popcount(s);
}

Mask RowMatroid::loops() const {
    Mask l = 0;
    for (int i = 0; i < ground_size(); ++i)
        if (rank_of(Mask(1) << i) == 0) l |= Mask(1) << i;
    return l;
}

const std::vector<Mask>& RowMatroid::bases() const {
    if (!bases_memo_.empty() || rank() == 0) return bases_memo_;
    int n = ground_size();
    int r = rank();
    // enumerate independent sets of size r, extending by larger indices only
    std::vector<std::pair<Mask, int>> frontier{{0, -1}};
    for (int depth = 0; depth < r; ++depth) {
        std::vector<std::pair<Mask, int>> next;
        for (const auto& [mask, last] : frontier)
            for (int i = last + 1; i < n; ++i) {
                Mask m = mask | Mask(1) << i;
                if (independent(m)) next.emplace_back(m, i);
            }
        frontier = std::move(next);
    }
    for (const auto& [mask, last] : frontier) bases_memo_.push_back(mask);
    std::sort(bases_memo_.begin(), bases_memo_.end());
    return bases_memo_;
}

std::vector<Mask> RowMatroid::components(Mask s) const {
    std::vector<int> elems = mask_elements(s);
    if (elems.empty()) return {};
    int n = ground_size();
    UnionFind uf(n);

    // greedy basis of the restriction, in index order
    Mask basis = 0;
    std::vector<int> basis_elems;
    for (int e : elems) {
        Mask m = basis | Mask(1) << e;
        if (rank_of(m) > rank_of(basis)) {
            basis = m;
            basis_elems.push_back(e);
        }
    }
    // fundamental circuit of e over the basis: unique expression of row_e in
    // the basis rows; the support ties e to those basis elements
    IntMatrix basis_rows_t = rows_.select_rows(basis_elems).transpose();
    for (int e : elems) {
        if (basis >> e & 1) continue;
        RatVec rhs(rows_.cols());
        for (int j = 0; j < rows_.cols(); ++j) rhs[j] = Rat(rows_.at(e, j));
        auto coeff = solve_rational(basis_rows_t, rhs);
        if (!coeff) continue; // cannot happen: basis spans the restriction
        for (size_t k = 0; k < coeff->size(); ++k)
            if (!is_zero((*coeff)[k])) uf.unite(e, basis_elems[k]);
    }
    std::vector<Mask> comp_of(n, 0);
    for (int e : elems) comp_of[uf.find(e)] |= Mask(1) << e;
    std::vector<Mask> out;
    for (int e : elems)
        if (comp_of[e] != 0) out.push_back(comp_of[e]);
    std::sort(out.begin(), out.end(), mask_lex_less);
    return out;
}

// ---- lattice ---------------------------------------------------------------

FlatLattice FlatLattice::build(RowMatroid matroid, std::size_t max_flats) {
    FlatLattice lat;
    lat.matroid_ = std::move(matroid);
    const RowMatroid& m = lat.matroid_;

    Mask bottom = m.closure(0);
    if (bottom != 0)
        throw Error(Errc::pyramid_input,
                    "configuration is a pyramid: some column is zero in every kernel vector");
    lat.top_rank_ = m.rank();

    std::unordered_map<Mask, int> seen;
    std::vector<Mask> flats;
    std::vector<int> ranks;
    std::deque<Mask> queue{bottom};
    seen.emplace(bottom, 0);
    flats.push_back(bottom);
    ranks.push_back(0);
    while (!queue.empty()) {
        Mask x = queue.front();
        queue.pop_front();
        int rx = m.rank_of(x);
        if (rx == lat.top_rank_) continue;
        for (int i = 0; i < m.ground_size(); ++i) {
            if (x >> i & 1) continue;
            Mask y = m.closure(x | Mask(1) << i);
            if (seen.emplace(y, 0).second) {
                if (flats.size() >= max_flats)
                    throw Error(Errc::lattice_too_large, "flat count exceeds the configured cap");
                flats.push_back(y);
                ranks.push_back(m.rank_of(y));
                queue.push_back(y);
            }
        }
    }

    std::vector<int> order(flats.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (ranks[a] != ranks[b]) return ranks[a] < ranks[b];
        return mask_lex_less(flats[a], flats[b]);
    });
    lat.flats_.reserve(flats.size());
    lat.ranks_.reserve(flats.size());
    for (int idx : order) {
        lat.index_.emplace(flats[idx], static_cast<int>(lat.flats_.size()));
        lat.flats_.push_back(flats[idx]);
        lat.ranks_.push_back(ranks[idx]);
    }

    // covers: inclusion with rank difference one (the lattice is graded)
    lat.covers_.assign(lat.flats_.size(), {});
    std::vector<std::vector<int>> by_rank(lat.top_rank_ + 1);
    for (int i = 0; i < lat.flat_count(); ++i) by_rank[lat.ranks_[i]].push_back(i);
    for (int r = 0; r < lat.top_rank_; ++r)
        for (int lo : by_rank[r])
            for (int hi : by_rank[r + 1])
                if (mask_subset(lat.flats_[lo], lat.flats_[hi]))
                    lat.covers_[lo].push_back(hi);
    return lat;
}

int FlatLattice::index_of(Mask m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

int FlatLattice::join(int a, int b) const {
    return index_of(matroid_.closure(flats_[a] | flats_[b]));
}

// ---- chains ----------------------------------------------------------------

std::vector<Chain> maximal_chains(const FlatLattice& lattice) {
    std::vector<Chain> out;
    if (lattice.top_rank() <= 1) {
        out.push_back({});
        return out;
    }
    Chain chain;
    auto dfs = [&](auto&& self, int idx) -> void {
        chain.push_back(idx);
        if (lattice.rank(idx) == lattice.top_rank() - 1) {
            out.push_back(chain);
        } else {
            for (int c : lattice.covers()[idx])
                if (lattice.rank(c) < lattice.top_rank()) self(self, c);
        }
        chain.pop_back();
    };
    for (int i = 0; i < lattice.flat_count(); ++i)
        if (lattice.rank(i) == 1) dfs(dfs, i);
    return out;
}

std::vector<Chain> chains_of_length(const FlatLattice& lattice, int k) {
    if (k < 0 || k > lattice.top_rank() - 1)
        throw Error(Errc::invalid_input, "chain length out of range");
    std::vector<Chain> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    Chain chain;
    auto dfs = [&](auto&& self, int idx) -> void {
        chain.push_back(idx);
        if (static_cast<int>(chain.size()) == k) {
            out.push_back(chain);
        } else {
            int remaining = k - static_cast<int>(chain.size());
            for (int j = idx + 1; j < lattice.flat_count(); ++j) {
                if (lattice.rank(j) >= lattice.top_rank()) break;
                if (lattice.rank(j) > lattice.top_rank() - remaining) break;
                if (lattice.rank(j) <= lattice.rank(idx)) continue;
                if (mask_subset(lattice.flat(idx), lattice.flat(j))) self(self, j);
            }
        }
        chain.pop_back();
    };
    for (int i = 1; i < lattice.flat_count(); ++i) {
        int r = lattice.rank(i);
        if (r >= 1 && r <= lattice.top_rank() - k) dfs(dfs, i);
    }
    return out;
}

std::vector<Chain> bottom_saturated_chains(const FlatLattice& lattice, int k) {
    if (k < 0 || k > lattice.top_rank() - 1)
        throw Error(Errc::invalid_input, "chain length out of range");
    std::vector<Chain> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    // The lattice is graded, so upward covers raise the rank by exactly one;
    // cover paths from the covers of the bottom flat are precisely the
    // chains with rank sequence 1, 2, ..., k.
    Chain chain;
    auto dfs = [&](auto&& self, int idx) -> void {
        chain.push_back(idx);
        if (static_cast<int>(chain.size()) == k)
            out.push_back(chain);
        else
            for (int nxt : lattice.covers()[idx]) self(self, nxt);
        chain.pop_back();
    };
    for (int start : lattice.covers()[lattice.bottom_index()]) dfs(dfs, start);
    return out;
}

// ---- irreducibles and nested sets -------------------------------------------

std::vector<int> irreducible_flats(const FlatLattice& lattice) {
    std::vector<int> out;
    for (int i = 1; i < lattice.flat_count(); ++i) {
        if (i == lattice.top_index() ||
            lattice.matroid().components(lattice.flat(i)).size() == 1)
            out.push_back(i);
    }
    return out;
}

namespace {

// every >= 2-element antichain through the newest member must not join into
// the irreducible set
bool nested_ok_with(const FlatLattice& lat, const std::vector<bool>& irr,
                    const std::vector<int>& s, int x) {
    std::vector<int> incomparable;
    for (int y : s) {
        Mask a = lat.flat(y), b = lat.flat(x);
        if (!mask_subset(a, b) && !mask_subset(b, a)) incomparable.push_back(y);
    }
    int c = static_cast<int>(incomparable.size());
    for (Mask pick = 1; pick < (Mask(1) << c); ++pick) {
        // the picked members must themselves be pairwise incomparable
        std::vector<int> anti;
        for (int t = 0; t < c; ++t)
            if (pick >> t & 1) anti.push_back(incomparable[t]);
        bool antichain = true;
        for (size_t p = 0; p < anti.size() && antichain; ++p)
            for (size_t q = p + 1; q < anti.size() && antichain; ++q) {
                Mask a = lat.flat(anti[p]), b = lat.flat(anti[q]);
                if (mask_subset(a, b) || mask_subset(b, a)) antichain = false;
            }
        if (!antichain) continue;
        int j = x;
        for (int y : anti) j = lat.join(j, y);
        if (irr[j]) return false;
    }
    return true;
}

} // namespace

std::vector<std::vector<int>> maximal_nested_sets(const FlatLattice& lattice) {
    std::vector<int> irr = irreducible_flats(lattice);
    std::vector<bool> is_irr(lattice.flat_count(), false);
    for (int i : irr) is_irr[i] = true;
    std::vector<int> proper;
    for (int i : irr)
        if (i != lattice.top_index()) proper.push_back(i);

    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto extendable = [&](int candidate) {
        return nested_ok_with(lattice, is_irr, current, candidate);
    };
    auto dfs = [&](auto&& self, size_t from) -> void {
        bool extended = false;
        for (size_t i = from; i < proper.size(); ++i) {
            if (!extendable(proper[i])) continue;
            extended = true;
            current.push_back(proper[i]);
            self(self, i + 1);
            current.pop_back();
        }
        if (!extended) {
            // inclusion-maximal only: nothing anywhere may extend it
            for (int cand : proper) {
                if (std::find(current.begin(), current.end(), cand) != current.end()) continue;
                if (extendable(cand)) return;
            }
            out.push_back(current);
        }
    };
    dfs(dfs, 0);
    return out;
}

// ---- Bergman membership ------------------------------------------------------

namespace {

// weight of a greedy maximum-w-weight basis, optionally forced to contain one
// element; nullopt if the forced element is a loop
std::optional<Rat> greedy_weight(const RowMatroid& m, const RatVec& w, int forced) {
    int n = m.ground_size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return w[a] > w[b]; });
    Mask t = 0;
    Rat total(0);
    if (forced >= 0) {
        if (m.rank_of(Mask(1) << forced) == 0) return std::nullopt;
        t = Mask(1) << forced;
        total = w[forced];
    }
    int rank = m.rank_of(t);
    for (int e : order) {
        if (t >> e & 1) continue;
        Mask cand = t | Mask(1) << e;
        int r = m.rank_of(cand);
        if (r > rank) {
            t = cand;
            rank = r;
            total += w[e];
        }
    }
    return total;
}

} // namespace

bool bergman_membership(const RowMatroid& matroid, const RatVec& w) {
    if (static_cast<int>(w.size()) != matroid.ground_size())
        throw Error(Errc::dimension_mismatch, "weight vector length mismatch");
    auto best = greedy_weight(matroid, w, -1);
    for (int i = 0; i < matroid.ground_size(); ++i) {
        auto with_i = greedy_weight(matroid, w, i);
        if (!with_i || *with_i != *best) return false;
    }
    return true;
}

std::vector<Mask> chain_basis_key(const FlatLattice& lattice, const Chain& chain) {
    std::vector<Mask> key;
    for (Mask basis : lattice.matroid().bases()) {
        bool ok = true;
        for (int idx : chain) {
            Mask x = lattice.flat(idx);
            if (std::popcount(basis & x) != lattice.rank(idx)) { ok = false; break; }
        }
        if (ok) key.push_back(basis);
    }
    return key;
}

std::vector<int> flat_closure(const IntMatrix& kernel_basis, const std::vector<int>& s) {
    RowMatroid m(kernel_basis);
    Mask mask = 0;
    for (int i : s) {
        if (i < 0 || i >= m.ground_size())
            throw Error(Errc::invalid_input, "element out of range");
        mask |= Mask(1) << i;
    }
    return mask_elements(m.closure(mask));
}

} // namespace tropdisc
