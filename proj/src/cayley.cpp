#include "tropdisc/cayley.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "tropdisc/cycles.hpp"
#include "tropdisc/linalg.hpp"
#include "tropdisc/rng.hpp"

namespace tropdisc {

namespace {

// All cells of the regular subdivision of the columns of `a` lifted by w:
// every facet of the lower hull of {(a_i, w_i)} is pinned by some subset of
// rank(a) linearly independent columns, so scanning those subsets and
// keeping the functionals c with c.a_i = w_i on the subset and c.a_j <= w_j
// everywhere finds each cell at least once.  Works for rank-deficient
// matrices too (the subset then determines the functional's values on the
// column span, which is all the comparison needs).
std::vector<SubdivisionCell> lower_cells(const IntMatrix& a, const RatVec& w) {
    const int d = a.rows(), n = a.cols();
    if (static_cast<int>(w.size()) != n)
        throw Error(Errc::dimension_mismatch,
                    "regular_subdivision: lifting must have one entry per column");
    const int r0 = rank_of(a);

    std::set<std::vector<int>> seen;
    std::vector<int> pick(r0);
    for (int j = 0; j < r0; ++j) pick[j] = j;
    while (true) {
        const IntMatrix sel = a.select_columns(pick);
        if (rank_of(sel) == r0) {
            RatVec rhs(r0);
            for (int j = 0; j < r0; ++j) rhs[j] = w[pick[j]];
            const auto c = solve_rational(sel.transpose(), rhs);
            bool lower = true;
            std::vector<int> cell;
            for (int j = 0; j < n && lower; ++j) {
                Rat value(0);
                for (int i = 0; i < d; ++i) value += (*c)[i] * Rat(a.at(i, j));
                const int s = sign_of(w[j] - value);
                if (s < 0) lower = false;
                if (s == 0) cell.push_back(j);
            }
            if (lower) seen.insert(std::move(cell));
        }
        int j = r0 - 1;
        while (j >= 0 && pick[j] == n - r0 + j) --j;
        if (j < 0) break;
        ++pick[j];
        for (int l = j + 1; l < r0; ++l) pick[l] = pick[l - 1] + 1;
    }

    std::vector<SubdivisionCell> out;
    for (const auto& labels : seen)
        out.push_back({labels, static_cast<int>(labels.size()) == r0});
    return out;
}

int block_of(const CayleyConfig& cfg, int label) {
    int i = 0;
    for (int acc = 0; i < cfg.m(); ++i) {
        acc += static_cast<int>(cfg.blocks[i].size());
        if (label < acc) break;
    }
    return i;
}

int affine_dim(const std::vector<IntVec>& pts) {
    if (pts.size() <= 1) return 0;
    const int k = static_cast<int>(pts.front().size());
    std::vector<IntVec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        IntVec d(k);
        for (int c = 0; c < k; ++c) d[c] = pts[i][c] - pts.front()[c];
        diffs.push_back(std::move(d));
    }
    return rank_of(from_columns(k, diffs));
}

IntMatrix homogenize(const std::vector<IntVec>& pts) {
    const int k = static_cast<int>(pts.front().size());
    IntMatrix h(k + 1, static_cast<int>(pts.size()));
    for (int j = 0; j < h.cols(); ++j) {
        h.at(0, j) = 1;
        for (int i = 0; i < k; ++i) h.at(i + 1, j) = pts[j][i];
    }
    return h;
}

// raw Cayley matrix without Configuration validation, for internal
// subdivision work on subfamilies
IntMatrix raw_cayley(const CayleyConfig& cfg) {
    const int m = cfg.m(), n = cfg.n();
    if (m == 0)
        throw Error(Errc::invalid_input, "cayley_matrix: no blocks");
    IntMatrix out(m + cfg.r, n);
    int col = 0;
    for (int i = 0; i < m; ++i) {
        if (cfg.blocks[i].empty())
            throw Error(Errc::invalid_input, "cayley_matrix: empty block");
        for (const IntVec& p : cfg.blocks[i]) {
            if (static_cast<int>(p.size()) != cfg.r)
                throw Error(Errc::dimension_mismatch,
                            "cayley_matrix: point of the wrong dimension");
            out.at(i, col) = 1;
            for (int j = 0; j < cfg.r; ++j) out.at(m + j, col) = p[j];
            ++col;
        }
    }
    return out;
}

// Bernstein count for an r-block subfamily: total determinant of the cells
// in which every block contributes an edge, over a generic (triangulating)
// lifting drawn from rng.
Int mixed_volume(const CayleyConfig& sub, Rng& rng) {
    const IntMatrix cay = raw_cayley(sub);
    const int n = cay.cols();
    for (int attempt = 0; attempt < 32; ++attempt) {
        RatVec w(n);
        for (int j = 0; j < n; ++j) w[j] = Rat(Int(rng.below(1000000)));
        const std::vector<SubdivisionCell> cells = lower_cells(cay, w);
        if (!std::all_of(cells.begin(), cells.end(),
                         [](const SubdivisionCell& c) { return c.simplicial; }))
            continue;
        Int total(0);
        for (const SubdivisionCell& cell : cells) {
            std::vector<int> per_block(sub.m(), 0);
            for (int label : cell.labels) ++per_block[block_of(sub, label)];
            if (std::all_of(per_block.begin(), per_block.end(),
                            [](int k) { return k == 2; }))
                total += det_abs(cay.select_columns(cell.labels));
        }
        return total;
    }
    throw GenericityError("resultant_degree: no generic lifting found", 32);
}

} // namespace

bool Subdivision::is_triangulation() const {
    return std::all_of(cells.begin(), cells.end(),
                       [](const SubdivisionCell& c) { return c.simplicial; });
}

Configuration cayley_matrix(const CayleyConfig& cfg) {
    return Configuration(raw_cayley(cfg));
}

bool is_essential(const CayleyConfig& cfg) {
    const int m = cfg.m();
    for (int mask = 1; mask < (1 << m); ++mask) {
        const int size = __builtin_popcount(static_cast<unsigned>(mask));
        if (size > cfg.r) continue;
        std::vector<IntVec> diffs;
        for (int i = 0; i < m; ++i) {
            if (!(mask & (1 << i))) continue;
            const auto& block = cfg.blocks[i];
            for (std::size_t j = 1; j < block.size(); ++j) {
                IntVec d(cfg.r);
                for (int c = 0; c < cfg.r; ++c) d[c] = block[j][c] - block[0][c];
                diffs.push_back(std::move(d));
            }
        }
        const int dim = diffs.empty() ? 0 : rank_of(from_columns(cfg.r, diffs));
        if (dim < size) return false;
    }
    return true;
}

Subdivision regular_subdivision(const Configuration& a, const RatVec& w) {
    Subdivision out;
    out.lifting = w;
    out.cells = lower_cells(a.matrix(), w);
    return out;
}

Int normalized_volume(const std::vector<IntVec>& points) {
    if (points.empty())
        throw Error(Errc::invalid_input, "normalized_volume: empty point list");
    std::vector<IntVec> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const int k = static_cast<int>(pts.front().size());
    if (affine_dim(pts) < k) return Int(0);

    const IntMatrix h = homogenize(pts);
    Rng rng(9001);
    for (int attempt = 0; attempt < 32; ++attempt) {
        RatVec w(pts.size());
        for (std::size_t j = 0; j < pts.size(); ++j) w[j] = Rat(Int(rng.below(1000000)));
        const std::vector<SubdivisionCell> cells = lower_cells(h, w);
        if (!std::all_of(cells.begin(), cells.end(),
                         [](const SubdivisionCell& c) { return c.simplicial; }))
            continue;
        Int total(0);
        for (const SubdivisionCell& cell : cells)
            total += det_abs(h.select_columns(cell.labels));
        return total;
    }
    throw GenericityError("normalized_volume: no generic lifting found", 32);
}

std::vector<MixedCell> mixed_subdivision(const CayleyConfig& cfg, const RatVec& w) {
    // the raw matrix, not a validated Configuration: degenerate families
    // (e.g. all blocks single points) still have a well-defined subdivision
    const std::vector<SubdivisionCell> cells = lower_cells(raw_cayley(cfg), w);

    std::vector<MixedCell> out;
    for (const SubdivisionCell& cell : cells) {
        MixedCell mc;
        mc.summands.assign(cfg.m(), {});
        for (int label : cell.labels)
            mc.summands[block_of(cfg, label)].push_back(label);

        int first = 0, dim_total = 0;
        bool every_block_positive = true;
        std::vector<std::vector<IntVec>> pieces;
        for (int i = 0; i < cfg.m(); ++i) {
            std::vector<IntVec> piece;
            for (int label : mc.summands[i])
                piece.push_back(cfg.blocks[i][label - first]);
            const int dim = piece.empty() ? 0 : affine_dim(piece);
            dim_total += dim;
            if (dim < 1) every_block_positive = false;
            pieces.push_back(std::move(piece));
            first += static_cast<int>(cfg.blocks[i].size());
        }

        // Minkowski sum of the summands, point by point
        std::vector<IntVec> sums = {IntVec(cfg.r, Int(0))};
        for (const auto& piece : pieces) {
            std::vector<IntVec> next;
            for (const IntVec& s : sums)
                for (const IntVec& p : piece) {
                    IntVec q = s;
                    for (int c = 0; c < cfg.r; ++c) q[c] += p[c];
                    next.push_back(std::move(q));
                }
            sums = std::move(next);
        }

        mc.volume = normalized_volume(sums);
        mc.mixed = dim_total == cfg.r;
        mc.fully_mixed = every_block_positive;
        out.push_back(std::move(mc));
    }
    return out;
}

Int resultant_degree(const CayleyConfig& cfg, std::uint64_t seed) {
    if (cfg.m() < cfg.r + 1)
        throw Error(Errc::too_few_blocks,
                    "resultant_degree: need at least r + 1 blocks");
    if (!is_essential(cfg))
        throw Error(Errc::not_essential,
                    "resultant_degree: the family is not essential");

    Rng rng(seed);
    Int total(0);
    std::vector<int> pick(cfg.r);
    for (int j = 0; j < cfg.r; ++j) pick[j] = j;
    while (true) {
        CayleyConfig sub;
        sub.r = cfg.r;
        for (int i : pick) sub.blocks.push_back(cfg.blocks[i]);
        total += mixed_volume(sub, rng);

        int j = cfg.r - 1;
        while (j >= 0 && pick[j] == cfg.m() - cfg.r + j) --j;
        if (j < 0) break;
        ++pick[j];
        for (int l = j + 1; l < cfg.r; ++l) pick[l] = pick[l - 1] + 1;
    }
    return total;
}

bool membership_via_mixed(const CayleyConfig& cfg, const RatVec& w) {
    if (cfg.m() < cfg.r + 1)
        throw Error(Errc::too_few_blocks,
                    "membership_via_mixed: need at least r + 1 blocks");
    if (!is_essential(cfg))
        throw Error(Errc::not_essential,
                    "membership_via_mixed: the family is not essential");
    const std::vector<MixedCell> cells = mixed_subdivision(cfg, w);
    return std::any_of(cells.begin(), cells.end(),
                       [](const MixedCell& c) { return c.fully_mixed; });
}

std::vector<DeltaClass> delta_equivalence_classes(const Configuration& a,
                                                  int samples, std::uint64_t seed) {
    if (codimension(a) != 1)
        throw Error(Errc::defective,
                    "delta_equivalence_classes: dual variety is not a hypersurface");
    std::map<IntVec, DeltaClass> classes;
    for (int k = 0; k < samples; ++k) {
        const IntVec w = sample_weight_vector(a.n(), seed + static_cast<std::uint64_t>(k));
        IntVec monomial;
        try {
            monomial = initial_monomial(a, to_rat(w));
        } catch (const GenericityError&) {
            continue;
        }
        auto it = classes.find(monomial);
        if (it == classes.end()) {
            DeltaClass cls;
            cls.monomial = monomial;
            cls.witness_w = w;
            cls.witness_pi = regular_subdivision(a, to_rat(w));
            cls.hits = 1;
            classes.emplace(std::move(monomial), std::move(cls));
        } else {
            ++it->second.hits;
        }
    }
    std::vector<DeltaClass> out;
    for (auto& [m, cls] : classes) out.push_back(std::move(cls));
    return out;
}

} // namespace tropdisc
