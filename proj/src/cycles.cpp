#include "tropdisc/cycles.hpp"

#include "tropdisc/linalg.hpp"
#include "tropdisc/lp.hpp"
#include "tropdisc/matroid.hpp"
#include "tropdisc/rng.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

namespace tropdisc {

namespace {

// Strictly increasing c-subsets of {0..n-1}, lexicographic.
std::vector<std::vector<int>> subsets_of_size(int n, int c) {
    std::vector<std::vector<int>> out;
    if (c < 0 || c > n) return out;
    std::vector<int> comb(c);
    for (int i = 0; i < c; ++i) comb[i] = i;
    while (true) {
        out.push_back(comb);
        int i = c - 1;
        while (i >= 0 && comb[i] == n - c + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < c; ++j) comb[j] = comb[j - 1] + 1;
    }
    return out;
}

int codim_with(const Configuration& a, const FlatLattice& lattice) {
    // dim(span of a flag cone + rowspace(A)) = d + rank of the B^t-projected
    // flag block, because B^t maps R^n onto R^{n-d} with kernel rowspace(A).
    const IntMatrix bt = a.gale().transpose();
    const int n = a.n();
    const int m = n - a.d();
    int best = 0;
    const int bound = lattice.top_rank() - 1; // proper flags per maximal chain
    for (const Chain& chain : maximal_chains(lattice)) {
        std::vector<IntVec> cols;
        cols.reserve(chain.size());
        for (int idx : chain)
            cols.push_back(mat_vec(bt, incidence_vector(n, lattice.flat(idx))));
        best = std::max(best, rank_of(from_columns(m, cols)));
        if (best == bound) break; // cannot grow further
    }
    return n - a.d() - best;
}

template <typename ComputeCycle>
Int degree_by_sampling(int n, std::uint64_t seed, int budget, const char* who,
                       ComputeCycle&& compute) {
    std::optional<Int> first;
    int attempts = 0;
    for (int k = 0; k < budget; ++k) {
        ++attempts;
        const RatVec w = to_rat(sample_weight_vector(n, seed + static_cast<std::uint64_t>(k)));
        std::optional<Int> total;
        try {
            total = compute(w).total_degree();
        } catch (const GenericityError&) {
            continue; // non-generic sample, draw again
        }
        if (!first) {
            first = std::move(*total);
            continue;
        }
        if (*first == *total) return std::move(*total);
        throw GenericityError(std::string(who) + ": two generic samples disagree",
                              attempts);
    }
    throw GenericityError(std::string(who) + ": sampling budget exhausted", attempts);
}

// Determinant of a small dense rational matrix, by elimination.
Rat rat_det(std::vector<RatVec> m) {
    const int c = static_cast<int>(m.size());
    Rat det(1);
    for (int j = 0; j < c; ++j) {
        int piv = -1;
        for (int i = j; i < c; ++i)
            if (!is_zero(m[i][j])) {
                piv = i;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != j) {
            std::swap(m[piv], m[j]);
            det = -det;
        }
        det *= m[j][j];
        for (int i = j + 1; i < c; ++i) {
            if (is_zero(m[i][j])) continue;
            const Rat f = m[i][j] / m[j][j];
            for (int l = j + 1; l < c; ++l) m[i][l] -= f * m[j][l];
        }
    }
    return det;
}

// One flag of flats, prepared for repeated evaluation against many tau and
// many w.  The projected flag block B^t [e_{X_1} | ... | e_{X_k}] is brought
// to one-nonzero-per-column form by determinant-preserving row operations
// (no swaps, no scaling), and the same operations are applied to a copy of
// B^t.  For any c-subset tau the square system
//   M_tau z = B^t w,   M_tau = B^t [e_{X_1} .. e_{X_k} | e_{t_1} .. e_{t_c}]
// then collapses: det M_tau = det_factor * det(tail_tau), where tail_tau is
// the c x c block of the reduced B^t on the pivot-free rows and the columns
// tau, and z is one c x c solve plus a single division per flag coordinate.
struct PreparedChain {
    std::vector<RatVec> reduced; // m x n: B^t after the row operations
    std::vector<int> pivot_row;  // row holding the pivot of flag column j
    std::vector<int> free_rows;  // the c pivot-free rows, increasing
    std::vector<Rat> pivot;      // the k pivot values, nonzero
    Rat det_factor;              // permutation sign times product of pivots
};

// The chain-sum engine: everything happens in the quotient R^n / rowspace(A).
// The Gale transpose B^t maps onto it with kernel exactly rowspace(A), so
//   sum lambda_j g_j in rowspace(A)  <=>  sum lambda_j B^t g_j = 0,
// and because the columns of A span Z^d and B is saturated,
//   |det(A^t | G)| = |det(B^t G)| for any n-d further columns G.
//
// Flags have n-d-c flats of ranks exactly 1, 2, ..., n-d-c.  For c = 1 every
// (n-d-1)-element proper chain is of this form, so this is the plain chain
// sum of the hypersurface case.  For defective A (c > 1) the same geometric
// intersection point is witnessed by many chains with gaps in their rank
// sequences — all carrying the same determinant — and exactly one
// bottom-saturated flag; summing over all of them would overcount every
// intersection.  (Checked against the mixed-cell multiplicity description of
// initial resultant ideals.)
class ChainEngine {
public:
    explicit ChainEngine(const Configuration& a) : n_(a.n()), m_(a.n() - a.d()) {
        FlatLattice lattice = FlatLattice::build(RowMatroid(a.gale()));
        c_ = codim_with(a, lattice);
        taus_ = subsets_of_size(n_, c_);
        const int k = m_ - c_;
        const IntMatrix bt = a.gale().transpose(); // m x n

        for (const Chain& chain : bottom_saturated_chains(lattice, k)) {
            PreparedChain pc;
            pc.reduced.assign(m_, RatVec(n_, Rat(0)));
            for (int i = 0; i < m_; ++i)
                for (int j = 0; j < n_; ++j) pc.reduced[i][j] = Rat(bt.at(i, j));
            std::vector<RatVec> flag(m_, RatVec(k, Rat(0)));
            for (int j = 0; j < k; ++j)
                for (int e : mask_elements(lattice.flat(chain[j])))
                    for (int i = 0; i < m_; ++i) flag[i][j] += Rat(bt.at(i, e));

            bool degenerate = false;
            std::vector<char> used(m_, 0);
            for (int j = 0; j < k; ++j) {
                int r = -1;
                for (int i = 0; i < m_; ++i)
                    if (!used[i] && !is_zero(flag[i][j])) {
                        r = i;
                        break;
                    }
                if (r < 0) {
                    degenerate = true; // det M_tau = 0 for every tau
                    break;
                }
                used[r] = 1;
                pc.pivot_row.push_back(r);
                pc.pivot.push_back(flag[r][j]);
                for (int i = 0; i < m_; ++i) {
                    if (i == r || is_zero(flag[i][j])) continue;
                    const Rat f = flag[i][j] / flag[r][j];
                    for (int l = j; l < k; ++l) flag[i][l] -= f * flag[r][l];
                    for (int l = 0; l < n_; ++l) pc.reduced[i][l] -= f * pc.reduced[r][l];
                }
            }
            if (degenerate) continue; // zero determinants are silently dropped
            for (int i = 0; i < m_; ++i)
                if (!used[i]) pc.free_rows.push_back(i);

            std::vector<int> seq = pc.pivot_row;
            seq.insert(seq.end(), pc.free_rows.begin(), pc.free_rows.end());
            int inversions = 0;
            for (std::size_t x = 0; x < seq.size(); ++x)
                for (std::size_t y = x + 1; y < seq.size(); ++y)
                    if (seq[x] > seq[y]) ++inversions;
            pc.det_factor = Rat(inversions % 2 == 0 ? 1 : -1);
            for (const Rat& p : pc.pivot) pc.det_factor *= p;
            chains_.push_back(std::move(pc));
        }
    }

    int codim() const { return c_; }

    InitialCycle cycle(const RatVec& w) const {
        if (static_cast<int>(w.size()) != n_)
            throw Error(Errc::dimension_mismatch, "initial_cycle: w must have n entries");
        // The cone queries are invariant under positive scaling of w.
        const IntVec wi = scale_to_integer(w);
        const int k = m_ - c_;

        std::vector<Int> totals(taus_.size(), Int(0));
        std::vector<RatVec> tail(c_, RatVec(c_));
        RatVec b(m_), z(c_);
        for (const PreparedChain& pc : chains_) {
            for (int i = 0; i < m_; ++i) {
                Rat acc(0);
                for (int j = 0; j < n_; ++j)
                    if (!is_zero(wi[j])) acc += pc.reduced[i][j] * wi[j];
                b[i] = std::move(acc);
            }
            for (std::size_t ti = 0; ti < taus_.size(); ++ti) {
                const std::vector<int>& tau = taus_[ti];
                for (int x = 0; x < c_; ++x)
                    for (int y = 0; y < c_; ++y)
                        tail[x][y] = pc.reduced[pc.free_rows[x]][tau[y]];
                const Rat dt = rat_det(tail);
                if (is_zero(dt)) continue; // the summand is zero either way
                const int sdt = sign_of(dt);

                // The unique solution of  sum_X lambda_X B^t e_X -
                // sum_t mu_t B^t e_t - nu B^t w = 0  with nu pinned to 1 is
                // z = M_tau^{-1} B^t w with lambda = z_X, mu = -z_t.  The
                // open cone meets rowspace(A) iff lambda > 0 and mu > 0
                // componentwise; a zero component with all others correctly
                // signed is exactly an open/closed discrepancy (w on the
                // boundary of the flag cone); a wrongly signed component is
                // a clean miss.
                bool wrong = false;
                bool boundary = false;
                for (int t = 0; t < c_; ++t) {
                    std::vector<RatVec> rep = tail;
                    for (int x = 0; x < c_; ++x) rep[x][t] = b[pc.free_rows[x]];
                    const Rat num = rat_det(std::move(rep));
                    const int s = sign_of(num) * sdt; // sign of z_t, want < 0
                    if (s > 0) {
                        wrong = true;
                        break;
                    }
                    if (s == 0) boundary = true;
                    z[t] = num / dt;
                }
                for (int j = 0; j < k && !wrong; ++j) {
                    Rat acc = b[pc.pivot_row[j]];
                    for (int t = 0; t < c_; ++t)
                        if (!is_zero(z[t])) acc -= pc.reduced[pc.pivot_row[j]][tau[t]] * z[t];
                    const int s = sign_of(acc) * sign_of(pc.pivot[j]); // sign of lambda_j
                    if (s < 0) wrong = true;
                    if (s == 0) boundary = true;
                }
                if (wrong) continue;
                if (boundary)
                    throw GenericityError(
                        "initial_cycle: w meets the boundary of a flag cone", 1);
                // det M_tau = det_factor * dt is an integer, M_tau being an
                // integer matrix reached by determinant-preserving steps.
                const Rat dm = pc.det_factor * dt;
                totals[ti] += abs(dm.get_num());
            }
        }

        InitialCycle cycle;
        cycle.codim = c_;
        for (std::size_t ti = 0; ti < taus_.size(); ++ti)
            if (totals[ti] != 0) cycle.entries[taus_[ti]] = std::move(totals[ti]);
        return cycle;
    }

private:
    int n_;
    int m_;
    int c_ = 0;
    std::vector<std::vector<int>> taus_;
    std::vector<PreparedChain> chains_;
};

// A maximal cone prepared for the ray-shooting engine.  When the cone is
// simplicial — generators rays + lineality number exactly dim span — the
// system  w + sum beta_t e_t = sum lambda_i ray_i + sum mu_j lin_j  has at
// most one solution per tau, found by the same prepared elimination as in
// the chain engine: the generator block is eliminated once, the identity
// matrix rides along, and each tau costs one c x c solve.  The same tail
// determinant also yields the lattice multiplicity, since for the generator
// matrix G and a saturated span basis S,
//   |det(e_tau | S)| = |det(e_tau | G)| / [S-lattice : G-lattice].
// Cones with redundant generators keep the exact LP route.
struct PreparedCone {
    Int mult;                    // intrinsic multiplicity of the cone
    bool simplicial = false;
    // --- simplicial route ---
    std::vector<RatVec> reduced; // n x n: identity after the row operations
    std::vector<int> pivot_row;  // rows holding the generator pivots
    std::vector<int> free_rows;  // the c pivot-free rows, increasing
    std::vector<Rat> pivot;      // pivot values of the ray columns only
    int ray_count = 0;
    Rat det_factor;              // permutation sign times product of all pivots
    Int span_index;              // [saturated span lattice : generator lattice]
    // --- LP route ---
    const WeightedCone* cone = nullptr;
    IntMatrix span_basis;
};

class FanEngine {
public:
    FanEngine(const WeightedFan& fan, int c) : n_(fan.ambient), c_(c), fan_(fan) {
        if (c_ < 1 || c_ > n_ || fan.pure_dim != n_ - c_)
            throw Error(Errc::non_pure_fan,
                        "initial_cycle_of_fan: fan must be pure of dimension n - c");
        taus_ = subsets_of_size(n_, c_);
        const int span_dim = n_ - c_;

        for (const WeightedCone& cone : fan.cones) {
            std::vector<IntVec> gens = cone.rays;
            gens.insert(gens.end(), fan.lineality.begin(), fan.lineality.end());
            IntMatrix gmat = from_columns(n_, gens);
            // purity is re-checked: a fan assembled by hand may disagree
            // with its declared pure_dim
            IntMatrix sat = saturate_columns(gmat);
            if (sat.cols() != span_dim)
                throw Error(Errc::non_pure_fan,
                            "initial_cycle_of_fan: cone span has dimension " +
                                std::to_string(sat.cols()) + ", expected " +
                                std::to_string(span_dim));

            PreparedCone pc;
            pc.mult = cone.mult;
            pc.ray_count = static_cast<int>(cone.rays.size());
            if (static_cast<int>(gens.size()) == span_dim) {
                pc.simplicial = true;
                pc.span_index = span_dim == 0 ? Int(1) : lattice_index(gmat, sat);
                pc.reduced.assign(n_, RatVec(n_, Rat(0)));
                for (int i = 0; i < n_; ++i) pc.reduced[i][i] = Rat(1);
                std::vector<RatVec> block(n_, RatVec(span_dim, Rat(0)));
                for (int i = 0; i < n_; ++i)
                    for (int j = 0; j < span_dim; ++j) block[i][j] = Rat(gmat.at(i, j));
                std::vector<char> used(n_, 0);
                for (int j = 0; j < span_dim; ++j) {
                    int r = -1;
                    for (int i = 0; i < n_; ++i)
                        if (!used[i] && !is_zero(block[i][j])) {
                            r = i;
                            break;
                        }
                    // generators are independent, so a pivot always exists
                    used[r] = 1;
                    pc.pivot_row.push_back(r);
                    pc.pivot.push_back(block[r][j]);
                    for (int i = 0; i < n_; ++i) {
                        if (i == r || is_zero(block[i][j])) continue;
                        const Rat f = block[i][j] / block[r][j];
                        for (int l = j; l < span_dim; ++l) block[i][l] -= f * block[r][l];
                        for (int l = 0; l < n_; ++l) pc.reduced[i][l] -= f * pc.reduced[r][l];
                    }
                }
                for (int i = 0; i < n_; ++i)
                    if (!used[i]) pc.free_rows.push_back(i);
                std::vector<int> seq = pc.pivot_row;
                seq.insert(seq.end(), pc.free_rows.begin(), pc.free_rows.end());
                int inversions = 0;
                for (std::size_t x = 0; x < seq.size(); ++x)
                    for (std::size_t y = x + 1; y < seq.size(); ++y)
                        if (seq[x] > seq[y]) ++inversions;
                pc.det_factor = Rat(inversions % 2 == 0 ? 1 : -1);
                for (const Rat& p : pc.pivot) pc.det_factor *= p;
            } else {
                pc.cone = &cone;
                pc.span_basis = std::move(sat);
            }
            cones_.push_back(std::move(pc));
        }
    }

    InitialCycle cycle(const RatVec& w) const {
        if (static_cast<int>(w.size()) != n_)
            throw Error(Errc::dimension_mismatch,
                        "initial_cycle_of_fan: w must match the ambient dimension");

        std::vector<Int> totals(taus_.size(), Int(0));
        std::vector<RatVec> tail(c_, RatVec(c_));
        RatVec beta(c_), b(n_);
        for (const PreparedCone& pc : cones_) {
            if (!pc.simplicial) {
                lp_route(pc, w, totals);
                continue;
            }
            for (int i = 0; i < n_; ++i) {
                Rat acc(0);
                for (int j = 0; j < n_; ++j)
                    if (!is_zero(w[j])) acc += pc.reduced[i][j] * w[j];
                b[i] = std::move(acc);
            }
            for (std::size_t ti = 0; ti < taus_.size(); ++ti) {
                const std::vector<int>& tau = taus_[ti];
                // rows without a generator pivot read  -sum_t R[i][t] beta_t = b_i
                for (int x = 0; x < c_; ++x)
                    for (int y = 0; y < c_; ++y)
                        tail[x][y] = pc.reduced[pc.free_rows[x]][tau[y]];
                const Rat dt = rat_det(tail);
                if (is_zero(dt)) continue; // zero lattice multiplicity anyway
                const int sdt = sign_of(dt);

                bool wrong = false;
                bool boundary = false;
                for (int t = 0; t < c_; ++t) {
                    std::vector<RatVec> rep = tail;
                    for (int x = 0; x < c_; ++x) rep[x][t] = -b[pc.free_rows[x]];
                    const Rat num = rat_det(std::move(rep));
                    const int s = sign_of(num) * sdt; // sign of beta_t, want > 0
                    if (s < 0) {
                        wrong = true;
                        break;
                    }
                    if (s == 0) boundary = true;
                    beta[t] = num / dt;
                }
                // ray coefficients, want > 0; lineality coefficients are free
                for (int j = 0; j < pc.ray_count && !wrong; ++j) {
                    Rat acc = b[pc.pivot_row[j]];
                    for (int t = 0; t < c_; ++t)
                        if (!is_zero(beta[t]))
                            acc += pc.reduced[pc.pivot_row[j]][tau[t]] * beta[t];
                    const int s = sign_of(acc) * sign_of(pc.pivot[j]);
                    if (s < 0) wrong = true;
                    if (s == 0) boundary = true;
                }
                if (wrong) continue;
                if (boundary)
                    throw GenericityError(
                        "initial_cycle_of_fan: ray from w touches a cone boundary", 1);
                // |det(e_tau | saturated span)| = |det_factor * dt| / span_index
                const Rat lat = Rat(abs(pc.det_factor * dt)) / Rat(pc.span_index);
                totals[ti] += pc.mult * lat.get_num();
            }
        }

        InitialCycle cycle;
        cycle.codim = c_;
        for (std::size_t ti = 0; ti < taus_.size(); ++ti)
            if (totals[ti] != 0) cycle.entries[taus_[ti]] = std::move(totals[ti]);
        return cycle;
    }

private:
    void lp_route(const PreparedCone& pc, const RatVec& w, std::vector<Int>& totals) const {
        for (std::size_t ti = 0; ti < taus_.size(); ++ti) {
            std::vector<IntVec> dirs;
            dirs.reserve(taus_[ti].size());
            for (int t : taus_[ti]) dirs.push_back(unit_vector(n_, t));
            switch (strict_ray_hits_cone(w, pc.cone->rays, fan_.lineality, dirs)) {
            case RayHit::miss:
                continue;
            case RayHit::boundary:
                throw GenericityError(
                    "initial_cycle_of_fan: ray from w touches a cone boundary", 1);
            case RayHit::hit:
                totals[ti] += pc.mult * det_abs(hcat(from_columns(n_, dirs), pc.span_basis));
                break;
            }
        }
    }

    int n_;
    int c_;
    const WeightedFan& fan_;
    std::vector<std::vector<int>> taus_;
    std::vector<PreparedCone> cones_;
};

} // namespace

Int InitialCycle::total_degree() const {
    Int sum = 0;
    for (const auto& [tau, mult] : entries) sum += mult;
    return sum;
}

int codimension(const Configuration& a) {
    FlatLattice lattice = FlatLattice::build(RowMatroid(a.gale()));
    return codim_with(a, lattice);
}

bool is_defective(const Configuration& a) { return codimension(a) > 1; }

InitialCycle initial_cycle(const Configuration& a, const RatVec& w) {
    return ChainEngine(a).cycle(w);
}

IntVec initial_monomial(const Configuration& a, const RatVec& w) {
    InitialCycle cycle = initial_cycle(a, w);
    if (cycle.codim != 1)
        throw Error(Errc::defective,
                    "initial_monomial: dual variety has codimension " +
                        std::to_string(cycle.codim) + ", not a hypersurface");
    IntVec u(a.n(), Int(0));
    for (const auto& [tau, mult] : cycle.entries) u[tau[0]] = mult;
    return u;
}

Int degree(const Configuration& a, std::uint64_t seed, int budget) {
    const ChainEngine engine(a); // chains are shared across the samples
    return degree_by_sampling(a.n(), seed, budget, "degree",
                              [&](const RatVec& w) { return engine.cycle(w); });
}

InitialCycle initial_cycle_of_fan(const WeightedFan& fan, const RatVec& w, int c) {
    return FanEngine(fan, c).cycle(w);
}

Int degree_of_fan(const WeightedFan& fan, int c, std::uint64_t seed, int budget) {
    const FanEngine engine(fan, c); // cone eliminations are shared across samples
    return degree_by_sampling(fan.ambient, seed, budget, "degree_of_fan",
                              [&](const RatVec& w) { return engine.cycle(w); });
}

} // namespace tropdisc
