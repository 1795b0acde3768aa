#include "tropdisc/lp.hpp"

#include <algorithm>

namespace tropdisc {

namespace {

// Dense simplex tableau in canonical form. Basis columns are kept as exact
// identity columns by the pivoting, so reduced costs can be read directly.
class Tableau {
public:
    // a: m×n, b: m (made nonnegative by row flips)
    Tableau(const std::vector<RatVec>& a, const RatVec& b) : m_(a.size()), n_(a.empty() ? 0 : a[0].size()) {
        t_.assign(m_, RatVec(n_ + 1, Rat(0)));
        for (size_t i = 0; i < m_; ++i) {
            bool flip = b[i] < 0;
            for (size_t j = 0; j < n_; ++j) t_[i][j] = flip ? -a[i][j] : a[i][j];
            t_[i][n_] = flip ? -b[i] : b[i];
        }
    }

    size_t rows() const { return m_; }
    size_t cols() const { return n_; } // variable count, rhs excluded

    // append identity columns (artificials), returns first new index
    size_t add_identity_block() {
        size_t first = n_;
        for (size_t i = 0; i < m_; ++i) {
            for (size_t r = 0; r < m_; ++r) t_[r].insert(t_[r].end() - 1, Rat(r == i ? 1 : 0));
        }
        n_ += m_;
        return first;
    }

    Rat& at(size_t i, size_t j) { return t_[i][j]; }
    Rat& rhs(size_t i) { return t_[i][n_]; }

    void pivot(size_t pr, size_t pc) {
        Rat inv = 1 / t_[pr][pc];
        for (size_t j = 0; j <= n_; ++j) t_[pr][j] *= inv;
        for (size_t i = 0; i < m_; ++i) {
            if (i == pr || t_[i][pc] == 0) continue;
            Rat f = t_[i][pc];
            for (size_t j = 0; j <= n_; ++j) t_[i][j] -= f * t_[pr][j];
        }
    }

    // minimize cost over current feasible basis with Bland's rule.
    // `allowed` masks columns eligible to enter. Returns false if unbounded.
    bool run(const RatVec& cost, std::vector<size_t>& basis, const std::vector<bool>& allowed,
             Rat& objective) {
        while (true) {
            // reduced cost of column j: c_j - sum_i c_basis(i) * t(i,j)
            size_t enter = n_;
            for (size_t j = 0; j < n_; ++j) {
                if (!allowed[j]) continue;
                bool basic = false;
                for (size_t i = 0; i < m_; ++i)
                    if (basis[i] == j) { basic = true; break; }
                if (basic) continue;
                Rat red = cost[j];
                for (size_t i = 0; i < m_; ++i)
                    if (cost[basis[i]] != 0) red -= cost[basis[i]] * t_[i][j];
                if (red < 0) { enter = j; break; } // Bland: first improving index
            }
            if (enter == n_) break; // optimal
            size_t leave = m_;
            Rat best;
            for (size_t i = 0; i < m_; ++i) {
                if (t_[i][enter] <= 0) continue;
                Rat ratio = rhs(i) / t_[i][enter];
                if (leave == m_ || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i; best = ratio;
                }
            }
            if (leave == m_) return false; // unbounded
            pivot(leave, enter);
            basis[leave] = enter;
        }
        objective = 0;
        for (size_t i = 0; i < m_; ++i)
            if (cost[basis[i]] != 0) objective += cost[basis[i]] * rhs(i);
        return true;
    }

private:
    size_t m_, n_;
    std::vector<RatVec> t_;
};

} // namespace

LpResult solve_lp_min(const std::vector<RatVec>& a, const RatVec& b, const RatVec& c) {
    size_t m = a.size();
    size_t n = m == 0 ? c.size() : a[0].size();
    if (b.size() != m || c.size() != n)
        throw Error(Errc::dimension_mismatch, "solve_lp_min: inconsistent shapes");
    if (m == 0) {
        // no constraints: x = 0 is optimal unless some cost is negative
        for (size_t j = 0; j < n; ++j)
            if (c[j] < 0) return {LpStatus::unbounded, Rat(0), {}};
        return {LpStatus::optimal, Rat(0), RatVec(n, Rat(0))};
    }

    Tableau t(a, b);
    size_t art = t.add_identity_block();
    size_t total = t.cols();

    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) basis[i] = art + i;

    RatVec phase1_cost(total, Rat(0));
    for (size_t j = art; j < total; ++j) phase1_cost[j] = 1;
    std::vector<bool> allow_all(total, true);
    Rat obj;
    t.run(phase1_cost, basis, allow_all, obj); // bounded below by 0
    if (obj != 0) return {LpStatus::infeasible, obj, {}};

    // drive leftover artificials out of the basis where possible
    for (size_t i = 0; i < m; ++i) {
        if (basis[i] < art) continue;
        size_t pc = total;
        for (size_t j = 0; j < art; ++j)
            if (t.at(i, j) != 0) { pc = j; break; }
        if (pc == total) continue; // redundant row; harmless to keep
        t.pivot(i, pc);
        basis[i] = pc;
    }

    std::vector<bool> allowed(total, false);
    for (size_t j = 0; j < art; ++j) allowed[j] = true;
    RatVec cost(total, Rat(0));
    for (size_t j = 0; j < n; ++j) cost[j] = c[j];
    if (!t.run(cost, basis, allowed, obj)) return {LpStatus::unbounded, Rat(0), {}};

    RatVec x(n, Rat(0));
    for (size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = t.rhs(i);
    return {LpStatus::optimal, obj, x};
}

bool lp_feasible(const std::vector<RatVec>& a, const RatVec& b) {
    size_t n = a.empty() ? 0 : a[0].size();
    if (a.empty()) return true;
    LpResult r = solve_lp_min(a, b, RatVec(n, Rat(0)));
    return r.status == LpStatus::optimal;
}

namespace {

// Build the equality system  G λ − S y = rhs  with y free (split y = y+ − y−).
// Columns: |gens| lambdas, then subspace columns twice.
void build_cone_system(const std::vector<IntVec>& gens, const IntMatrix& subspace,
                       std::vector<RatVec>& a, size_t& nlam, size_t& ncols) {
    size_t n = gens.empty() ? subspace.rows() : gens[0].size();
    for (const auto& g : gens)
        if (g.size() != n)
            throw Error(Errc::dimension_mismatch, "cone query: generator length mismatch");
    if (subspace.rows() != static_cast<int>(n) && subspace.cols() != 0)
        throw Error(Errc::dimension_mismatch, "cone query: subspace ambient mismatch");
    nlam = gens.size();
    size_t k = subspace.cols();
    ncols = nlam + 2 * k;
    a.assign(n, RatVec(ncols, Rat(0)));
    for (size_t j = 0; j < nlam; ++j)
        for (size_t i = 0; i < n; ++i) a[i][j] = Rat(gens[j][i]);
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < n; ++i) {
            a[i][nlam + j] = Rat(-subspace.at(static_cast<int>(i), static_cast<int>(j)));
            a[i][nlam + k + j] = Rat(subspace.at(static_cast<int>(i), static_cast<int>(j)));
        }
}

} // namespace

bool strict_cone_meets_subspace(const std::vector<IntVec>& gens, const IntMatrix& subspace) {
    if (gens.empty()) return false;
    std::vector<RatVec> a;
    size_t nlam = 0, ncols = 0;
    build_cone_system(gens, subspace, a, nlam, ncols);
    size_t n = a.size();
    // substitute lambda = 1 + lambda', lambda' >= 0:  G λ' − S y = −G·1
    RatVec b(n, Rat(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < nlam; ++j) b[i] -= a[i][j];
    return lp_feasible(a, b);
}

bool closed_cone_meets_subspace_pinned(const std::vector<IntVec>& gens, const IntMatrix& subspace) {
    if (gens.empty()) return false;
    std::vector<RatVec> a;
    size_t nlam = 0, ncols = 0;
    build_cone_system(gens, subspace, a, nlam, ncols);
    size_t n = a.size();
    // pin the last generator's coefficient to exactly 1, others >= 0
    RatVec b(n, Rat(0));
    for (size_t i = 0; i < n; ++i) b[i] = -a[i][nlam - 1];
    std::vector<RatVec> a2(n, RatVec(ncols - 1, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j + 1 < nlam; ++j) a2[i][j] = a[i][j];
        for (size_t j = nlam; j < ncols; ++j) a2[i][j - 1] = a[i][j];
    }
    return lp_feasible(a2, b);
}

RayHit strict_ray_hits_cone(const RatVec& w,
                            const std::vector<IntVec>& rays,
                            const std::vector<IntVec>& lineality,
                            const std::vector<IntVec>& dirs) {
    size_t n = w.size();
    for (const auto& v : rays)
        if (v.size() != n) throw Error(Errc::dimension_mismatch, "ray query: ray length mismatch");
    for (const auto& v : lineality)
        if (v.size() != n) throw Error(Errc::dimension_mismatch, "ray query: lineality length mismatch");
    for (const auto& v : dirs)
        if (v.size() != n) throw Error(Errc::dimension_mismatch, "ray query: direction length mismatch");

    // Unknowns, all >= 0:
    //   eps, s_j (beta_j = eps + s_j), t_i (lambda_i = eps + t_i), y+, y-, u
    // Equations:
    //   w + Σ beta_j d_j = Σ lambda_i r_i + L y      (n rows)
    //   eps + u = 1                                  (bounds eps)
    // maximize eps; eps* > 0 ⟺ strict hit, eps* = 0 ⟺ boundary contact only.
    size_t nd = dirs.size(), nr = rays.size(), nl = lineality.size();
    size_t cols = 1 + nd + nr + 2 * nl + 1;
    std::vector<RatVec> a(n + 1, RatVec(cols, Rat(0)));
    RatVec b(n + 1, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        Rat eps_coeff(0);
        for (size_t j = 0; j < nd; ++j) {
            a[i][1 + j] = Rat(dirs[j][i]);
            eps_coeff += Rat(dirs[j][i]);
        }
        for (size_t j = 0; j < nr; ++j) {
            a[i][1 + nd + j] = Rat(-rays[j][i]);
            eps_coeff -= Rat(rays[j][i]);
        }
        for (size_t j = 0; j < nl; ++j) {
            a[i][1 + nd + nr + j] = Rat(-lineality[j][i]);
            a[i][1 + nd + nr + nl + j] = Rat(lineality[j][i]);
        }
        a[i][0] = eps_coeff;
        b[i] = -w[i];
    }
    a[n][0] = 1;
    a[n][cols - 1] = 1;
    b[n] = 1;

    RatVec c(cols, Rat(0));
    c[0] = -1; // maximize eps
    LpResult r = solve_lp_min(a, b, c);
    if (r.status == LpStatus::infeasible) return RayHit::miss;
    // eps bounded by 1, so unbounded cannot occur
    return (r.objective < 0) ? RayHit::hit : RayHit::boundary;
}

} // namespace tropdisc
