#pragma once
// Test-only oracles, kept deliberately naive and independent of the library's
// production algorithms so they can serve as cross-checks.

#include "tropdisc/linalg.hpp"
#include "tropdisc/lp.hpp"
#include "tropdisc/matrix.hpp"
#include "tropdisc/numeric.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace oracle {

using tropdisc::Int;
using tropdisc::IntMatrix;
using tropdisc::IntVec;
using tropdisc::Rat;
using tropdisc::RatVec;

// A linear constraint sum coef*x (rel) 0 with rel in {>=, >} over rationals.
struct Constraint {
    RatVec coef;
    bool strict = false; // strict: > 0, else >= 0
};

// Canonical form for dedup: scale so those entries form a primitive integer
// vector with positive leading nonzero kept as-is (direction matters).
inline std::vector<std::pair<std::vector<Rat>, bool>> canon_key(const std::vector<Constraint>& cons) {
    std::vector<std::pair<std::vector<Rat>, bool>> keys;
    keys.reserve(cons.size());
    for (const auto& c : cons) {
        Rat scale(0);
        for (const auto& q : c.coef)
            if (!tropdisc::is_zero(q)) { scale = abs(q); break; }
        std::vector<Rat> k = c.coef;
        if (!tropdisc::is_zero(scale))
            for (auto& q : k) { q /= scale; q.canonicalize(); }
        keys.emplace_back(std::move(k), c.strict);
    }
    return keys;
}

// Fourier–Motzkin elimination deciding whether a system of homogeneous-ish
// constraints (affine part folded into a trailing constant column) is
// satisfiable. Constraints have the form coef[0..k-1]·x + coef[k] (rel) 0.
// Exponential; only for small variable counts in tests. Dedup between rounds
// keeps the blowup in check at test scale.
inline bool fm_feasible(std::vector<Constraint> cons, int nvars) {
    for (int elim = 0; elim < nvars; ++elim) {
        std::vector<Constraint> pos, neg, zero;
        for (auto& c : cons) {
            int s = tropdisc::sign_of(c.coef[0]);
            if (s > 0) pos.push_back(c);
            else if (s < 0) neg.push_back(c);
            else {
                c.coef.erase(c.coef.begin());
                zero.push_back(c);
            }
        }
        std::vector<Constraint> next = std::move(zero);
        for (const auto& p : pos)
            for (const auto& n : neg) {
                // p: a x + P(x') >= 0 (a>0), n: b x + N(x') >= 0 (b<0);
                // eliminate x: multiply p by (-b) > 0 and n by a > 0, add.
                Constraint c;
                c.strict = p.strict || n.strict;
                size_t len = p.coef.size();
                c.coef.resize(len - 1);
                Rat a = p.coef[0], b = n.coef[0];
                for (size_t i = 1; i < len; ++i) {
                    c.coef[i - 1] = p.coef[i] * (-b) + n.coef[i] * a;
                    c.coef[i - 1].canonicalize();
                }
                next.push_back(std::move(c));
            }
        // dedup (a strict constraint dominates its weak twin)
        auto keys = canon_key(next);
        std::vector<Constraint> kept;
        for (size_t i = 0; i < next.size(); ++i) {
            bool dup = false;
            for (size_t j = 0; j < i && !dup; ++j)
                if (keys[j].first == keys[i].first &&
                    (keys[j].second || !keys[i].second))
                    dup = true;
            if (!dup) kept.push_back(std::move(next[i]));
        }
        cons = std::move(kept);
    }
    // all variables eliminated: constraints are "const (rel) 0"
    for (const auto& c : cons) {
        int s = tropdisc::sign_of(c.coef[0]);
        if (s < 0) return false;
        if (s == 0 && c.strict) return false;
    }
    return true;
}

// Basis of the nullspace of m (rows = constraints) over Q via plain
// row-reduced echelon form; independent of the library's integer kernels.
inline std::vector<RatVec> rref_nullspace(std::vector<RatVec> m, int ncols) {
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < ncols && r < static_cast<int>(m.size()); ++c) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(m.size()); ++i)
            if (!tropdisc::is_zero(m[i][c])) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        Rat d = m[r][c];
        for (auto& x : m[r]) { x /= d; x.canonicalize(); }
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
            if (i == r || tropdisc::is_zero(m[i][c])) continue;
            Rat f = m[i][c];
            for (int j = 0; j < ncols; ++j) {
                m[i][j] -= f * m[r][j];
                m[i][j].canonicalize();
            }
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<RatVec> basis;
    for (int c = 0; c < ncols; ++c) {
        if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end()) continue;
        RatVec v(ncols, Rat(0));
        v[c] = Rat(1);
        for (int i = 0; i < r; ++i) v[pivot_col[i]] = -m[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Oracle for strict_cone_meets_subspace: exists lambda_j > 0 with
// sum lambda_j g_j in span(S). Eliminate the subspace analytically: compute a
// basis P of the orthogonal complement of span(S), then require
// P·(G lambda) = 0 with lambda > 0, decided by FM over the lambda alone.
inline bool strict_cone_meets_subspace_fm(const std::vector<IntVec>& gens,
                                          const IntMatrix& subspace) {
    int n = static_cast<int>(gens.front().size());
    int k = static_cast<int>(gens.size());
    // rows = subspace columns transposed; nullspace = orthogonal complement
    std::vector<RatVec> st;
    for (int j = 0; j < subspace.cols(); ++j) {
        RatVec row(n);
        for (int i = 0; i < n; ++i) row[i] = Rat(subspace.at(i, j));
        st.push_back(std::move(row));
    }
    std::vector<RatVec> complement = rref_nullspace(std::move(st), n);

    std::vector<Constraint> cons;
    for (const auto& p : complement) {
        Constraint eq;
        eq.coef.assign(k + 1, Rat(0));
        for (int j = 0; j < k; ++j) {
            Rat dot(0);
            for (int i = 0; i < n; ++i) dot += p[i] * Rat(gens[j][i]);
            dot.canonicalize();
            eq.coef[j] = dot;
        }
        Constraint ge = eq;
        for (auto& q : ge.coef) q = -q;
        cons.push_back(std::move(eq));
        cons.push_back(std::move(ge));
    }
    for (int j = 0; j < k; ++j) {
        Constraint c;
        c.coef.assign(k + 1, Rat(0));
        c.coef[j] = Rat(1);
        c.strict = true;
        cons.push_back(std::move(c));
    }
    return fm_feasible(std::move(cons), k);
}

// Naive determinant by cofactor expansion, for cross-checking Bareiss.
inline Int det_cofactor(const IntMatrix& m) {
    int n = m.rows();
    if (n == 0) return Int(1);
    if (n == 1) return m.at(0, 0);
    Int acc = 0;
    for (int j = 0; j < n; ++j) {
        if (tropdisc::is_zero(m.at(0, j))) continue;
        IntMatrix sub(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Int term = m.at(0, j) * det_cofactor(sub);
        if (j % 2 == 0) acc += term;
        else acc -= term;
    }
    return acc;
}

} // namespace oracle
