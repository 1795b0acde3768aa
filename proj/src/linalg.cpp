#include "tropdisc/linalg.hpp"

#include <algorithm>

namespace tropdisc {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::invalid_input: return "invalid_input";
        case Errc::rank_deficient: return "rank_deficient";
        case Errc::not_square: return "not_square";
        case Errc::span_mismatch: return "span_mismatch";
        case Errc::dimension_mismatch: return "dimension_mismatch";
        case Errc::pyramid_input: return "pyramid";
        case Errc::lattice_too_large: return "lattice_too_large";
        case Errc::defective: return "defective";
        case Errc::genericity_failure: return "genericity_failure";
        case Errc::kernel_not_one_dimensional: return "kernel_not_one_dimensional";
        case Errc::not_essential: return "not_essential";
        case Errc::too_few_blocks: return "too_few_blocks";
        case Errc::dimension_too_large: return "dimension_too_large";
        case Errc::non_pure_fan: return "non_pure_fan";
    }
    return "unknown";
}

int rank_of(const IntMatrix& m) {
    // fraction-free row elimination with column pivot search
    IntMatrix w = m;
    int rows = w.rows(), cols = w.cols();
    int r = 0;
    Int prev = 1;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (w.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(w.row[piv], w.row[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                Int t = w.at(i, j) * w.at(r, c) - w.at(i, c) * w.at(r, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                w.at(i, j) = t;
            }
            w.at(i, c) = 0;
        }
        prev = w.at(r, c);
        ++r;
    }
    return r;
}

Int det_signed(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw Error(Errc::not_square, "determinant of a non-square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    IntMatrix w = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (w.at(i, k) != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != k) { std::swap(w.row[piv], w.row[k]); sign = -sign; }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                w.at(i, j) = t;
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

Int det_abs(const IntMatrix& m) {
    Int d = det_signed(m);
    return abs(d);
}

namespace {

// Column-style echelon reduction by unimodular column operations.
// On return, work.at(r, pivcol[r]) is the pivot of row r; transform U tracks
// all operations, so a * U == reduced work. Columns of U beyond `rank`
// span ker(a) ∩ Z^n (saturated, U unimodular).
struct ColumnEchelon {
    IntMatrix reduced;
    IntMatrix u;
    int rank = 0;
};

ColumnEchelon column_echelon(const IntMatrix& a) {
    ColumnEchelon ce;
    ce.reduced = a;
    int rows = a.rows(), cols = a.cols();
    ce.u = IntMatrix::identity(cols);
    IntMatrix& w = ce.reduced;
    IntMatrix& u = ce.u;

    auto col_addmul = [&](int dst, int src, const Int& q) {
        // column dst -= q * column src
        for (int i = 0; i < rows; ++i) w.at(i, dst) -= q * w.at(i, src);
        for (int i = 0; i < cols; ++i) u.at(i, dst) -= q * u.at(i, src);
    };
    auto col_swap = [&](int x, int y) {
        if (x == y) return;
        for (int i = 0; i < rows; ++i) std::swap(w.at(i, x), w.at(i, y));
        for (int i = 0; i < cols; ++i) std::swap(u.at(i, x), u.at(i, y));
    };
    auto col_negate = [&](int x) {
        for (int i = 0; i < rows; ++i) w.at(i, x) = -w.at(i, x);
        for (int i = 0; i < cols; ++i) u.at(i, x) = -u.at(i, x);
    };

    int lead = 0;
    for (int r = 0; r < rows && lead < cols; ++r) {
        // Euclidean reduction across columns lead..cols-1 on row r
        while (true) {
            int nz = -1;
            int count = 0;
            for (int j = lead; j < cols; ++j) {
                if (w.at(r, j) != 0) {
                    ++count;
                    if (nz < 0 || mpz_cmpabs(w.at(r, j).get_mpz_t(), w.at(r, nz).get_mpz_t()) < 0) nz = j;
                }
            }
            if (count == 0) break; // row r has no pivot among remaining columns
            if (count == 1) {
                col_swap(lead, nz);
                if (w.at(r, lead) < 0) col_negate(lead);
                ++lead;
                break;
            }
            // reduce every other column by the minimal one (floor quotients)
            for (int j = lead; j < cols; ++j) {
                if (j == nz || w.at(r, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w.at(r, j).get_mpz_t(), w.at(r, nz).get_mpz_t());
                if (q != 0) col_addmul(j, nz, q);
            }
        }
    }
    ce.rank = lead;
    return ce;
}

} // namespace

IntMatrix kernel_basis_raw(const IntMatrix& a) {
    ColumnEchelon ce = column_echelon(a);
    std::vector<int> idx;
    for (int j = ce.rank; j < a.cols(); ++j) idx.push_back(j);
    return ce.u.select_columns(idx);
}

IntMatrix row_hnf(const IntMatrix& m) {
    // row-style HNF via integer row operations
    IntMatrix w = m;
    int rows = w.rows(), cols = w.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // Euclidean gcd elimination within column c, rows r..end
        while (true) {
            int best = -1;
            int count = 0;
            for (int i = r; i < rows; ++i) {
                if (w.at(i, c) != 0) {
                    ++count;
                    if (best < 0 || mpz_cmpabs(w.at(i, c).get_mpz_t(), w.at(best, c).get_mpz_t()) < 0)
                        best = i;
                }
            }
            if (count == 0) { best = -1; break; }
            if (count == 1) {
                std::swap(w.row[best], w.row[r]);
                break;
            }
            for (int i = r; i < rows; ++i) {
                if (i == best || w.at(i, c) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w.at(i, c).get_mpz_t(), w.at(best, c).get_mpz_t());
                if (q != 0)
                    for (int j = 0; j < cols; ++j) w.at(i, j) -= q * w.at(best, j);
            }
        }
        if (w.at(r, c) == 0) continue;
        if (w.at(r, c) < 0)
            for (int j = 0; j < cols; ++j) w.at(r, j) = -w.at(r, j);
        // reduce the entries above the pivot into [0, pivot)
        for (int i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), w.at(i, c).get_mpz_t(), w.at(r, c).get_mpz_t());
            if (q != 0)
                for (int j = 0; j < cols; ++j) w.at(i, j) -= q * w.at(r, j);
        }
        ++r;
    }
    w.row.resize(r);
    return w;
}

IntMatrix integer_kernel_basis(const IntMatrix& a) {
    if (rank_of(a) < a.rows())
        throw Error(Errc::rank_deficient, "integer_kernel_basis: matrix lacks full row rank");
    IntMatrix k = kernel_basis_raw(a);
    // canonicalize: the transpose of the result is the row HNF of the lattice
    IntMatrix h = row_hnf(k.transpose());
    return h.transpose();
}

std::vector<Int> snf_invariant_factors(const IntMatrix& m) {
    IntMatrix w = m;
    int rows = w.rows(), cols = w.cols();
    int t = std::min(rows, cols);
    std::vector<Int> inv(t, 0);

    int corner = 0;
    while (corner < t) {
        // locate a nonzero entry of minimal absolute value in the working block
        int pi = -1, pj = -1;
        for (int i = corner; i < rows; ++i)
            for (int j = corner; j < cols; ++j)
                if (w.at(i, j) != 0 &&
                    (pi < 0 || mpz_cmpabs(w.at(i, j).get_mpz_t(), w.at(pi, pj).get_mpz_t()) < 0)) {
                    pi = i; pj = j;
                }
        if (pi < 0) break; // rest of the block is zero
        std::swap(w.row[pi], w.row[corner]);
        for (int i = 0; i < rows; ++i) std::swap(w.at(i, pj), w.at(i, corner));

        bool clean = true;
        for (int i = corner + 1; i < rows; ++i) {
            if (w.at(i, corner) == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), w.at(i, corner).get_mpz_t(), w.at(corner, corner).get_mpz_t());
            for (int j = corner; j < cols; ++j) w.at(i, j) -= q * w.at(corner, j);
            if (w.at(i, corner) != 0) clean = false;
        }
        for (int j = corner + 1; j < cols; ++j) {
            if (w.at(corner, j) == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), w.at(corner, j).get_mpz_t(), w.at(corner, corner).get_mpz_t());
            for (int i = corner; i < rows; ++i) w.at(i, j) -= q * w.at(i, corner);
            if (w.at(corner, j) != 0) clean = false;
        }
        if (!clean) continue; // new, smaller residues appeared: repeat

        // divisibility: the pivot must divide the whole remaining block
        bool divides = true;
        for (int i = corner + 1; i < rows && divides; ++i)
            for (int j = corner + 1; j < cols && divides; ++j)
                if (w.at(i, j) % w.at(corner, corner) != 0) {
                    // fold the offending row into the pivot row and restart
                    for (int jj = corner; jj < cols; ++jj) w.at(corner, jj) += w.at(i, jj);
                    divides = false;
                }
        if (!divides) continue;

        if (w.at(corner, corner) < 0)
            for (int j = corner; j < cols; ++j) w.at(corner, j) = -w.at(corner, j);
        inv[corner] = w.at(corner, corner);
        ++corner;
    }
    return inv;
}

IntMatrix saturate_columns(const IntMatrix& m) {
    int n = m.rows();
    int r = rank_of(m);
    if (r == n) return IntMatrix::identity(n);
    if (r == 0) return IntMatrix(n, 0);
    // span(m) ∩ Z^n = Z-kernel of (kernel of m^t)^t; both kernels saturated
    IntMatrix c = kernel_basis_raw(m.transpose()); // n×(n−r), columns ⊥ span(m)
    IntMatrix s = kernel_basis_raw(c.transpose()); // n×r
    return s;
}

Int lattice_index(const IntMatrix& sub, const IntMatrix& sup) {
    if (sub.rows() != sup.rows())
        throw Error(Errc::dimension_mismatch, "lattice_index: ambient dimensions differ");
    int r1 = rank_of(sub), r2 = rank_of(sup);
    if (r1 != r2 || rank_of(hcat(sub, sup)) != r1)
        throw Error(Errc::span_mismatch, "lattice_index: rational spans differ");
    int k = r1;
    if (k == 0) return 1;
    // reduce both lattices to bases via HNF of the transposes
    IntMatrix bsub = row_hnf(sub.transpose()); // k×n rows = basis of L(sub)
    IntMatrix bsup = row_hnf(sup.transpose());
    // express each sub basis row in sup basis coordinates; must be integral
    IntMatrix supt = bsup.transpose(); // n×k
    IntMatrix x(k, k);
    for (int i = 0; i < k; ++i) {
        RatVec rhs(bsub.cols());
        for (int j = 0; j < bsub.cols(); ++j) rhs[j] = Rat(bsub.at(i, j));
        auto sol = solve_rational(supt, rhs);
        if (!sol)
            throw Error(Errc::span_mismatch, "lattice_index: sub vector outside sup span");
        for (int j = 0; j < k; ++j) {
            if ((*sol)[j].get_den() != 1)
                throw Error(Errc::span_mismatch, "lattice_index: sub lattice not inside sup lattice");
            x.at(i, j) = (*sol)[j].get_num();
        }
    }
    return det_abs(x);
}

std::optional<RatVec> solve_rational(const IntMatrix& a, const RatVec& b) {
    int rows = a.rows(), cols = a.cols();
    if (static_cast<int>(b.size()) != rows)
        throw Error(Errc::dimension_mismatch, "solve_rational: rhs length mismatch");
    // rational Gaussian elimination on [a | b]
    std::vector<RatVec> w(rows, RatVec(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) w[i][j] = Rat(a.at(i, j));
        w[i][cols] = b[i];
    }
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (w[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(w[piv], w[r]);
        Rat inv = 1 / w[r][c];
        for (int j = c; j <= cols; ++j) w[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || w[i][c] == 0) continue;
            Rat f = w[i][c];
            for (int j = c; j <= cols; ++j) w[i][j] -= f * w[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (w[i][cols] != 0) return std::nullopt;
    RatVec x(cols, Rat(0));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = w[i][cols];
    return x;
}

IntMatrix rational_nullspace(const IntMatrix& a) {
    // saturated integer kernel doubles as an integer-scaled rational nullspace
    return kernel_basis_raw(a);
}

Adjugate adjugate(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw Error(Errc::not_square, "adjugate of a non-square matrix");
    int n = m.rows();
    Adjugate out;
    out.det = det_signed(m);
    out.adj = IntMatrix(n, n);
    if (n == 0) return out;
    if (out.det == 0) {
        // cofactor fallback; only tiny matrices reach this path
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<int> ri, ci;
                for (int k = 0; k < n; ++k) if (k != i) ri.push_back(k);
                for (int k = 0; k < n; ++k) if (k != j) ci.push_back(k);
                IntMatrix minor = m.select_rows(ri).select_columns(ci);
                Int c = det_signed(minor);
                out.adj.at(j, i) = ((i + j) % 2 == 0) ? c : -c;
            }
        return out;
    }
    // adj = det * m^{-1}, computed by rational inversion (exact)
    for (int col = 0; col < n; ++col) {
        RatVec e(n, Rat(0));
        e[col] = 1;
        auto sol = solve_rational(m, e);
        for (int i = 0; i < n; ++i) {
            Rat v = (*sol)[i] * Rat(out.det);
            v.canonicalize();
            out.adj.at(i, col) = v.get_num(); // denominator divides det
        }
    }
    return out;
}

} // namespace tropdisc
