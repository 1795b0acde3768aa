#pragma once
// Dense integer matrices with exact entries. Row-major vector-of-rows storage;
// shapes here are tiny (dozens of rows/columns), clarity wins over packing.

#include "tropdisc/numeric.hpp"
#include "tropdisc/errors.hpp"

#include <initializer_list>
#include <vector>

namespace tropdisc {

struct IntMatrix {
    std::vector<IntVec> row;

    IntMatrix() = default;
    IntMatrix(int r, int c) : row(r, IntVec(c, 0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
        for (const auto& r : init) {
            IntVec v;
            for (long x : r) v.emplace_back(x);
            row.push_back(std::move(v));
        }
    }

    int rows() const { return static_cast<int>(row.size()); }
    int cols() const { return row.empty() ? 0 : static_cast<int>(row[0].size()); }
    Int& at(int r, int c) { return row[r][c]; }
    const Int& at(int r, int c) const { return row[r][c]; }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols(), rows());
        for (int i = 0; i < rows(); ++i)
            for (int j = 0; j < cols(); ++j) t.at(j, i) = at(i, j);
        return t;
    }

    IntVec column(int j) const {
        IntVec c(rows());
        for (int i = 0; i < rows(); ++i) c[i] = at(i, j);
        return c;
    }

    // columns listed in `idx`, in that order
    IntMatrix select_columns(const std::vector<int>& idx) const {
        IntMatrix m(rows(), static_cast<int>(idx.size()));
        for (int i = 0; i < rows(); ++i)
            for (size_t j = 0; j < idx.size(); ++j) m.at(i, static_cast<int>(j)) = at(i, idx[j]);
        return m;
    }

    IntMatrix select_rows(const std::vector<int>& idx) const {
        IntMatrix m(static_cast<int>(idx.size()), cols());
        for (size_t i = 0; i < idx.size(); ++i) m.row[i] = row[idx[i]];
        return m;
    }

    bool operator==(const IntMatrix& o) const { return row == o.row; }
};

inline IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows())
        throw Error(Errc::dimension_mismatch, "hcat: row counts differ");
    IntMatrix m(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

inline IntMatrix vcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
        throw Error(Errc::dimension_mismatch, "vcat: column counts differ");
    IntMatrix m = a;
    for (const auto& r : b.row) m.row.push_back(r);
    return m;
}

inline IntMatrix from_columns(int n, const std::vector<IntVec>& cols) {
    IntMatrix m(n, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        if (static_cast<int>(cols[j].size()) != n)
            throw Error(Errc::dimension_mismatch, "from_columns: bad vector length");
        for (int i = 0; i < n; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
    }
    return m;
}

inline IntVec mat_vec(const IntMatrix& m, const IntVec& v) {
    if (m.cols() != static_cast<int>(v.size()))
        throw Error(Errc::dimension_mismatch, "mat_vec: size mismatch");
    IntVec out(m.rows(), 0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

inline RatVec mat_vec(const IntMatrix& m, const RatVec& v) {
    if (m.cols() != static_cast<int>(v.size()))
        throw Error(Errc::dimension_mismatch, "mat_vec: size mismatch");
    RatVec out(m.rows(), Rat(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i] += Rat(m.at(i, j)) * v[j];
    return out;
}

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw Error(Errc::dimension_mismatch, "mat_mul: size mismatch");
    IntMatrix m(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) m.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return m;
}

} // namespace tropdisc
