#pragma once
// Exact linear algebra over Z and Q: rank, Bareiss determinant, saturated
// integer kernels (unimodular column reduction), Hermite/Smith normal forms,
// lattice saturation and indices, and rational solving.
//
// Conventions: a "lattice basis" matrix stores basis vectors as COLUMNS unless
// a function name says rows. Kernels are always saturated, i.e. they are
// bases of ker(A) ∩ Z^n, not just some finite-index sublattice.

#include "tropdisc/matrix.hpp"

#include <optional>

namespace tropdisc {

// rank over Q (exact, fraction-free elimination)
int rank_of(const IntMatrix& m);

// |det| of a square matrix via the Bareiss fraction-free scheme.
// Throws Errc::not_square.
Int det_abs(const IntMatrix& m);

// signed determinant (same algorithm, sign tracked through pivoting)
Int det_signed(const IntMatrix& m);

// Basis of ker(A) ∩ Z^n as columns of an n×(n−rank) matrix, obtained from a
// unimodular column reduction, so the result is saturated by construction.
// No canonicalization; use integer_kernel_basis for the canonical form.
IntMatrix kernel_basis_raw(const IntMatrix& a);

// Saturated kernel basis, canonicalized so that its transpose is the unique
// row-style Hermite normal form of the kernel lattice. For a full-row-rank
// d×n input the result is n×(n−d); otherwise throws Errc::rank_deficient.
IntMatrix integer_kernel_basis(const IntMatrix& a);

// Unique row-style Hermite normal form of the row lattice of m: pivots
// positive, entries above each pivot reduced into [0, pivot), zero rows
// dropped. Two matrices have equal row lattices iff their HNFs are equal.
IntMatrix row_hnf(const IntMatrix& m);

// Diagonal of the Smith normal form (invariant factors, each dividing the
// next, zeros trailing for rank deficiency), length min(rows, cols).
std::vector<Int> snf_invariant_factors(const IntMatrix& m);

// Basis (columns) of span_Q(columns of m) ∩ Z^n. Result has rank(m) columns.
IntMatrix saturate_columns(const IntMatrix& m);

// Index [L(sup) : L(sub)] of the column lattices, both of full rank in the
// same rational span. Throws Errc::span_mismatch if the spans differ or the
// sub lattice is not contained in the sup lattice.
Int lattice_index(const IntMatrix& sub, const IntMatrix& sup);

// One rational solution of A x = b, or nullopt if inconsistent.
std::optional<RatVec> solve_rational(const IntMatrix& a, const RatVec& b);

// Basis of the rational nullspace of A, integer-scaled, as columns.
IntMatrix rational_nullspace(const IntMatrix& a);

// adjugate matrix (det * inverse) of a square integer matrix, together with
// its signed determinant; adj is integral even when det = 0 but is only
// computed here for det != 0 callers.
struct Adjugate {
    IntMatrix adj;
    Int det;
};
Adjugate adjugate(const IntMatrix& m);

} // namespace tropdisc
