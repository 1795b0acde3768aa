#pragma once
// Point configurations: an integer d×n matrix A whose columns are the points.
// A configuration is valid when its columns span Z^d (not merely a finite-
// index sublattice), the all-ones vector lies in the row span, and it is not
// a pyramid (no point lies in the zero-set of every kernel vector).
//
// Validation reasons are machine-readable strings, stable for the CLI:
//   "spans"   columns do not span Z^d (includes rank deficiency)
//   "ones"    (1,...,1) not in the row span
//   "pyramid" some column index is zero in every kernel vector

#include "tropdisc/linalg.hpp"
#include "tropdisc/matrix.hpp"

#include <string>

namespace tropdisc {

struct ValidationReport {
    bool ok = true;
    std::string reason; // empty when ok
};

ValidationReport validate_configuration(const IntMatrix& a);

class Configuration {
public:
    // Validates and precomputes the Gale dual; throws Error(invalid_input)
    // with the report reason in what() on invalid input.
    explicit Configuration(IntMatrix a);

    int d() const { return a_.rows(); }
    int n() const { return a_.cols(); }
    const IntMatrix& matrix() const { return a_; }

    // n×(n−d) canonical saturated kernel basis (columns); the Gale dual B.
    const IntMatrix& gale() const { return gale_; }

    // n×d matrix A^t whose columns span rowspace(A)
    const IntMatrix& rowspace() const { return rowspace_; }

private:
    IntMatrix a_;
    IntMatrix gale_;
    IntMatrix rowspace_;
};

} // namespace tropdisc
