#include "tropdisc/config.hpp"

#include "tropdisc/errors.hpp"

namespace tropdisc {

ValidationReport validate_configuration(const IntMatrix& a) {
    int d = a.rows();
    int n = a.cols();
    if (d == 0 || n == 0) return {false, "spans"};

    // columns span Z^d: SNF of A has exactly d invariant factors, all 1
    auto factors = snf_invariant_factors(a);
    int units = 0;
    for (const Int& f : factors)
        if (f == 1) ++units;
    if (units < d) return {false, "spans"};

    // (1,...,1) in the row span of A
    RatVec ones(n, Rat(1));
    if (!solve_rational(a.transpose(), ones)) return {false, "ones"};

    // pyramid test: column i lies in every kernel zero-set iff row i of the
    // Gale dual is zero
    if (n > d) {
        IntMatrix b = kernel_basis_raw(a);
        for (int i = 0; i < n; ++i) {
            bool all_zero = true;
            for (int j = 0; j < b.cols() && all_zero; ++j)
                all_zero = is_zero(b.at(i, j));
            if (all_zero) return {false, "pyramid"};
        }
    } else {
        // trivial kernel: every column is a pyramid apex
        return {false, "pyramid"};
    }
    return {true, {}};
}

Configuration::Configuration(IntMatrix a) : a_(std::move(a)) {
    ValidationReport report = validate_configuration(a_);
    if (!report.ok) throw Error(Errc::invalid_input, report.reason);
    gale_ = integer_kernel_basis(a_);
    rowspace_ = a_.transpose();
}

} // namespace tropdisc
