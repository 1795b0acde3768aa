#pragma once
// One exception hierarchy for the whole library. Every throw site uses a
// machine-readable code; the CLI maps codes to exit statuses and JSON output.

#include <stdexcept>
#include <string>

namespace tropdisc {

enum class Errc {
    invalid_input,              // malformed file / bad flag combination
    rank_deficient,             // matrix does not have full row rank
    not_square,                 // determinant of a non-square matrix
    span_mismatch,              // lattice_index on different rational spans
    dimension_mismatch,         // vectors of inconsistent lengths
    pyramid_input,              // some column lies in every kernel zero set
    lattice_too_large,          // flat enumeration exceeded the cap
    defective,                  // codimension > 1 where a hypersurface is required
    genericity_failure,         // sampled w was non-generic, budget exhausted
    kernel_not_one_dimensional, // interpolation kernel had dim != 1
    not_essential,              // Cayley family fails the essential test
    too_few_blocks,             // resultant degree needs m >= r+1
    dimension_too_large,        // hull summary supports affine dim <= 4 only
    non_pure_fan,               // fan engine requires purity of dim n-c
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

// Thrown after the resampling budget is spent; keeps the offending reasons.
class GenericityError : public Error {
public:
    GenericityError(const std::string& what, int attempts)
        : Error(Errc::genericity_failure, what), attempts_(attempts) {}
    int attempts() const { return attempts_; }

private:
    int attempts_;
};

} // namespace tropdisc
