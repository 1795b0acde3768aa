#pragma once
// Exact arithmetic aliases and small vector helpers used everywhere.
// All computations in this library are over Z or Q via GMP; no floating point.

#include <gmpxx.h>
#include <vector>
#include <string>
#include <cstdint>

namespace tropdisc {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline int sign_of(const Int& x) { return sgn(x); }
inline int sign_of(const Rat& x) { return sgn(x); }
inline bool is_zero(const Int& x) { return sgn(x) == 0; }
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

// gcd of the absolute values of all entries (0 for the zero vector)
inline Int content(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) { g = gcd(g, x); if (g == 1) break; }
    return g;
}

// Divide a nonzero vector by its content, keeping direction (no sign flip).
inline IntVec primitive(const IntVec& v) {
    Int g = content(v);
    if (g == 0 || g == 1) return v;
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

inline bool is_zero(const IntVec& v) {
    for (const Int& x : v) if (x != 0) return false;
    return true;
}

inline IntVec unit_vector(int n, int i) {
    IntVec e(n, 0);
    e[i] = 1;
    return e;
}

// Clear denominators: smallest positive multiple making every entry integral.
inline IntVec scale_to_integer(const RatVec& v) {
    Int l = 1;
    for (const Rat& x : v) l = lcm(l, x.get_den());
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rat y = v[i] * Rat(l);
        y.canonicalize();
        out[i] = y.get_num();
    }
    return out;
}

inline RatVec to_rat(const IntVec& v) {
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

} // namespace tropdisc
