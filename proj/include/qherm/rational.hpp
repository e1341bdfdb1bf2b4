#pragma once

#include <gmpxx.h>

#include <string>

namespace qherm {

/// Exact rational numbers. GMP keeps the canonical form (gcd 1, positive
/// denominator) through all arithmetic.
using Rational = mpq_class;

inline std::string rational_str(const Rational& r) { return r.get_str(); }

inline Rational rational_from_str(const std::string& s) {
    Rational r(s);
    r.canonicalize();
    return r;
}

} // namespace qherm
