#pragma once

#include "gjets/error.hpp"

#include <gmpxx.h>

#include <string>

namespace gjets {

// Exact arbitrary-precision rational with reduced fraction and normalized
// sign (denominator > 0), provided by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw ParseError("invalid rational literal: " + s);
    if (q.get_den() == 0)
        throw ParseError("zero denominator in rational literal: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace gjets
