#pragma once

#include <gmpxx.h>

#include <string>

namespace weyl {

// Exact coefficients. gmpxx keeps results in lowest terms with a positive
// denominator, so structural equality is value equality.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace weyl
