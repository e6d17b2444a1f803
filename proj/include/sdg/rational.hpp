#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "sdg/error.hpp"

namespace sdg {

// Exact rational scalar. mpq_class keeps values canonical: reduced to lowest
// terms, denominator > 0, zero represented as 0/1.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parse "p", "-p" or "p/q" (q > 0 after canonicalization).
Rational rat_parse(const std::string& text);

/// Serialize as "p" or "p/q".
std::string rat_str(const Rational& q);

} // namespace sdg
