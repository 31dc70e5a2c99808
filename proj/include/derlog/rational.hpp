#ifndef DERLOG_RATIONAL_HPP
#define DERLOG_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

namespace derlog {

// Exact scalars. mpq_class keeps values canonical (lowest terms, positive
// denominator), which is exactly the invariant we need everywhere.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Serialize as "n" or "n/d"; used by all JSON output so no precision is lost.
inline std::string rat_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Parse "n", "n/d", or a plain integer string. Throws std::invalid_argument.
Rational rat_parse(const std::string& s);

using RatVec = std::vector<Rational>;

} // namespace derlog

#endif
