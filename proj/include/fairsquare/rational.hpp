#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace fairsq {

using Rat = mpq_class;
using Int = mpz_class;

struct InvalidParameter : std::runtime_error {
    explicit InvalidParameter(const std::string& what) : std::runtime_error(what) {}
};

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw InvalidParameter("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p" or "p/q" with arbitrary-precision integers.
Rat rat_parse(const std::string& s);

// Canonical "p" or "p/q" form (q > 1 only when needed).
std::string rat_str(const Rat& r);

// Truncated decimal expansion, for human-readable report fields only.
std::string rat_decimal(const Rat& r, int digits = 6);

Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

// floor() for values known to fit a long (partner counts etc.).
long rat_floor_long(const Rat& r);

// Exact square root when the result is rational.
std::optional<Rat> rat_sqrt_exact(const Rat& r);

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a > b ? a : b; }

// Rational with the smallest denominator in [lo, hi] (Stern-Brocot walk).
Rat simplest_rational_between(const Rat& lo, const Rat& hi);

// 2^-64, the precision bound for inexact mark solvers.
const Rat& mark_epsilon();

}  // namespace fairsq
