#ifndef BINFORM_NUMERIC_HPP
#define BINFORM_NUMERIC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace binform {

// Exact scalars. Int is an arbitrary-precision signed integer, Rat a
// rational kept in lowest terms with positive denominator (zero is 0/1).
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rat q(num);
    q /= Rat(den);
    return q;
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }
inline bool is_zero(const Int& n) { return sgn(n) == 0; }

Int factorial(long n);
Int binomial(const Int& n, long k);
inline Int binomial(long n, long k) { return binomial(Int(n), k); }

// Rational binomial quotient helpers used by the syzygy coefficients.
Rat rat_binomial(long n, long k);

// "num/den" (den omitted when 1); the inverse of parse_rat.
std::string rat_to_string(const Rat& q);
Rat parse_rat(const std::string& s);

std::string int_to_string(const Int& n);

// Truncated decimal expansion of sqrt(num/den), rounded toward zero.
// Deterministic: used only for report output, never for comparisons.
std::string sqrt_decimal_string(const Int& num, const Int& den, int digits);

}  // namespace binform

#endif
