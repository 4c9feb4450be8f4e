#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace dzv {

using Integer = mpz_class;

// Exact rational scalar. gmpxx keeps results of arithmetic canonical
// (lowest terms, positive denominator) as long as the operands are, so the
// only care needed is canonicalizing after raw numerator/denominator
// construction; rat() below does that.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const Integer& num, const Integer& den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "n" or "n/d".
inline Rational rat_parse(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("rational: zero denominator");
    r.canonicalize();
    return r;
}

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return b;
}

}  // namespace dzv
