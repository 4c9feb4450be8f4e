#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "dzv/approx.hpp"
#include "dzv/rational.hpp"

namespace dzv {

// the ball is too wide to certify a unique rational: distinct from "no
// rational with a small enough denominator exists"
struct InsufficientPrecision : std::runtime_error {
    explicit InsufficientPrecision(const std::string& m) : std::runtime_error(m) {}
};

// The unique rational with denominator <= max_den inside the ball, if any.
// Requires error_bound < 1/(2 max_den^2), which makes uniqueness a theorem and
// ensures the target is a continued-fraction convergent of the midpoint.
inline std::optional<Rational> rational_reconstruct(const ApproxReal& x, const Integer& max_den) {
    if (max_den < 1) throw std::invalid_argument("rational_reconstruct: denominator bound must be positive");
    {
        mpfr_t t;
        mpfr_init2(t, 128);
        mpfr_mul_z(t, x.error(), max_den.get_mpz_t(), MPFR_RNDU);
        mpfr_mul_z(t, t, max_den.get_mpz_t(), MPFR_RNDU);
        mpfr_mul_ui(t, t, 2, MPFR_RNDU);
        bool wide = mpfr_cmp_ui(t, 1) >= 0;
        mpfr_clear(t);
        if (wide)
            throw InsufficientPrecision(
                "rational_reconstruct: error bound exceeds the uniqueness window 1/(2*max_den^2)");
    }
    Rational v0, err;
    mpfr_get_q(v0.get_mpq_t(), x.value());
    mpfr_get_q(err.get_mpq_t(), x.error());

    Rational rem = v0;
    Integer h_prev = 1, k_prev = 0;  // convergent index -1
    Integer h = 0, k = 1;            // placeholder; first loop iteration builds index 0
    bool first = true;
    while (true) {
        Integer a;
        mpz_fdiv_q(a.get_mpz_t(), mpq_numref(rem.get_mpq_t()), mpq_denref(rem.get_mpq_t()));
        Integer hn = first ? a : Integer(a * h + h_prev);
        Integer kn = first ? Integer(1) : Integer(a * k + k_prev);
        if (!first) {
            h_prev = h;
            k_prev = k;
        }
        h = hn;
        k = kn;
        first = false;
        if (k > max_den) return std::nullopt;
        Rational cand = rat(h, k);
        if (abs(Rational(v0 - cand)) <= err) return cand;
        Rational frac = rem - rat(a);
        if (frac == 0) return std::nullopt;  // exact rational midpoint, no candidate matched
        rem = rat(1) / frac;
    }
}

inline Integer pow10_int(long e) {
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return t;
}

// the module-wide denominator policy: a third of the digits carry the
// denominator, the rest is verification margin
inline Integer denominator_bound(long digits) { return pow10_int(digits / 3); }

}  // namespace dzv
