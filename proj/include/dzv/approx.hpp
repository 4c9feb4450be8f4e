#pragma once

#include <mpfr.h>

#include <climits>
#include <stdexcept>
#include <string>
#include <utility>

#include "dzv/rational.hpp"

namespace dzv {

// Ball value: an mpfr midpoint at the working precision plus an upward-rounded
// 64-bit absolute error bound. The true value always lies in [v-err, v+err].
class ApproxReal {
  public:
    explicit ApproxReal(mpfr_prec_t prec = 128) : prec_(prec) {
        mpfr_init2(v_, prec_);
        mpfr_init2(e_, kErrPrec);
        mpfr_set_zero(v_, 1);
        mpfr_set_zero(e_, 1);
    }

    ApproxReal(const ApproxReal& o) : prec_(o.prec_) {
        mpfr_init2(v_, prec_);
        mpfr_init2(e_, kErrPrec);
        mpfr_set(v_, o.v_, MPFR_RNDN);
        mpfr_set(e_, o.e_, MPFR_RNDU);
    }

    ApproxReal(ApproxReal&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(v_, 2);
        mpfr_init2(e_, kErrPrec);
        mpfr_swap(v_, o.v_);
        mpfr_swap(e_, o.e_);
    }

    ApproxReal& operator=(const ApproxReal& o) {
        if (this != &o) {
            if (prec_ != o.prec_) {
                mpfr_set_prec(v_, o.prec_);
                prec_ = o.prec_;
            }
            mpfr_set(v_, o.v_, MPFR_RNDN);
            mpfr_set(e_, o.e_, MPFR_RNDU);
        }
        return *this;
    }

    ApproxReal& operator=(ApproxReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        mpfr_swap(e_, o.e_);
        std::swap(prec_, o.prec_);
        return *this;
    }

    ~ApproxReal() {
        mpfr_clear(v_);
        mpfr_clear(e_);
    }

    static ApproxReal from_rational(const Rational& q, mpfr_prec_t prec) {
        ApproxReal r(prec);
        r.bump(mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN));
        return r;
    }

    static ApproxReal from_decimal(const std::string& s, mpfr_prec_t prec) {
        ApproxReal r(prec);
        char* end = nullptr;
        int tern = mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
        if (end == s.c_str() || *end != '\0')
            throw std::invalid_argument("ApproxReal: malformed decimal literal");
        r.bump(tern);
        return r;
    }

    static ApproxReal from_long(long x, mpfr_prec_t prec) {
        ApproxReal r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);  // exact for any sane precision
        return r;
    }

    static ApproxReal pi(mpfr_prec_t prec) {
        ApproxReal r(prec);
        r.bump(mpfr_const_pi(r.v_, MPFR_RNDN));
        return r;
    }

    mpfr_prec_t precision() const { return prec_; }
    const mpfr_t& value() const { return v_; }
    const mpfr_t& error() const { return e_; }

    ApproxReal operator+(const ApproxReal& o) const {
        ApproxReal r(std::max(prec_, o.prec_));
        r.bump(mpfr_add(r.v_, v_, o.v_, MPFR_RNDN));
        mpfr_add(r.e_, e_, o.e_, MPFR_RNDU);
        return fix(std::move(r));
    }

    ApproxReal operator-(const ApproxReal& o) const {
        ApproxReal r(std::max(prec_, o.prec_));
        r.bump(mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN));
        mpfr_add(r.e_, e_, o.e_, MPFR_RNDU);
        return fix(std::move(r));
    }

    ApproxReal operator-() const {
        ApproxReal r(*this);
        mpfr_neg(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    ApproxReal operator*(const ApproxReal& o) const {
        ApproxReal r(std::max(prec_, o.prec_));
        r.bump(mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN));
        mpfr_t aa, bb, t;
        mpfr_inits2(kErrPrec, aa, bb, t, nullptr);
        mpfr_abs(aa, v_, MPFR_RNDU);
        mpfr_abs(bb, o.v_, MPFR_RNDU);
        mpfr_mul(t, aa, o.e_, MPFR_RNDU);
        mpfr_add(r.e_, r.e_, t, MPFR_RNDU);
        mpfr_mul(t, bb, e_, MPFR_RNDU);
        mpfr_add(r.e_, r.e_, t, MPFR_RNDU);
        mpfr_mul(t, e_, o.e_, MPFR_RNDU);
        mpfr_add(r.e_, r.e_, t, MPFR_RNDU);
        mpfr_clears(aa, bb, t, nullptr);
        return fix(std::move(r));
    }

    ApproxReal operator/(const ApproxReal& o) const {
        mpfr_t babs, blo, t;
        mpfr_inits2(kErrPrec, babs, blo, t, nullptr);
        mpfr_abs(babs, o.v_, MPFR_RNDD);
        mpfr_sub(blo, babs, o.e_, MPFR_RNDD);
        if (mpfr_sgn(blo) <= 0) {
            mpfr_clears(babs, blo, t, nullptr);
            throw std::domain_error("ApproxReal: division by a ball containing zero");
        }
        ApproxReal r(std::max(prec_, o.prec_));
        r.bump(mpfr_div(r.v_, v_, o.v_, MPFR_RNDN));
        // |a-â|/|b| + |â||b-b̂| / (|b||b̂|)
        mpfr_div(t, e_, blo, MPFR_RNDU);
        mpfr_add(r.e_, r.e_, t, MPFR_RNDU);
        mpfr_abs(t, v_, MPFR_RNDU);
        mpfr_mul(t, t, o.e_, MPFR_RNDU);
        mpfr_div(t, t, blo, MPFR_RNDU);
        mpfr_div(t, t, babs, MPFR_RNDU);
        mpfr_add(r.e_, r.e_, t, MPFR_RNDU);
        mpfr_clears(babs, blo, t, nullptr);
        return fix(std::move(r));
    }

    ApproxReal scaled_by(const Rational& q) const {
        ApproxReal r(*this);
        r.bump(mpfr_mul_q(r.v_, r.v_, q.get_mpq_t(), MPFR_RNDN));
        mpq_class aq = abs(q);
        mpfr_mul_q(r.e_, r.e_, aq.get_mpq_t(), MPFR_RNDU);
        return fix(std::move(r));
    }

    ApproxReal& operator+=(const ApproxReal& o) {
        *this = *this + o;
        return *this;
    }

    // widen the ball by an extra absolute bound (e.g. a series remainder)
    void add_error(const mpfr_t bound) { mpfr_add(e_, e_, bound, MPFR_RNDU); }

    void add_error_pow10(long t) {
        mpfr_t u;
        mpfr_init2(u, kErrPrec);
        pow10(u, t);
        mpfr_add(e_, e_, u, MPFR_RNDU);
        mpfr_clear(u);
    }

    // collapse the error bound up to exactly 10^t; requires current err <= 10^t
    void clamp_error_pow10(long t) {
        mpfr_t u;
        mpfr_init2(u, kErrPrec);
        pow10(u, t);
        if (mpfr_cmp(e_, u) > 0) {
            mpfr_clear(u);
            throw std::logic_error("ApproxReal: clamp below achieved error bound");
        }
        mpfr_set(e_, u, MPFR_RNDU);
        mpfr_clear(u);
    }

    // upper bound for |true value|
    void abs_upper(mpfr_t out) const {
        mpfr_abs(out, v_, MPFR_RNDU);
        mpfr_add(out, out, e_, MPFR_RNDU);
    }

    bool abs_at_most_pow10(long t) const {
        mpfr_t up, u;
        mpfr_inits2(kErrPrec, up, u, nullptr);
        abs_upper(up);
        pow10(u, t);
        bool ok = mpfr_cmp(up, u) <= 0;
        mpfr_clears(up, u, nullptr);
        return ok;
    }

    bool error_at_most_pow10(long t) const {
        mpfr_t u;
        mpfr_init2(u, kErrPrec);
        pow10(u, t);
        bool ok = mpfr_cmp(e_, u) <= 0;
        mpfr_clear(u);
        return ok;
    }

    // decimal exponent of |v|+err, LONG_MIN for an exact zero; for reporting
    long magnitude_exp10() const {
        mpfr_t up;
        mpfr_init2(up, kErrPrec);
        abs_upper(up);
        long out;
        if (mpfr_zero_p(up)) {
            out = LONG_MIN;
        } else {
            mpfr_log10(up, up, MPFR_RNDU);
            mpfr_ceil(up, up);
            out = mpfr_get_si(up, MPFR_RNDN);
        }
        mpfr_clear(up);
        return out;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    std::string str(int digits = 20) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Re", digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    static void pow10(mpfr_t out, long t) {
        if (t >= 0) {
            mpfr_ui_pow_ui(out, 10, static_cast<unsigned long>(t), MPFR_RNDU);
        } else {
            mpfr_ui_pow_ui(out, 10, static_cast<unsigned long>(-t), MPFR_RNDD);
            mpfr_ui_div(out, 1, out, MPFR_RNDU);
        }
    }

  private:
    static constexpr mpfr_prec_t kErrPrec = 64;

    void bump(int ternary) {
        if (ternary == 0) return;
        mpfr_exp_t ex = mpfr_zero_p(v_) ? mpfr_get_emin() : mpfr_get_exp(v_) - prec_;
        mpfr_t u;
        mpfr_init2(u, kErrPrec);
        mpfr_set_ui_2exp(u, 1, ex + 1, MPFR_RNDU);
        mpfr_add(e_, e_, u, MPFR_RNDU);
        mpfr_clear(u);
    }

    static ApproxReal fix(ApproxReal&& r) { return std::move(r); }

    mpfr_t v_;
    mpfr_t e_;
    mpfr_prec_t prec_;
};

}  // namespace dzv
