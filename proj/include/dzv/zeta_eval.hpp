#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "dzv/approx.hpp"
#include "dzv/bernoulli.hpp"
#include "dzv/relations.hpp"
#include "dzv/symbols.hpp"

namespace dzv {

// Computes every single and double zeta value of one weight in a shared pass:
// one summation ladder to the cutoff M feeds all of them, and the truncated
// tails are restored by Euler-Maclaurin corrections with explicit remainder
// bounds folded into the ball errors. Reported error bounds are clamped up to
// exactly 10^-(digits+5) so they shrink monotonically as digits grows.
class WeightEvaluator {
  public:
    WeightEvaluator(int k, long digits, bool with_doubles = true)
        : k_(k), digits_(digits), with_doubles_(with_doubles) {
        if (k < 2) throw std::invalid_argument("WeightEvaluator: weight must be at least 2");
        if (digits < 1) throw std::invalid_argument("WeightEvaluator: digits must be positive");
        long m = (2 * digits + 4) / 5 + k + 30;
        long extra_bits = 0;
        for (int attempt = 0; attempt < 4; ++attempt) {
            if (build(m, extra_bits)) return;
            m = m * 8 / 5 + 16;
            extra_bits += 128 + digits;
        }
        throw std::runtime_error("WeightEvaluator: tail corrections failed to converge");
    }

    int weight() const { return k_; }
    long digits() const { return digits_; }
    mpfr_prec_t precision() const { return prec_; }
    bool has_doubles() const { return with_doubles_; }

    // zeta(s) for 2 <= s <= weight
    const ApproxReal& zeta(int s) const {
        if (s < 2 || s > k_) throw std::invalid_argument("WeightEvaluator: zeta index out of range");
        return singles_[s];
    }

    // zeta(q, weight-q) for 2 <= q <= weight-1
    const ApproxReal& zeta2(int q) const {
        if (!with_doubles_) throw std::logic_error("WeightEvaluator: built without double zetas");
        if (q < 2 || q > k_ - 1)
            throw std::invalid_argument("WeightEvaluator: double zeta index out of range");
        return doubles_[q];
    }

    const ApproxReal& pi() const { return pi_; }

  private:
    // Sum_{n>M} n^-s via Euler-Maclaurin; mpow must hold M^(1-s). Fails (nullopt)
    // when the correction terms stop shrinking before the target is met.
    std::optional<ApproxReal> tail(long s, const ApproxReal& mpow, const ApproxReal& inv,
                                   const ApproxReal& inv2, long target_t) const {
        ApproxReal out = mpow.scaled_by(rat(1, s - 1));
        out = out - mpow * inv * half_;
        mpfr_t thr, up, prev;
        mpfr_inits2(64, thr, up, prev, nullptr);
        ApproxReal::pow10(thr, target_t);
        ApproxReal mp = mpow * inv2;  // M^(-s-1), the i = 1 power M^(-s-2i+1)
        Integer poch = s;             // (s)_(2i-1)
        Integer fact = 2;             // (2i)!
        bool ok = false;
        for (int i = 1; i <= 500; ++i) {
            Rational c = bernoulli(2 * i) * rat(poch, fact);
            ApproxReal term = mp.scaled_by(c);
            term.abs_upper(up);
            mpfr_mul_ui(up, up, 4, MPFR_RNDU);
            if (mpfr_cmp(up, thr) <= 0) {
                out.add_error(up);
                ok = true;
                break;
            }
            if (i > 1 && mpfr_cmp(up, prev) >= 0) break;  // divergent regime: M too small
            mpfr_set(prev, up, MPFR_RNDU);
            out = out + term;
            mp = mp * inv2;
            poch *= Integer(s + 2 * i - 1) * Integer(s + 2 * i);
            fact *= Integer(2 * i + 1) * Integer(2 * i + 2);
        }
        mpfr_clears(thr, up, prev, nullptr);
        if (!ok) return std::nullopt;
        return out;
    }

    // Sum_{m>M} m^-p tail(q, m) for p = k-q, expanding tail(q, m) termwise
    std::optional<ApproxReal> double_tail(int q, const ApproxReal& invpow_k, const ApproxReal& inv,
                                          const ApproxReal& inv2, long target_t) const {
        ApproxReal g = tails_[k_ - 1].scaled_by(rat(1, q - 1));
        g = g - tails_[k_].scaled_by(rat(1, 2));
        mpfr_t thr, up, prev;
        mpfr_inits2(64, thr, up, prev, nullptr);
        ApproxReal::pow10(thr, target_t);
        ApproxReal mpj = invpow_k;  // M^(1-s_j) for s_j = k+2j-1, starting at j=1
        Integer poch = q;
        Integer fact = 2;
        bool ok = false;
        for (int j = 1; j <= 500; ++j) {
            Rational c = bernoulli(2 * j) * rat(poch, fact);
            ApproxReal cb = ApproxReal::from_rational(c, 64);
            long cexp = cb.magnitude_exp10();
            long inner_t = target_t - (cexp == LONG_MIN ? 0 : cexp) - 4;
            auto tj = tail(k_ + 2 * j - 1, mpj, inv, inv2, inner_t);
            if (!tj) break;
            ApproxReal term = tj->scaled_by(c);
            term.abs_upper(up);
            mpfr_mul_ui(up, up, 4, MPFR_RNDU);
            if (mpfr_cmp(up, thr) <= 0) {
                g.add_error(up);
                ok = true;
                break;
            }
            if (j > 1 && mpfr_cmp(up, prev) >= 0) break;
            mpfr_set(prev, up, MPFR_RNDU);
            g = g + term;
            mpj = mpj * inv2;
            poch *= Integer(q + 2 * j - 1) * Integer(q + 2 * j);
            fact *= Integer(2 * j + 1) * Integer(2 * j + 2);
        }
        mpfr_clears(thr, up, prev, nullptr);
        if (!ok) return std::nullopt;
        return g;
    }

    bool build(long m, long extra_bits) {
        long lg = 0;
        for (long t = static_cast<long>(m) * k_; t > 0; t >>= 1) ++lg;
        prec_ = static_cast<mpfr_prec_t>((10 * (digits_ + 15)) / 3 + 72 + lg + extra_bits);
        const long target_t = -(digits_ + 5);
        const long tail_t = target_t - 3;

        half_ = ApproxReal::from_rational(rat(1, 2), 64);
        pi_ = ApproxReal::pi(prec_);
        ApproxReal one = ApproxReal::from_long(1, prec_);

        std::vector<ApproxReal> S(k_ + 1, ApproxReal(prec_));
        std::vector<ApproxReal> U;
        if (with_doubles_) U.assign(k_ + 1, ApproxReal(prec_));
        std::vector<ApproxReal> pw(k_ + 1, ApproxReal(prec_));

        for (long n = 1; n <= m; ++n) {
            ApproxReal inv = one / ApproxReal::from_long(n, prec_);
            pw[1] = inv;
            for (int t = 2; t <= k_; ++t) pw[t] = pw[t - 1] * inv;
            for (int s = 1; s <= k_; ++s) S[s] = S[s] + pw[s];
            if (with_doubles_) {
                for (int q = 2; q <= k_ - 1; ++q) U[q] = U[q] + pw[k_ - q] * S[q];
            }
        }

        ApproxReal inv = one / ApproxReal::from_long(m, prec_);
        ApproxReal inv2 = inv * inv;

        tails_.assign(k_ + 1, ApproxReal(prec_));
        singles_.assign(k_ + 1, ApproxReal(prec_));
        ApproxReal mpow = inv;  // M^(1-s) for the current s
        for (int s = 2; s <= k_; ++s) {
            auto t = tail(s, mpow, inv, inv2, tail_t);
            if (!t) return false;
            tails_[s] = *t;
            singles_[s] = S[s] + tails_[s];
            if (!singles_[s].error_at_most_pow10(target_t)) return false;
            mpow = mpow * inv;
        }

        if (with_doubles_) {
            ApproxReal invpow_k = mpow;  // loop left mpow = M^-k = M^(1-(k+1))
            doubles_.assign(k_ + 1, ApproxReal(prec_));
            for (int q = 2; q <= k_ - 1; ++q) {
                auto g = double_tail(q, invpow_k, inv, inv2, tail_t);
                if (!g) return false;
                ApproxReal front = singles_[q] * S[k_ - q] - U[q];
                doubles_[q] = front + *g;
                if (!doubles_[q].error_at_most_pow10(target_t)) return false;
                doubles_[q].clamp_error_pow10(target_t);
            }
        }
        for (int s = 2; s <= k_; ++s) singles_[s].clamp_error_pow10(target_t);
        return true;
    }

    int k_;
    long digits_;
    bool with_doubles_;
    mpfr_prec_t prec_ = 128;
    ApproxReal pi_;
    ApproxReal half_;
    std::vector<ApproxReal> singles_;
    std::vector<ApproxReal> doubles_;
    std::vector<ApproxReal> tails_;
};

namespace detail {

inline const WeightEvaluator& cached_evaluator(int k, long digits, bool with_doubles) {
    thread_local std::map<std::tuple<int, long, bool>, std::unique_ptr<WeightEvaluator>> cache;
    if (with_doubles) {
        auto& slot = cache[{k, digits, true}];
        if (!slot) slot = std::make_unique<WeightEvaluator>(k, digits, true);
        return *slot;
    }
    auto full = cache.find({k, digits, true});
    if (full != cache.end()) return *full->second;
    auto& slot = cache[{k, digits, false}];
    if (!slot) slot = std::make_unique<WeightEvaluator>(k, digits, false);
    return *slot;
}

}  // namespace detail

inline ApproxReal zeta_single(int s, long digits) {
    if (s < 2) throw std::invalid_argument("zeta_single: argument must be at least 2");
    return detail::cached_evaluator(s, digits, false).zeta(s);
}

inline ApproxReal zeta_double(int q, int p, long digits) {
    Symbol sym = dz(q, p);  // validates the argument range
    return detail::cached_evaluator(q + p, digits, true).zeta2(sym.a);
}

inline ApproxReal zeta_product(int a, int b, long digits) {
    if (a < 2 || b < 2) throw std::invalid_argument("zeta_product: arguments must be at least 2");
    const WeightEvaluator& ev = detail::cached_evaluator(a + b, digits, false);
    return ev.zeta(a) * ev.zeta(b);
}

inline ApproxReal pi_value(long digits) { return detail::cached_evaluator(2, digits, false).pi(); }

inline ApproxReal eval_formal(const FormalSum& x, long digits);

inline ApproxReal eval_symbol(const Symbol& s, long digits) {
    switch (s.kind) {
        case Kind::DZ: return zeta_double(s.a, s.b, digits);
        case Kind::Z: return zeta_single(s.a, digits);
        case Kind::P: return zeta_product(s.a, s.b, digits);
        case Kind::T: return eval_formal(tornheim_expand(s.a, s.b, s.c), digits);
    }
    throw std::logic_error("eval_symbol: unknown symbol kind");
}

inline ApproxReal eval_formal(const FormalSum& x, long digits) {
    if (x.empty()) return ApproxReal(64);  // exact zero
    ApproxReal acc(64);
    for (const auto& [sym, c] : x.terms()) acc += eval_symbol(sym, digits).scaled_by(c);
    return acc;
}

// Evaluates x and also reports a power-of-ten exponent bounding the largest
// single term magnitude (LONG_MIN for the empty sum). Residual thresholds
// scale by this so near-cancelling sums of huge terms are judged fairly.
inline std::pair<ApproxReal, long> eval_formal_with_magnitude(const FormalSum& x, long digits) {
    ApproxReal acc(64);
    long mag = LONG_MIN;
    for (const auto& [sym, c] : x.terms()) {
        ApproxReal t = eval_symbol(sym, digits).scaled_by(c);
        mag = std::max(mag, t.magnitude_exp10());
        acc += t;
    }
    return {std::move(acc), mag};
}

// primary Tornheim path: the expansion into double zetas, evaluated exactly
inline ApproxReal tornheim(int r, int q, int p, long digits) {
    return eval_formal(tornheim_expand(r, q, p), digits);
}

}  // namespace dzv
