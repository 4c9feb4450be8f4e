#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "dzv/lift.hpp"
#include "dzv/lll.hpp"
#include "dzv/reconstruct.hpp"
#include "dzv/symbols.hpp"
#include "dzv/zeta_eval.hpp"

namespace dzv {

// Numerical certification of one relation. residual_exp10 is a rigorous
// bound: |residual| <= 10^residual_exp10 (LONG_MIN when the residual ball is
// exactly zero); residual is the same bound as a double, 0.0 on underflow.
struct VerifyReport {
    std::string label;
    QuotientMode mode{QuotientMode::Exact};
    long digits = 0;
    bool pass = false;
    double residual = 0.0;
    long residual_exp10 = 0;
    std::map<Symbol, Rational> reconstructed;
};

namespace detail {

inline void record_residual(VerifyReport& rep, const ApproxReal& r) {
    mpfr_t up;
    mpfr_init2(up, 64);
    r.abs_upper(up);
    rep.residual = mpfr_get_d(up, MPFR_RNDU);
    mpfr_clear(up);
    rep.residual_exp10 = r.magnitude_exp10();
}

}  // namespace detail

// Checks a relation numerically at the given working precision. Exact
// relations must evaluate to zero within 10^-(digits-10) of the largest term.
// Quotient relations first have their Z(k) multiple (continued fractions) or
// PZ combination (lattice reduction) reconstructed, then the completed
// identity is rechecked at doubled precision within 10^-(2 digits-15), again
// scaled by the largest term. Reconstruction failure reports pass = false
// with the raw evaluation as the residual.
inline VerifyReport verify_relation(const Relation& rel, long digits) {
    VerifyReport rep;
    rep.label = rel.label;
    rep.mode = rel.mode;
    rep.digits = digits;
    if (rel.mode == QuotientMode::Exact) {
        auto [r, mag] = eval_formal_with_magnitude(rel.lhs, digits);
        detail::record_residual(rep, r);
        long thr = -(digits - 10) + std::max(0L, mag == LONG_MIN ? 0L : mag);
        rep.pass = r.abs_at_most_pow10(thr);
        return rep;
    }
    int k = rel.lhs.weight();
    std::map<Symbol, Rational> rec;
    if (rel.mode == QuotientMode::ModZetaK) {
        ApproxReal lambda = eval_formal(rel.lhs, digits) / zeta_single(k, digits);
        std::optional<Rational> c;
        try {
            c = rational_reconstruct(lambda, denominator_bound(digits));
        } catch (const InsufficientPrecision&) {
            c = std::nullopt;
        }
        if (!c) {
            detail::record_residual(rep, eval_formal(rel.lhs, digits));
            return rep;
        }
        if (*c != 0) rec[zz(k)] = *c;
    } else {
        const PzDecoder& dec = detail::cached_decoder(k, digits);
        auto cand = dec.decode(eval_formal(rel.lhs, digits));
        if (!cand) {
            detail::record_residual(rep, eval_formal(rel.lhs, digits));
            return rep;
        }
        rec = std::move(*cand);
    }
    FormalSum completed = rel.lhs;
    for (const auto& [sym, c] : rec) completed.add(sym, Rational(-c));
    auto [r2, mag2] = eval_formal_with_magnitude(completed, 2 * digits);
    detail::record_residual(rep, r2);
    long thr = -(2 * digits - 15) + std::max(0L, mag2 == LONG_MIN ? 0L : mag2);
    rep.pass = r2.abs_at_most_pow10(thr);
    rep.reconstructed = std::move(rec);
    return rep;
}

}  // namespace dzv
