#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "dzv/lll.hpp"
#include "dzv/reconstruct.hpp"
#include "dzv/relations.hpp"
#include "dzv/symbols.hpp"
#include "dzv/zeta_eval.hpp"

namespace dzv {

// no rational/lattice candidate emerged at the working precision
struct ReconstructionError : std::runtime_error {
    explicit ReconstructionError(const std::string& m) : std::runtime_error(m) {}
};

// a candidate emerged but failed the doubled-precision recheck
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& m) : std::runtime_error(m) {}
};

// the DZ and T terms of a sum, dropping any Z/P part
inline FormalSum non_pz_part(const FormalSum& x) {
    FormalSum out;
    for (const auto& [s, c] : x.terms())
        if (s.kind == Kind::DZ || s.kind == Kind::T) out.add(s, c);
    return out;
}

namespace detail {

// residual <= 10^threshold, where the threshold scales with the largest term
inline bool residual_ok(const std::pair<ApproxReal, long>& r, long digits) {
    long thr = -(2 * digits - 15) + std::max(0L, r.second == LONG_MIN ? 0L : r.second);
    return r.first.abs_at_most_pow10(thr);
}

}  // namespace detail

// Decomposes the value of x over the weight-k PZ basis: returns c with
// eval(x) = sum c_s * value(s), certified by a doubled-precision recheck.
// Retries at escalating precision before giving up; *digits_used reports the
// precision that succeeded.
inline std::optional<std::map<Symbol, Rational>> pz_decompose(int k, const FormalSum& x, long digits0,
                                                              int stages = 4, long* digits_used = nullptr) {
    long d = std::max(digits0, 25L);
    for (int stage = 0; stage < stages; ++stage) {
        const PzDecoder& dec = detail::cached_decoder(k, d);
        if (auto cand = dec.decode(eval_formal(x, d))) {
            FormalSum residue = x;
            for (const auto& [sym, c] : *cand) residue.add(sym, Rational(-c));
            if (detail::residual_ok(eval_formal_with_magnitude(residue, 2 * d), d)) {
                if (digits_used) *digits_used = d;
                return cand;
            }
        }
        d = (d * 8) / 5 + 10;
    }
    return std::nullopt;
}

// Completes the DZ/T part of a quotient relation to an exact identity by
// recovering the Z/P tail numerically: continued fractions for a ModZetaK
// relation, lattice reduction over the PZ basis for a ModPZ one. The result
// evaluates to zero and carries a "numerically-lifted" marker; the recovered
// tail is in merged normal form (Z(k) plus odd products only).
inline Relation lift_mod_relation_to_exact(const Relation& rel, long digits) {
    std::string label = rel.label + "; numerically-lifted";
    FormalSum dzt = non_pz_part(rel.lhs);
    if (dzt.empty()) return {merge_even_products(rel.lhs), QuotientMode::Exact, label};
    int k = dzt.weight();
    FormalSum lhs = dzt;
    if (rel.mode == QuotientMode::ModZetaK) {
        ApproxReal lambda = eval_formal(dzt, digits) / zeta_single(k, digits);
        std::optional<Rational> c;
        try {
            c = rational_reconstruct(lambda, denominator_bound(digits));
        } catch (const InsufficientPrecision& e) {
            throw ReconstructionError(rel.label + ": " + e.what());
        }
        if (!c)
            throw ReconstructionError(rel.label + ": no rational multiple of Z(" + std::to_string(k) +
                                      ") within the denominator bound");
        lhs.add(zz(k), Rational(-*c));
    } else {
        const PzDecoder& dec = detail::cached_decoder(k, digits);
        auto cand = dec.decode(eval_formal(dzt, digits));
        if (!cand)
            throw ReconstructionError(rel.label + ": no PZ_" + std::to_string(k) +
                                      " combination within the denominator bound");
        for (const auto& [sym, c] : *cand) lhs.add(sym, Rational(-c));
    }
    auto r2 = eval_formal_with_magnitude(lhs, 2 * digits);
    if (!detail::residual_ok(r2, digits))
        throw VerificationError(rel.label + ": recovered tail fails the doubled-precision recheck");
    return {lhs, QuotientMode::Exact, label};
}

}  // namespace dzv
