#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "dzv/approx.hpp"
#include "dzv/rational.hpp"
#include "dzv/reconstruct.hpp"
#include "dzv/symbols.hpp"
#include "dzv/zeta_eval.hpp"

namespace dzv {

using ZVec = std::vector<Integer>;

inline Integer dot(const ZVec& a, const ZVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// In-place LLL reduction with delta = 3/4, all-integer Gram-Schmidt
// bookkeeping (d[i] = Gram determinant of the first i rows,
// lambda[i][j] = d[j+1] * mu_ij). Rows must be linearly independent.
inline void lll_reduce(std::vector<ZVec>& b) {
    const std::size_t n = b.size();
    if (n <= 1) return;
    std::vector<Integer> d(n + 1);
    std::vector<std::vector<Integer>> lam(n, std::vector<Integer>(n, Integer(0)));
    d[0] = 1;
    d[1] = dot(b[0], b[0]);
    if (d[1] == 0) throw std::invalid_argument("lll_reduce: zero row");

    auto red = [&](std::size_t k, std::size_t l) {
        Integer two = 2 * lam[k][l];
        if (abs(two) <= d[l + 1]) return;
        Integer q;
        // nearest integer to lam[k][l] / d[l+1], d > 0
        mpz_fdiv_q(q.get_mpz_t(), Integer(two + d[l + 1]).get_mpz_t(),
                   Integer(2 * d[l + 1]).get_mpz_t());
        for (std::size_t i = 0; i < b[k].size(); ++i) b[k][i] -= q * b[l][i];
        for (std::size_t i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
        lam[k][l] -= q * d[l + 1];
    };

    std::size_t kmax = 0;
    std::size_t k = 1;
    while (k < n) {
        if (k > kmax) {
            for (std::size_t j = 0; j <= k; ++j) {
                Integer u = dot(b[k], b[j]);
                for (std::size_t i = 0; i < j; ++i) {
                    Integer t = d[i + 1] * u - lam[k][i] * lam[j][i];
                    mpz_divexact(u.get_mpz_t(), t.get_mpz_t(), d[i].get_mpz_t());
                }
                if (j < k)
                    lam[k][j] = u;
                else {
                    if (u <= 0) throw std::invalid_argument("lll_reduce: rows are linearly dependent");
                    d[k + 1] = u;
                }
            }
            kmax = k;
        }
        red(k, k - 1);
        Integer lovasz_lhs = 4 * (d[k + 1] * d[k - 1] + lam[k][k - 1] * lam[k][k - 1]);
        Integer lovasz_rhs = 3 * d[k] * d[k];
        if (lovasz_lhs < lovasz_rhs) {
            std::swap(b[k], b[k - 1]);
            for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
            Integer lbar = lam[k][k - 1];
            Integer bnew;
            {
                Integer t = d[k - 1] * d[k + 1] + lbar * lbar;
                mpz_divexact(bnew.get_mpz_t(), t.get_mpz_t(), d[k].get_mpz_t());
            }
            for (std::size_t i = k + 1; i <= kmax; ++i) {
                Integer t = lam[i][k];
                Integer u = d[k + 1] * lam[i][k - 1] - lbar * t;
                mpz_divexact(lam[i][k].get_mpz_t(), u.get_mpz_t(), d[k].get_mpz_t());
                Integer v = bnew * t + lbar * lam[i][k];
                mpz_divexact(lam[i][k - 1].get_mpz_t(), v.get_mpz_t(), d[k + 1].get_mpz_t());
            }
            d[k] = bnew;
            if (k > 1) --k;
        } else {
            for (std::size_t l = k - 1; l-- > 0;) red(k, l);
            ++k;
        }
    }
}

// One combination x = sum c_s * s over the weight-k PZ basis
// {Z(k)} u {P(a,k-a) : a odd, 3 <= a <= k/2}, recovered from a single real
// number by lattice reduction.
class PzDecoder {
  public:
    PzDecoder(int k, long digits) : k_(k), digits_(digits) {
        if (k < 4 || k % 2 != 0) throw std::invalid_argument("PzDecoder: even weight >= 4 required");
        if (digits < 20) throw std::invalid_argument("PzDecoder: need at least 20 digits");
        scale_ = pow10_int(digits);
        den_bound_ = denominator_bound(digits);
        basis_.push_back(zz(k));
        for (int a = 3; 2 * a <= k; a += 2) basis_.push_back(pp(a, k - a));
        const std::size_t n = basis_.size();
        for (const Symbol& s : basis_) values_.push_back(eval_symbol(s, digits_));
        rows_.assign(n, ZVec(n + 1, Integer(0)));
        for (std::size_t i = 0; i < n; ++i) {
            rows_[i][0] = scaled_int(values_[i]);
            rows_[i][1 + i] = 1;
        }
        if (n > 1) lll_reduce(rows_);
    }

    int weight() const { return k_; }
    long digits() const { return digits_; }
    const std::vector<Symbol>& basis() const { return basis_; }
    const std::vector<ApproxReal>& values() const { return values_; }

    // nullopt when no lattice vector involves x with small enough
    // coefficients; any result still needs independent verification at
    // higher precision before being trusted.
    std::optional<std::map<Symbol, Rational>> decode(const ApproxReal& x) const {
        const std::size_t n = basis_.size();
        if (n == 1) {
            ApproxReal lam = x / values_[0];
            std::optional<Rational> c;
            try {
                c = rational_reconstruct(lam, den_bound_);
            } catch (const InsufficientPrecision&) {
                return std::nullopt;
            }
            if (!c) return std::nullopt;
            std::map<Symbol, Rational> out;
            if (*c != 0) out[basis_[0]] = *c;
            return out;
        }
        std::vector<ZVec> rows(n + 1, ZVec(n + 2, Integer(0)));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j <= n; ++j) rows[i][j] = rows_[i][j];
        }
        rows[n][0] = scaled_int(x);
        rows[n][n + 1] = 1;
        lll_reduce(rows);
        const ZVec* best = nullptr;
        Integer best_norm;
        for (const ZVec& r : rows) {
            if (r[n + 1] == 0) continue;
            Integer norm = dot(r, r);
            if (!best || norm < best_norm) {
                best = &r;
                best_norm = norm;
            }
        }
        if (!best) return std::nullopt;
        const Integer& m0 = (*best)[n + 1];
        std::map<Symbol, Rational> out;
        for (std::size_t i = 0; i < n; ++i) {
            Rational c = rat(Integer(-(*best)[1 + i]), m0);
            if (c == 0) continue;
            if (abs(c.get_den()) > den_bound_) return std::nullopt;
            out[basis_[i]] = c;
        }
        return out;
    }

  private:
    Integer scaled_int(const ApproxReal& v) const {
        mpfr_t t;
        mpfr_init2(t, mpfr_get_prec(v.value()) + 64);
        mpfr_mul_z(t, v.value(), scale_.get_mpz_t(), MPFR_RNDN);
        Integer out;
        mpfr_get_z(out.get_mpz_t(), t, MPFR_RNDN);
        mpfr_clear(t);
        return out;
    }

    int k_;
    long digits_;
    Integer scale_;
    Integer den_bound_;
    std::vector<Symbol> basis_;
    std::vector<ApproxReal> values_;
    std::vector<ZVec> rows_;
};

namespace detail {

inline const PzDecoder& cached_decoder(int k, long digits) {
    thread_local std::map<std::pair<int, long>, std::unique_ptr<PzDecoder>> cache;
    auto key = std::make_pair(k, digits);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<PzDecoder>(k, digits)).first;
    return *it->second;
}

}  // namespace detail

}  // namespace dzv
