#pragma once

#include <map>
#include <string>
#include <tuple>

#include "dzv/bernoulli.hpp"
#include "dzv/symbols.hpp"

namespace dzv {

namespace detail {
inline std::string args1(const char* name, int a) {
    return std::string(name) + "(" + std::to_string(a) + ")";
}
inline std::string args2(const char* name, int a, int b) {
    return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}
inline std::string args3(const char* name, int a, int b, int c) {
    return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + "," +
           std::to_string(c) + ")";
}
}  // namespace detail

// Euler's formula: 2 zeta(k-1,1) = (k-1) zeta(k) - sum_{j=2}^{k-2} zeta(j) zeta(k-j).
inline Relation euler_top(int k) {
    if (k < 3) throw std::invalid_argument("euler_top: k must be >= 3");
    FormalSum lhs;
    lhs.add(dz(k - 1, 1), 2);
    lhs.add(zz(k), 1 - k);
    for (int j = 2; j <= k - 2; ++j) lhs.add(pp(j, k - j), 1);
    return {lhs, QuotientMode::Exact, detail::args1("euler_top", k)};
}

// Harmonic product: zeta(a) zeta(b) = zeta(a,b) + zeta(b,a) + zeta(a+b).
inline Relation stuffle(int a, int b) {
    if (a < 2 || b < 2) throw std::invalid_argument("stuffle: indices must be >= 2 (zeta(1) diverges)");
    FormalSum lhs;
    lhs.add(pp(a, b), 1);
    lhs.add(dz(a, b), -1);
    lhs.add(dz(b, a), -1);
    lhs.add(zz(a + b), -1);
    return {lhs, QuotientMode::Exact, detail::args2("stuffle", a, b)};
}

// T(r,q,p) = T(r+1,q-1,p) + T(r+1,q,p-1), from 1/(nm) = (1/n + 1/m)/(n+m).
inline Relation tornheim_recursion(int r, int q, int p) {
    if (r < 1) throw std::invalid_argument("tornheim_recursion: r must be >= 1");
    if (q < 1 || p < 1) throw std::invalid_argument("tornheim_recursion: q and p must be >= 1");
    FormalSum lhs;
    lhs.add(tt(r, q, p), 1);
    lhs.add(tt(r + 1, q - 1, p), -1);
    lhs.add(tt(r + 1, q, p - 1), -1);
    return {lhs, QuotientMode::Exact, detail::args3("tornheim_recursion", r, q, p)};
}

// Exact expansion of T(r,q,p) as a nonnegative-integer combination of DZ
// symbols, by iterating the recursion down to the T(.,0,.) boundary.
inline FormalSum tornheim_expand(int r, int q, int p) {
    if (r < 1 || q < 0 || p < 0 || q + p < 1)
        throw std::invalid_argument("tornheim_expand: need r >= 1, q,p >= 0, q+p >= 1");
    if ((q == 0 || p == 0) && r < 2)
        throw std::invalid_argument("tornheim_expand: boundary T(1,0,p) is divergent territory, needs r >= 2");
    if (q < p) std::swap(q, p);
    if (p == 0) return FormalSum::single(dz(r, q));
    thread_local std::map<std::tuple<int, int, int>, FormalSum> memo;
    auto key = std::make_tuple(r, q, p);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    FormalSum out = tornheim_expand(r + 1, q - 1, p) + tornheim_expand(r + 1, q, p - 1);
    return memo.emplace(std::move(key), std::move(out)).first->second;
}

// Lemma (i): (-1)^r T(r,q,p) + (-1)^q T(q,p,r) + (-1)^p T(p,r,q) is a rational
// multiple of zeta(k). Emitted with each T expanded to DZ symbols.
inline Relation cyclic(int r, int q, int p) {
    if (r < 1 || q < 1 || p < 1) throw std::invalid_argument("cyclic: all indices must be >= 1");
    auto sgn = [](int x) { return x % 2 == 0 ? 1 : -1; };
    FormalSum lhs = tornheim_expand(r, q, p).scaled(sgn(r));
    lhs += tornheim_expand(q, p, r).scaled(sgn(q));
    lhs += tornheim_expand(p, r, q).scaled(sgn(p));
    return {lhs, QuotientMode::ModZetaK, detail::args3("cyclic", r, q, p)};
}

// The Boyadzhiev congruence: T(r,q,p) = (-1)^p sum_{j=1}^{r-1}
// C(p+r-j-2, p-1) zeta(j+1, k-j-1) modulo PZ_k. T stays symbolic.
inline Relation boyadzhiev_mod(int r, int q, int p) {
    if (p < 2) throw std::invalid_argument("boyadzhiev_mod: p must be >= 2");
    if (q < 0) throw std::invalid_argument("boyadzhiev_mod: q must be >= 0");
    if (r < 1) throw std::invalid_argument("boyadzhiev_mod: r must be >= 1");
    if (q + r < 2) throw std::invalid_argument("boyadzhiev_mod: q+r must be >= 2");
    int k = r + q + p;
    int sgn = (p % 2 == 0) ? 1 : -1;
    FormalSum lhs;
    lhs.add(tt(r, q, p), 1);
    for (int j = 1; j <= r - 1; ++j)
        lhs.add(dz(j + 1, k - j - 1), rat(Integer(-sgn) * binomial(p + r - j - 2, p - 1)));
    return {lhs, QuotientMode::ModPZ, detail::args3("boyadzhiev_mod", r, q, p)};
}

// Rearranged recursion instance T(a,b,1) = T(a-1,b,2) - T(a,b-1,2).
inline Relation torn_p1_rewrite(int a, int b) {
    if (a < 2) throw std::invalid_argument("torn_p1_rewrite: a must be >= 2");
    if (b < 1) throw std::invalid_argument("torn_p1_rewrite: b must be >= 1");
    FormalSum lhs;
    lhs.add(tt(a, b, 1), 1);
    lhs.add(tt(a - 1, b, 2), -1);
    lhs.add(tt(a, b - 1, 2), 1);
    return {lhs, QuotientMode::Exact, detail::args2("torn_p1_rewrite", a, b)};
}

// Lemma (iii): for odd r, even k, 2 zeta(r,k-r) + (k-r) zeta(r-1,k-r+1) plus a
// tail supported on first indices <= r-2 lies in PZ_k. Equals the expansion of
// boyadzhiev_mod(r,0,k-r), whose T symbol collapses to DZ(r,k-r).
inline Relation descent(int r, int k) {
    if (k % 2 != 0) throw std::invalid_argument("descent: k must be even");
    if (r % 2 == 0) throw std::invalid_argument("descent: r must be odd");
    if (r < 3 || r > k - 3) throw std::invalid_argument("descent: need 3 <= r <= k-3");
    FormalSum lhs;
    lhs.add(dz(r, k - r), 2);
    lhs.add(dz(r - 1, k - r + 1), k - r);
    for (int j = 1; j <= r - 3; ++j)
        lhs.add(dz(j + 1, k - j - 1), rat(binomial(k - j - 2, k - r - 1)));
    return {lhs, QuotientMode::ModPZ, detail::args2("descent", r, k)};
}

// Sum formula: sum of zeta(odd, even) over odd first indices equals zeta(k)/4.
inline Relation gkz_sum(int k) {
    if (k % 2 != 0 || k < 4) throw std::invalid_argument("gkz_sum: k must be even and >= 4");
    FormalSum lhs;
    for (int j = 3; j <= k - 1; j += 2) lhs.add(dz(j, k - j), 1);
    lhs.add(zz(k), rat(-1, 4));
    return {lhs, QuotientMode::Exact, detail::args1("gkz_sum", k)};
}

// zeta(n)/pi^n for even n, via zeta(n) = (-1)^{n/2+1} B_n (2 pi)^n / (2 n!).
inline Rational zeta_even_over_pi_power(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("zeta_even_over_pi_power: n must be even and >= 2");
    Rational v = rat(Integer(1) << n) * bernoulli(n) / rat(2 * factorial(n));
    if ((n / 2 + 1) % 2 == 0) return Rational(v);
    return Rational(-v);
}

// The exact rational q with zeta(a) zeta(k-a) = q zeta(k), both sides even.
inline Rational even_product_ratio(int a, int k) {
    int b = k - a;
    if (a < 2 || b < 2 || a % 2 != 0 || b % 2 != 0)
        throw std::invalid_argument("even_product_ratio: a and k-a must be even and >= 2");
    return Rational(zeta_even_over_pi_power(a) * zeta_even_over_pi_power(b) /
                    zeta_even_over_pi_power(k));
}

// Normal form over PZ_k: every P(even,even) term folds into the Z(k)
// coefficient, so only Z(k) and P(odd,odd) survive. Other kinds pass through.
inline FormalSum merge_even_products(const FormalSum& x) {
    FormalSum out;
    for (const auto& [s, c] : x.terms()) {
        if (s.kind == Kind::P && s.a % 2 == 0)
            out.add(zz(s.a + s.b), Rational(c * even_product_ratio(s.a, s.a + s.b)));
        else
            out.add(s, c);
    }
    return out;
}

}  // namespace dzv
