#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "dzv/rational.hpp"
#include "dzv/symbols.hpp"

// Brute-force cross-check path: direct partial summation in double precision,
// with tails bracketed by first-order Euler-Maclaurin bounds. Everything here
// is independent of the high-precision evaluator; agreement between the two
// is what the numeric test suites certify.

namespace dzv {

struct Iv {
    double lo = 0;
    double hi = 0;
    double mid() const { return 0.5 * (lo + hi); }
    double rad() const { return 0.5 * (hi - lo); }
    bool contains(double x) const { return lo <= x && x <= hi; }
};

inline Iv iv(double x) { return {x, x}; }
inline Iv iv(double a, double b) { return {std::min(a, b), std::max(a, b)}; }
inline Iv operator+(Iv a, Iv b) { return {a.lo + b.lo, a.hi + b.hi}; }
inline Iv operator-(Iv a, Iv b) { return {a.lo - b.hi, a.hi - b.lo}; }
inline Iv operator*(Iv a, Iv b) {
    double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}
inline Iv scale(Iv a, double c) { return c >= 0 ? Iv{c * a.lo, c * a.hi} : Iv{c * a.hi, c * a.lo}; }
inline Iv widen(Iv a, double e) { return {a.lo - e, a.hi + e}; }

namespace brute_detail {

constexpr double kEulerGamma = 0.5772156649015328606;
// flat padding for double rounding in the partial sums; orders of magnitude
// above any worst-case accumulation bound at the N values used here
constexpr double kRoundPad = 1e-9;

// Sum_{s>N} s^-c for integer c >= 2, via two Euler-Maclaurin correction terms;
// the remainder is bounded by four times the first omitted term.
inline Iv tau(int c, long N) {
    if (c < 2) throw std::invalid_argument("brute tau: exponent must be at least 2");
    double n = static_cast<double>(N);
    double integral = std::pow(n, 1.0 - c) / (c - 1);
    double mid = integral - std::pow(n, -static_cast<double>(c)) / 2 +
                 c / 12.0 * std::pow(n, -c - 1.0);
    double rem = 4.0 * c * (c + 1.0) * (c + 2.0) / 720.0 * std::pow(n, -c - 3.0);
    return widen(iv(mid), rem + 1e-14 * std::fabs(integral));
}

// Sum_{s>N} s^-c ln s; g'' > 0 on [N, inf) so the first-order remainder is
// bounded by |g'(N)|/12.
inline Iv log_tail(int c, long N) {
    double n = static_cast<double>(N);
    double ln = std::log(n);
    double integral = std::pow(n, 1.0 - c) * (ln / (c - 1) + 1.0 / ((c - 1.0) * (c - 1.0)));
    double g = std::pow(n, -static_cast<double>(c)) * ln;
    double gp = std::pow(n, -c - 1.0) * (1.0 - c * ln);
    double mid = integral - g / 2 - gp / 12;
    return widen(iv(mid), std::fabs(gp) / 12 + 1e-14 * std::fabs(integral));
}

inline double power_partial(int a, long N) {
    double acc = 0;
    for (long n = N; n >= 1; --n) acc += std::pow(static_cast<double>(n), -static_cast<double>(a));
    return acc;
}

}  // namespace brute_detail

inline Iv zeta_brute(int a, long N) {
    if (a < 2) throw std::invalid_argument("zeta_brute: argument must be at least 2");
    Iv out = iv(brute_detail::power_partial(a, N)) + brute_detail::tau(a, N);
    return widen(out, brute_detail::kRoundPad);
}

// Sum_{s>N} s^-c H_a(s-1) where H_a(x) = sum_{j<=x} j^-a; c >= 2
inline Iv harmonic_power_tail(int c, int a, long N) {
    using namespace brute_detail;
    if (c < 2 || a < 1) throw std::invalid_argument("harmonic_power_tail: need c >= 2, a >= 1");
    if (a == 1) {
        // H_1(s-1) = ln(s-1) + gamma + 1/(2(s-1)) - 1/(12(s-1)^2) + theta/(120(s-1)^4)
        Iv t1 = tau(c + 1, N), t2 = tau(c + 2, N), t3 = tau(c + 3, N), t4 = tau(c + 4, N);
        Iv out = scale(tau(c, N), kEulerGamma);
        // ln(s-1) = ln s - 1/s - [0, 0.51]/s^2
        out = out + log_tail(c, N) - t1 - Iv{0, 0.51} * t2;
        // 1/(s-1) in [1/s, 1/s + 2/s^2], 1/(s-1)^2 in [1/s^2, 1/s^2 + 3/s^3]
        out = out + scale(t1, 0.5) + Iv{0, 1} * t2;
        out = out - scale(t2, 1.0 / 12) - Iv{0, 0.25} * t3;
        out = out + Iv{-1.0 / 60, 1.0 / 60} * t4;
        return out;
    }
    // H_a(s-1) = zeta(a) - tau(a, s-1), and (s-1)^(1-a) <= s^(1-a)(1 + 2(a-1)/s)
    Iv z = zeta_brute(a, N);
    Iv ta = tau(c + a - 1, N), tb = tau(c + a, N);
    Iv d{ta.lo / (a - 1), (ta.hi + 2.0 * (a - 1) * tb.hi) / (a - 1)};
    return z * tau(c, N) - d;
}

inline Iv dz_brute(int q, int p, long N) {
    Symbol s = dz(q, p);  // validates (q >= 2, p >= 1)
    (void)s;
    double acc = 0, h = 0;  // h tracks H_p(n-1)
    for (long n = 1; n <= N; ++n) {
        double nd = static_cast<double>(n);
        acc += std::pow(nd, -static_cast<double>(q)) * h;
        h += std::pow(nd, -static_cast<double>(p));
    }
    Iv out = iv(acc) + harmonic_power_tail(q, p, N);
    return widen(out, brute_detail::kRoundPad);
}

namespace brute_detail {

// Sum over s>N of s^-r W_qp(s), where W_qp(s) = sum_{n+m=s} n^-q m^-p, via the
// partial-fraction split of each diagonal row into harmonic pieces
inline Iv t_tail(int r, int q, int p, long N) {
    Iv out{0, 0};
    for (int a = 1; a <= q; ++a) {
        double c = binomial(p + q - a - 1, p - 1).get_d();
        out = out + scale(harmonic_power_tail(r + q + p - a, a, N), c);
    }
    for (int b = 1; b <= p; ++b) {
        double c = binomial(p + q - b - 1, q - 1).get_d();
        out = out + scale(harmonic_power_tail(r + q + p - b, b, N), c);
    }
    return out;
}

inline std::vector<double> inv_powers(int e, long N) {
    std::vector<double> t(static_cast<size_t>(N) + 1, 0.0);
    for (long n = 1; n <= N; ++n) t[n] = std::pow(static_cast<double>(n), -static_cast<double>(e));
    return t;
}

}  // namespace brute_detail

inline Iv t_brute(int r, int q, int p, long N) {
    Symbol s = tt(r, q, p);  // validates convergence constraints
    r = s.a;
    q = s.b;
    p = s.c;
    if (p == 0) return dz_brute(r, q, N);
    auto nq = brute_detail::inv_powers(q, N);
    auto np = brute_detail::inv_powers(p, N);
    double acc = 0;
    for (long sum = 2; sum <= N; ++sum) {
        double w = 0;
        for (long n = 1; n < sum; ++n) w += nq[n] * np[sum - n];
        acc += std::pow(static_cast<double>(sum), -static_cast<double>(r)) * w;
    }
    Iv out = iv(acc) + brute_detail::t_tail(r, q, p, N);
    return widen(out, brute_detail::kRoundPad);
}

// Every double zeta and Tornheim symbol of weight 3..wmax, brute-forced in a
// shared pass per (q, p) pair so each diagonal row is computed once.
inline std::map<Symbol, Iv> brute_sweep(int wmax, long N) {
    if (wmax < 3) throw std::invalid_argument("brute_sweep: weight cap must be at least 3");
    std::map<Symbol, Iv> out;
    // boundary Tornheims T(r, q, 0) canonicalize to these same DZ symbols
    for (int k = 3; k <= wmax; ++k)
        for (int q = 2; q <= k - 1; ++q) out[dz(q, k - q)] = dz_brute(q, k - q, N);
    std::vector<std::vector<double>> pows(static_cast<size_t>(wmax) - 1);
    for (int e = 1; e <= wmax - 2; ++e) pows[e] = brute_detail::inv_powers(e, N);
    for (int q = 1; q <= wmax - 2; ++q) {
        for (int p = 1; p <= q && q + p <= wmax - 1; ++p) {
            int rmax = wmax - q - p;
            std::vector<double> acc(static_cast<size_t>(rmax) + 1, 0.0);
            const double* nq = pows[q].data();
            const double* np = pows[p].data();
            for (long sum = 2; sum <= N; ++sum) {
                double w = 0;
                for (long n = 1; n < sum; ++n) w += nq[n] * np[sum - n];
                double sp = 1.0 / static_cast<double>(sum);
                for (int r = 1; r <= rmax; ++r) {
                    acc[r] += sp * w;
                    sp /= static_cast<double>(sum);
                }
            }
            for (int r = 1; r <= rmax; ++r) {
                Iv v = iv(acc[r]) + brute_detail::t_tail(r, q, p, N);
                out[tt(r, q, p)] = widen(v, brute_detail::kRoundPad);
            }
        }
    }
    return out;
}

}  // namespace dzv
