#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dzv/lift.hpp"
#include "dzv/matrix.hpp"
#include "dzv/reduce.hpp"
#include "dzv/relations.hpp"
#include "dzv/verify.hpp"

namespace dzv {

// One relation sum_j c_j zeta(j, k-j) = 0 over odd j in [3, k-1], carrying the
// distinguished index i whose pair is the only asymmetric one in the middle
// band. Coefficients are integer, coprime, lowest-j entry positive.
struct OddOddEquation {
    int k = 0;
    int i = 0;
    std::map<int, Rational> coefficients;  // every odd j in [3, k-1]

    friend bool operator==(const OddOddEquation&, const OddOddEquation&) = default;
};

inline FormalSum equation_sum(const OddOddEquation& e) {
    FormalSum f;
    for (const auto& [j, c] : e.coefficients) f.add(dz(j, e.k - j), c);
    return f;
}

// raised when completing an equation would force a nonzero Z(k) coefficient,
// i.e. the right-hand side cannot be exactly zero
struct ZkObstruction : std::runtime_error {
    explicit ZkObstruction(const std::string& m) : std::runtime_error(m) {}
};

// The three spanning families of DZ_k: low first indices, high first indices,
// and symmetrized middle pairs. Their count is asserted to be k/2 - dim M_k.
inline std::vector<FormalSum> spanning_set_dz(int k) {
    if (k < 4 || k % 2 != 0) throw std::invalid_argument("spanning_set_dz: k must be even and >= 4");
    int lo = (k + 2) / 3;
    std::vector<FormalSum> out;
    for (int j = 3; j <= lo; j += 2) out.push_back(FormalSum::single(dz(j, k - j)));
    for (int j = 1; j <= lo; j += 2) out.push_back(FormalSum::single(dz(k - j, j)));
    for (int j = (k + 5) / 3; 2 * j <= k; ++j) {
        if (j % 2 == 0) continue;
        FormalSum s;
        s.add(dz(j, k - j), 1);
        s.add(dz(k - j, j), 1);
        out.push_back(s);
    }
    int expect = k / 2 - modular_form_dim(k);
    if (static_cast<int>(out.size()) != expect)
        throw std::logic_error("spanning_set_dz: family count mismatch at k=" + std::to_string(k));
    return out;
}

namespace detail {

// DZ(k-1,1) rewritten over {Z(k)} u {P(odd,odd)}, from Euler's formula with
// even products folded
inline FormalSum euler_top_expansion(int k) {
    FormalSum r = euler_top(k).lhs;
    r.add(dz(k - 1, 1), -2);
    return merge_even_products(r.scaled(rat(-1, 2)));
}

inline OddOddEquation build_equation(int k, int i, const std::vector<int>& low,
                                     const std::map<int, Rational>& d,
                                     const std::map<Symbol, Rational>& dec) {
    auto dec_coeff = [&](const Symbol& s) {
        auto it = dec.find(s);
        return it == dec.end() ? Rational(0) : it->second;
    };
    FormalSum euler = euler_top_expansion(k);
    bool half_odd = (k / 2) % 2 == 1;

    // the Z(k) balance: everything the equation will ever contribute to the
    // Z(k) coordinate is lambda + sum of all mu plus w times this denominator
    Rational denom = euler.coeff(zz(k));
    Rational lam_sum = dec_coeff(zz(k));
    for (int a = 3; 2 * a <= k; a += 2) {
        denom += euler.coeff(pp(a, k - a));
        lam_sum += dec_coeff(pp(a, k - a));
    }
    Rational w;
    if (denom == 0) {
        if (lam_sum != 0)
            throw ZkObstruction("equation k=" + std::to_string(k) + " i=" + std::to_string(i) +
                                ": completing forces the Z(k) coefficient " + lam_sum.get_str() +
                                ", right-hand side cannot vanish");
        w = 0;
    } else {
        w = Rational(-lam_sum / denom);
    }

    std::map<int, Rational> c;
    for (int j = 3; j + 3 <= k; j += 2) c[j] = 0;
    c[k - 1] = w;
    for (int j = 3; 2 * j < k; j += 2) {
        Rational t = Rational(-dec_coeff(pp(j, k - j)) - w * euler.coeff(pp(j, k - j)));
        c[j] += t;
        c[k - j] += t;
    }
    if (half_odd)
        c[k / 2] = Rational(-2 * (dec_coeff(pp(k / 2, k / 2)) + w * euler.coeff(pp(k / 2, k / 2))));
    c[i] += 1;
    for (int j : low) c[j] += d.at(j);

    // integer coprime form, lowest nonzero entry positive
    Integer l = 1, g = 0;
    for (const auto& [j, v] : c)
        if (v != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    for (const auto& [j, v] : c)
        if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(v.get_num() * (l / v.get_den())).get_mpz_t());
    Rational scale = rat(l, g);
    for (auto it = c.begin(); it != c.end(); ++it)
        if (it->second != 0 && it->second * scale < 0) {
            scale = -scale;
            break;
        } else if (it->second != 0) {
            break;
        }
    for (auto& [j, v] : c) v = Rational(v * scale);
    return {k, i, std::move(c)};
}

}  // namespace detail

// The dim M_k - 1 exact equations among weight-k zeta(odd,odd)'s: one per odd
// i in [floor((k+5)/3), k/2). Each is found by solving exactly for the
// combination of low-index columns that cancels the irreducible part of
// DZ(i,k-i), decomposing the resulting PZ_k member numerically with a
// doubled-precision certificate, and absorbing the Z(k) coordinate into the
// DZ(k-1,1) column through Euler's formula.
inline std::vector<OddOddEquation> nontrivial_equations(int k) {
    if (k < 4 || k % 2 != 0)
        throw std::invalid_argument("nontrivial_equations: k must be even and >= 4");
    std::vector<int> mid;
    for (int i = (k + 5) / 3; 2 * i < k; ++i)
        if (i % 2 == 1) mid.push_back(i);
    if (static_cast<int>(mid.size()) != modular_form_dim(k) - 1)
        throw std::logic_error("nontrivial_equations: middle index count mismatch at k=" +
                               std::to_string(k));
    if (mid.empty()) return {};

    std::vector<int> low;
    for (int j = 3; j <= (k + 2) / 3; j += 2) low.push_back(j);
    int m = (k - 2) / 6;
    if (static_cast<int>(low.size()) != m)
        throw std::logic_error("nontrivial_equations: low index count mismatch at k=" +
                               std::to_string(k));

    Reducer engine(k, std::vector<int>(m, 0));
    RationalMatrix rows(engine.generators().members);
    for (int j : low) {
        FormalSum f;
        for (const auto& [g, cf] : engine.reduce(j, k - j).coefficients) f.add(g, cf);
        rows.add_row(f);
    }

    std::vector<OddOddEquation> out;
    for (int i : mid) {
        std::vector<Rational> target(rows.ncols);
        for (const auto& [g, cf] : engine.reduce(i, k - i).coefficients) {
            std::size_t idx = 0;
            while (idx < rows.ncols && !(rows.column_basis[idx] == g)) ++idx;
            target[idx] = Rational(-cf);
        }
        auto dvec = solve(rows, target);
        if (!dvec)
            throw std::logic_error("nontrivial_equations: low-index reductions do not span at k=" +
                                   std::to_string(k));
        std::map<int, Rational> d;
        FormalSum f = FormalSum::single(dz(i, k - i));
        for (std::size_t r = 0; r < low.size(); ++r) {
            d[low[r]] = (*dvec)[r];
            f.add(dz(low[r], k - low[r]), (*dvec)[r]);
        }
        auto dec = pz_decompose(k, f, 40 + k / 2);
        if (!dec)
            throw std::runtime_error("nontrivial_equations: PZ decomposition failed at k=" +
                                     std::to_string(k) + " i=" + std::to_string(i));
        OddOddEquation eq = detail::build_equation(k, i, low, d, *dec);
        VerifyReport rep = verify_relation({equation_sum(eq), QuotientMode::Exact,
                                            "odd_odd_equation(" + std::to_string(k) + "," +
                                                std::to_string(i) + ")"},
                                           40);
        if (!rep.pass)
            throw std::runtime_error("nontrivial_equations: equation failed numeric check at k=" +
                                     std::to_string(k) + " i=" + std::to_string(i));
        out.push_back(std::move(eq));
    }
    return out;
}

}  // namespace dzv
