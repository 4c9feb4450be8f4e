#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dzv/relations.hpp"

namespace dzv {

inline int modular_form_dim(int k) {
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("modular_form_dim: k must be even and >= 2");
    return (k % 12 == 2) ? k / 12 : k / 12 + 1;
}

struct DimBounds {
    int dm_bound;  // generators of DZ_k mod PZ_k: floor((k-2)/6)
    int pz_bound;  // spanning bound for PZ_k: floor((k+2)/4)
    int mf_dim;    // dim M_k(SL_2(Z))
    int dz_bound;  // spanning bound for DZ_k: k/2 - mf_dim
};

inline DimBounds dim_bounds(int k) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("dim_bounds: k must be even and >= 2");
    DimBounds d{(k - 2) / 6, (k + 2) / 4, modular_form_dim(k), 0};
    d.dz_bound = k / 2 - d.mf_dim;
    if (d.dm_bound + d.pz_bound != d.dz_bound)
        throw std::logic_error("dim_bounds: counting identity failed");
    return d;
}

struct GeneratorSet {
    int k = 0;
    std::vector<int> epsilon;
    std::vector<Symbol> members;
};

inline GeneratorSet generator_set(int k, const std::vector<int>& epsilon) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("generator_set: k must be even and >= 2");
    int m = (k - 2) / 6;
    if (static_cast<int>(epsilon.size()) != m)
        throw std::invalid_argument("generator_set: epsilon must have length floor((k-2)/6)");
    GeneratorSet g{k, epsilon, {}};
    for (int j = 1; j <= m; ++j) {
        int e = epsilon[j - 1];
        if (e != 0 && e != 1)
            throw std::invalid_argument("generator_set: epsilon entries must be 0 or 1");
        g.members.push_back(dz(2 * j + e, k - 2 * j - e));
    }
    return g;
}

struct TraceEntry {
    std::string label;  // relation instance, e.g. "descent(3,12)"
    Symbol at;          // the symbol that relation rewrote
};

struct ReductionResult {
    Symbol input;
    std::map<Symbol, Rational> coefficients;  // over the generator set; zeros omitted
    QuotientMode mode = QuotientMode::ModPZ;
    std::vector<TraceEntry> trace;
};

// A DZ-combination lying in PZ_k whose highest first index r has nonzero
// coefficient, assembled from one cyclic sum plus Boyadzhiev images.
struct EliminationRow {
    FormalSum combo;
    std::vector<TraceEntry> trace;
};

namespace detail {

// DZ-sum congruent to T(a,b,c) mod PZ, read off the Boyadzhiev relation in the
// orientation given (c is the p slot; requires c >= 2 or an empty sum at a == 1).
inline FormalSum boyadzhiev_image(int a, int b, int c) {
    int k = a + b + c;
    int sgn = (c % 2 == 0) ? 1 : -1;
    FormalSum img;
    for (int j = 1; j <= a - 1; ++j)
        img.add(dz(j + 1, k - j - 1), rat(Integer(sgn) * binomial(c + a - j - 2, c - 1)));
    return img;
}

// Accumulate coef * (DZ-sum congruent to the canonical symbol t mod PZ).
inline void append_t_image(const Symbol& t, const Rational& coef, FormalSum& acc,
                           std::vector<TraceEntry>& trace) {
    int a = t.a, b = t.b, c = t.c;
    if (a == 1) {
        // empty Boyadzhiev sum: T(1,q,p) lies in PZ. When the canonical form
        // has c == 1, cite the orientation with p = b >= 2 instead.
        if (c >= 2)
            trace.push_back({args3("boyadzhiev_mod", 1, b, c), t});
        else if (b >= 2)
            trace.push_back({args3("boyadzhiev_mod", 1, 1, b), t});
        else
            throw std::logic_error("append_t_image: T(1,1,1) has no even-weight instance");
        return;
    }
    if (c >= 2) {
        trace.push_back({args3("boyadzhiev_mod", a, b, c), t});
        acc += boyadzhiev_image(a, b, c).scaled(coef);
        return;
    }
    // c == 1, a >= 2: one rewrite T(a,b,1) = T(a-1,b,2) - T(a,b-1,2), then map
    // each child in that raw orientation. Re-canonicalizing would fold the
    // second child back onto T(a,b,1) when b == 2.
    trace.push_back({args2("torn_p1_rewrite", a, b), t});
    auto child = [&](int rr, int qq, const Rational& cf) {
        if (qq == 0) {
            acc.add(dz(rr, 2), cf);  // boundary value, no relation involved
            return;
        }
        trace.push_back({args3("boyadzhiev_mod", rr, qq, 2), tt(rr, qq, 2)});
        if (rr == 1) return;
        acc += boyadzhiev_image(rr, qq, 2).scaled(cf);
    };
    child(a - 1, b, coef);
    child(a, b - 1, -coef);
}

}  // namespace detail

// Deterministic (q,p) with q+p = k-r for the cyclic elimination at first
// index r: largest admissible q <= floor(k/3), else the boundary pair
// (floor(k/3)+1, floor(k/3)).
inline std::pair<int, int> phase_b_choice(int k, int r) {
    int t = k / 3;
    int q = std::min(t, k - r - 1);
    int p = k - r - q;
    if (p >= 1 && p <= t) return {q, p};
    return {t + 1, t};
}

inline EliminationRow elimination_row(int k, int r) {
    if (k < 4 || k % 2 != 0)
        throw std::invalid_argument("elimination_row: k must be even and >= 4");
    if (r < k / 3 + 1 || r > k - 2)
        throw std::invalid_argument("elimination_row: need floor(k/3)+1 <= r <= k-2");
    auto [q, p] = phase_b_choice(k, r);
    if (q + p != k - r) throw std::logic_error("elimination_row: no admissible (p,q)");
    EliminationRow row;
    row.trace.push_back({detail::args3("cyclic", r, q, p), tt(r, q, p)});
    FormalSum tsum;
    tsum.add(tt(r, q, p), (r % 2 == 0) ? 1 : -1);
    tsum.add(tt(q, p, r), (q % 2 == 0) ? 1 : -1);
    tsum.add(tt(p, r, q), (p % 2 == 0) ? 1 : -1);
    for (const auto& [s, c] : tsum.terms()) detail::append_t_image(s, c, row.combo, row.trace);
    if (row.combo.coeff(dz(r, k - r)) == 0)
        throw std::logic_error("elimination_row: pivot coefficient vanished");
    return row;
}

// Mordell's T(k/3,k/3,k/3) in PZ_k, turned into a DZ-combination pivoted at
// first index k/3.
inline EliminationRow mordell_row(int k) {
    if (k < 6 || k % 6 != 0) throw std::invalid_argument("mordell_row: k must be divisible by 6");
    int r = k / 3;
    EliminationRow row;
    row.trace.push_back({detail::args3("cyclic", r, r, r), tt(r, r, r)});
    row.trace.push_back({detail::args3("boyadzhiev_mod", r, r, r), tt(r, r, r)});
    row.combo = detail::boyadzhiev_image(r, r, r);
    if (row.combo.coeff(dz(r, k - r)) == 0)
        throw std::logic_error("mordell_row: pivot coefficient vanished");
    return row;
}

// Reduces DZ(r, k-r) onto the epsilon generator set mod PZ_k, memoized per
// first index. Highest indices fall through Euler's formula, the middle band
// through cyclic eliminations (Mordell's at r = k/3), and the low band through
// the descent steered by epsilon.
class Reducer {
  public:
    Reducer(int k, const std::vector<int>& epsilon)
        : k_(k), m_((k - 2) / 6), gens_(generator_set(k, epsilon)) {}

    const GeneratorSet& generators() const { return gens_; }
    int weight() const { return k_; }

    ReductionResult reduce(int q0, int p0) {
        Symbol in = dz(q0, p0);  // rejects divergent inputs
        if ((q0 + p0) % 2 != 0) throw std::invalid_argument("reduce: weight must be even");
        if (q0 + p0 != k_) throw std::invalid_argument("reduce: weight differs from engine weight");
        const Step& top = step(q0);
        ReductionResult res;
        res.input = in;
        for (const auto& [sym, c] : top.value.terms()) res.coefficients.emplace(sym, c);
        res.mode = QuotientMode::ModPZ;
        std::set<int> seen;
        collect_trace(q0, seen, res.trace);
        return res;
    }

  private:
    struct Step {
        FormalSum value;  // over generator symbols
        std::vector<TraceEntry> own;
        std::vector<int> deps;  // first indices of steps this one substituted in
    };

    int k_;
    int m_;
    GeneratorSet gens_;
    std::map<int, Step> steps_;

    static void push_dep(Step& s, int r) {
        if (std::find(s.deps.begin(), s.deps.end(), r) == s.deps.end()) s.deps.push_back(r);
    }

    const Step& step(int r) {
        auto it = steps_.find(r);
        if (it != steps_.end()) return it->second;
        Step s = compute_step(r);
        return steps_.emplace(r, std::move(s)).first->second;
    }

    Step compute_step(int r) {
        if (r == k_ - 1) {
            Step s;
            s.own.push_back({detail::args1("euler_top", k_), dz(k_ - 1, 1)});
            return s;
        }
        if (r <= 2 * m_ + 1) return descent_step(r);
        if (k_ % 3 == 0 && r == k_ / 3) return solve_row(r, mordell_row(k_));
        return solve_row(r, elimination_row(k_, r));
    }

    // Solve row.combo = 0 mod PZ for DZ(r, k-r); every other term has a
    // strictly smaller first index.
    Step solve_row(int r, EliminationRow row) {
        Step s;
        s.own = std::move(row.trace);
        Rational alpha = row.combo.coeff(dz(r, k_ - r));
        FormalSum rest = row.combo;
        rest.add(dz(r, k_ - r), Rational(-alpha));
        for (const auto& [sym, c] : rest.terms()) {
            if (sym.a >= r) throw std::logic_error("reduce: elimination row not triangular");
            s.value += step(sym.a).value.scaled(Rational(-c / alpha));
            push_dep(s, sym.a);
        }
        return s;
    }

    // Slot j = r/2 owns first indices {2j, 2j+1}; descent(2j+1, k) trades the
    // non-generator of the pair for the generator plus lower-index terms.
    Step descent_step(int r) {
        int j = r / 2;
        int e = gens_.epsilon[j - 1];
        Step s;
        if (r == 2 * j + e) {
            s.value = FormalSum::single(dz(r, k_ - r));
            return s;
        }
        Relation d = descent(2 * j + 1, k_);
        s.own.push_back({d.label, dz(r, k_ - r)});
        Rational pivot = d.lhs.coeff(dz(r, k_ - r));  // 2 for odd r, k-2j-1 for even r
        FormalSum rest = d.lhs;
        rest.add(dz(r, k_ - r), Rational(-pivot));
        for (const auto& [sym, c] : rest.terms()) {
            s.value += step(sym.a).value.scaled(Rational(-c / pivot));
            push_dep(s, sym.a);
        }
        return s;
    }

    void collect_trace(int r, std::set<int>& seen, std::vector<TraceEntry>& out) const {
        if (!seen.insert(r).second) return;
        const Step& s = steps_.at(r);
        out.insert(out.end(), s.own.begin(), s.own.end());
        for (int d : s.deps) collect_trace(d, seen, out);
    }
};

inline ReductionResult reduce_dz_mod_pz(int q0, int p0, const std::vector<int>& epsilon) {
    if ((q0 + p0) % 2 != 0) throw std::invalid_argument("reduce_dz_mod_pz: weight must be even");
    Reducer eng(q0 + p0, epsilon);
    return eng.reduce(q0, p0);
}

// Re-express a reduction over another epsilon set by re-reducing each old
// generator and composing exactly.
inline ReductionResult change_generators(const ReductionResult& res,
                                         const std::vector<int>& epsilon_new) {
    int k = weight(res.input);
    if (static_cast<int>(epsilon_new.size()) != (k - 2) / 6)
        throw std::invalid_argument("change_generators: epsilon length mismatch");
    Reducer eng(k, epsilon_new);
    ReductionResult out;
    out.input = res.input;
    out.mode = QuotientMode::ModPZ;
    out.trace = res.trace;
    FormalSum total;
    for (const auto& [g, c] : res.coefficients) {
        ReductionResult sub = eng.reduce(g.a, g.b);
        for (const auto& [h, ch] : sub.coefficients) total.add(h, Rational(c * ch));
        out.trace.insert(out.trace.end(), sub.trace.begin(), sub.trace.end());
    }
    for (const auto& [h, ch] : total.terms()) out.coefficients.emplace(h, ch);
    return out;
}

}  // namespace dzv
