#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "dzv/rational.hpp"

namespace dzv {

// The symbol alphabet:
//   DZ(q,p)  double zeta  sum_{n>m>0} n^-q m^-p          (q >= 2, p >= 1)
//   T(r,q,p) Tornheim     sum_{n,m>0} (n+m)^-r n^-q m^-p
//   Z(k)     single zeta
//   P(a,b)   product Z(a)*Z(b)
enum class Kind { DZ, T, Z, P };

struct Symbol {
    Kind kind{Kind::Z};
    int a = 0, b = 0, c = 0;  // DZ(a,b), T(a,b,c), Z(a), P(a,b)

    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

// Canonical form: T-symmetry sorts q >= p, a zero T-boundary index becomes a
// DZ (needs r >= 2), P is sorted a <= b. Rejects divergent or malformed
// symbols (DZ(1,.), T(1,0,p), ...).
inline Symbol canonicalize(Symbol s) {
    switch (s.kind) {
        case Kind::DZ:
            if (s.a < 2) throw std::invalid_argument("DZ: first index must be >= 2 (divergent otherwise)");
            if (s.b < 1) throw std::invalid_argument("DZ: second index must be >= 1");
            return s;
        case Kind::T: {
            if (s.a < 1) throw std::invalid_argument("T: first index must be >= 1");
            if (s.b < 0 || s.c < 0) throw std::invalid_argument("T: negative index");
            if (s.b + s.c < 1) throw std::invalid_argument("T: q+p must be >= 1");
            if (s.b < s.c) std::swap(s.b, s.c);
            if (s.c == 0) {
                if (s.a < 2)
                    throw std::invalid_argument("T(1,0,p) is invalid: the boundary rewrite T(r,0,p)=DZ(r,p) needs r >= 2");
                return Symbol{Kind::DZ, s.a, s.b, 0};
            }
            return s;
        }
        case Kind::Z:
            if (s.a < 2) throw std::invalid_argument("Z: index must be >= 2");
            s.b = s.c = 0;
            return s;
        case Kind::P:
            if (s.a < 2 || s.b < 2) throw std::invalid_argument("P: both indices must be >= 2");
            if (s.a > s.b) std::swap(s.a, s.b);
            s.c = 0;
            return s;
    }
    throw std::logic_error("unreachable");
}

inline Symbol dz(int q, int p) { return canonicalize(Symbol{Kind::DZ, q, p, 0}); }
inline Symbol tt(int r, int q, int p) { return canonicalize(Symbol{Kind::T, r, q, p}); }
inline Symbol zz(int k) { return canonicalize(Symbol{Kind::Z, k, 0, 0}); }
inline Symbol pp(int a, int b) { return canonicalize(Symbol{Kind::P, a, b, 0}); }

inline int weight(const Symbol& s) {
    switch (s.kind) {
        case Kind::DZ: return s.a + s.b;
        case Kind::T: return s.a + s.b + s.c;
        case Kind::Z: return s.a;
        case Kind::P: return s.a + s.b;
    }
    throw std::logic_error("unreachable");
}

inline std::string to_string(const Symbol& s) {
    std::ostringstream o;
    switch (s.kind) {
        case Kind::DZ: o << "DZ(" << s.a << "," << s.b << ")"; break;
        case Kind::T: o << "T(" << s.a << "," << s.b << "," << s.c << ")"; break;
        case Kind::Z: o << "Z(" << s.a << ")"; break;
        case Kind::P: o << "P(" << s.a << "," << s.b << ")"; break;
    }
    return o.str();
}

inline std::ostream& operator<<(std::ostream& os, const Symbol& s) {
    return os << to_string(s);
}

// Finite map Symbol -> Rational with no stored zeros; all symbols must share
// one weight (the empty sum is weight-polymorphic).
class FormalSum {
  public:
    FormalSum() = default;

    static FormalSum single(const Symbol& s, const Rational& coef = 1) {
        FormalSum f;
        f.add(s, coef);
        return f;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<Symbol, Rational>& terms() const { return terms_; }

    // 0 for the empty (weight-polymorphic) sum.
    int weight() const { return terms_.empty() ? 0 : dzv::weight(terms_.begin()->first); }

    Rational coeff(const Symbol& s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const Symbol& s, const Rational& coef) {
        if (coef == 0) return;
        if (!terms_.empty() && dzv::weight(s) != weight())
            throw std::invalid_argument("FormalSum: mixed weights (" + std::to_string(dzv::weight(s)) +
                                        " vs " + std::to_string(weight()) + ")");
        auto [it, fresh] = terms_.emplace(s, coef);
        if (!fresh) {
            it->second += coef;
            if (it->second == 0) terms_.erase(it);
        }
    }

    FormalSum& operator+=(const FormalSum& o) {
        for (const auto& [s, c] : o.terms_) add(s, c);
        return *this;
    }
    friend FormalSum operator+(FormalSum x, const FormalSum& y) { return x += y; }
    friend FormalSum operator-(FormalSum x, const FormalSum& y) { return x += y.scaled(-1); }

    FormalSum scaled(const Rational& c) const {
        FormalSum f;
        if (c == 0) return f;
        for (const auto& [s, v] : terms_) f.terms_.emplace(s, Rational(v * c));
        return f;
    }

    // Replaces every occurrence of sym by repl, distributing the coefficient.
    FormalSum substitute(const Symbol& sym, const FormalSum& repl) const {
        auto it = terms_.find(sym);
        if (it == terms_.end()) return *this;
        if (!repl.empty() && dzv::weight(sym) != repl.weight())
            throw std::invalid_argument("substitute: replacement weight differs from symbol weight");
        Rational c = it->second;
        FormalSum out = *this;
        out.terms_.erase(sym);
        out += repl.scaled(c);
        return out;
    }

    friend bool operator==(const FormalSum&, const FormalSum&) = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream o;
        bool first = true;
        for (const auto& [s, c] : terms_) {
            if (!first) o << " + ";
            o << "(" << c.get_str() << ")*" << to_string(s);
            first = false;
        }
        return o.str();
    }

  private:
    std::map<Symbol, Rational> terms_;
};

// The ambient space in which a relation's lhs vanishes: exactly zero, a
// rational multiple of zeta(k), or a member of PZ_k = <zeta(k), zeta(j)zeta(k-j)>.
enum class QuotientMode { Exact, ModZetaK, ModPZ };

inline std::string to_string(QuotientMode m) {
    switch (m) {
        case QuotientMode::Exact: return "Exact";
        case QuotientMode::ModZetaK: return "ModZetaK";
        case QuotientMode::ModPZ: return "ModPZ";
    }
    throw std::logic_error("unreachable");
}

struct Relation {
    FormalSum lhs;
    QuotientMode mode{QuotientMode::Exact};
    std::string label;
};

}  // namespace dzv
