#pragma once

#include <stdexcept>
#include <vector>

#include "dzv/rational.hpp"

namespace dzv {

// B_0 = 1, B_1 = -1/2, B_2 = 1/6, ... by the classical recurrence
// B_n = -1/(n+1) * sum_{j<n} C(n+1,j) B_j. The cache is task-local so
// concurrent use needs no coordination.
inline Rational bernoulli(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli: negative index");
    thread_local std::vector<Rational> cache{Rational(1)};
    while (static_cast<int>(cache.size()) <= n) {
        long m = static_cast<long>(cache.size());
        Rational s(0);
        for (long j = 0; j < m; ++j) s += rat(binomial(m + 1, j)) * cache[j];
        cache.push_back(Rational(-s / (m + 1)));
    }
    return cache[n];
}

inline Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

}  // namespace dzv
