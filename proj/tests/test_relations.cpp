#include <catch2/catch_amalgamated.hpp>

#include "dzv/relations.hpp"

using namespace dzv;

namespace {

// Independent closed form for the Tornheim expansion, from the partial
// fraction 1/(n^q m^p) = sum_a C(p+q-a-1,p-1)/(s^{p+q-a} n^a)
//                      + sum_b C(p+q-b-1,q-1)/(s^{p+q-b} m^b) with s = n+m.
FormalSum expand_oracle(int r, int q, int p) {
    int k = r + q + p;
    FormalSum f;
    for (int a = 1; a <= q; ++a) f.add(dz(k - a, a), rat(binomial(p + q - a - 1, p - 1)));
    for (int b = 1; b <= p; ++b) f.add(dz(k - b, b), rat(binomial(p + q - b - 1, q - 1)));
    return f;
}

FormalSum expand_all_t(const FormalSum& x) {
    FormalSum out;
    for (const auto& [s, c] : x.terms()) {
        if (s.kind == Kind::T)
            out += tornheim_expand(s.a, s.b, s.c).scaled(c);
        else
            out.add(s, c);
    }
    return out;
}

}  // namespace

TEST_CASE("euler_top emits Euler's formula with merged products") {
    Relation r3 = euler_top(3);
    CHECK(r3.mode == QuotientMode::Exact);
    FormalSum want3;
    want3.add(dz(2, 1), 2);
    want3.add(zz(3), -2);
    CHECK(r3.lhs == want3);

    FormalSum want4;
    want4.add(dz(3, 1), 2);
    want4.add(zz(4), -3);
    want4.add(pp(2, 2), 1);
    CHECK(euler_top(4).lhs == want4);

    FormalSum want6;
    want6.add(dz(5, 1), 2);
    want6.add(zz(6), -5);
    want6.add(pp(2, 4), 2);
    want6.add(pp(3, 3), 1);
    CHECK(euler_top(6).lhs == want6);

    CHECK_THROWS_AS(euler_top(2), std::invalid_argument);
}

TEST_CASE("stuffle emits the harmonic relation") {
    FormalSum want22;
    want22.add(pp(2, 2), 1);
    want22.add(dz(2, 2), -2);
    want22.add(zz(4), -1);
    CHECK(stuffle(2, 2).lhs == want22);

    FormalSum want39;
    want39.add(pp(3, 9), 1);
    want39.add(dz(3, 9), -1);
    want39.add(dz(9, 3), -1);
    want39.add(zz(12), -1);
    CHECK(stuffle(3, 9).lhs == want39);
    CHECK(stuffle(9, 3).lhs == want39);
    CHECK(stuffle(5, 7).lhs.coeff(pp(5, 7)) == 1);
    CHECK_THROWS_AS(stuffle(1, 5), std::invalid_argument);
}

TEST_CASE("tornheim_recursion canonicalizes its three terms") {
    FormalSum want111;
    want111.add(tt(1, 1, 1), 1);
    want111.add(dz(2, 1), -2);
    CHECK(tornheim_recursion(1, 1, 1).lhs == want111);

    FormalSum want211;
    want211.add(tt(2, 1, 1), 1);
    want211.add(dz(3, 1), -2);
    CHECK(tornheim_recursion(2, 1, 1).lhs == want211);

    FormalSum want121;
    want121.add(tt(1, 2, 1), 1);
    want121.add(tt(2, 1, 1), -1);
    want121.add(dz(2, 2), -1);
    CHECK(tornheim_recursion(1, 2, 1).lhs == want121);

    CHECK_THROWS_AS(tornheim_recursion(1, 0, 2), std::invalid_argument);
}

TEST_CASE("tornheim_expand matches frozen examples and the boundary") {
    CHECK(tornheim_expand(1, 1, 1) == FormalSum::single(dz(2, 1), 2));

    FormalSum want121;
    want121.add(dz(3, 1), 2);
    want121.add(dz(2, 2), 1);
    CHECK(tornheim_expand(1, 2, 1) == want121);

    CHECK(tornheim_expand(2, 0, 5) == FormalSum::single(dz(2, 5)));
    CHECK_THROWS_AS(tornheim_expand(1, 0, 3), std::invalid_argument);
}

TEST_CASE("tornheim_expand equals the partial-fraction closed form") {
    for (int k = 3; k <= 14; ++k)
        for (int r = 1; r <= k - 2; ++r)
            for (int q = 1; q <= k - r - 1; ++q) {
                int p = k - r - q;
                CAPTURE(r, q, p);
                CHECK(tornheim_expand(r, q, p) == expand_oracle(r, q, p));
            }
}

TEST_CASE("tornheim_expand coefficients are symmetric and sum to C(q+p,p)") {
    for (int k = 3; k <= 14; ++k)
        for (int r = 1; r <= k - 2; ++r)
            for (int q = 1; q <= k - r - 1; ++q) {
                int p = k - r - q;
                FormalSum e = tornheim_expand(r, q, p);
                CHECK(e == tornheim_expand(r, p, q));
                Rational total(0);
                for (const auto& [s, c] : e.terms()) {
                    CHECK(c > 0);
                    CHECK(c.get_den() == 1);
                    total += c;
                }
                CHECK(total == rat(binomial(q + p, p)));
            }
}

TEST_CASE("cyclic emits the signed DZ-expanded Lemma (i) combination") {
    CHECK(cyclic(1, 1, 1).mode == QuotientMode::ModZetaK);
    CHECK(cyclic(1, 1, 1).lhs == FormalSum::single(dz(2, 1), -6));

    CHECK(cyclic(4, 4, 4).lhs == tornheim_expand(4, 4, 4).scaled(3));

    FormalSum want211;
    want211.add(dz(3, 1), -2);
    want211.add(dz(2, 2), -2);
    CHECK(cyclic(2, 1, 1).lhs == want211);

    CHECK_THROWS_AS(cyclic(2, 0, 2), std::invalid_argument);
}

TEST_CASE("boyadzhiev_mod keeps T symbolic and expands the binomial sum") {
    CHECK(boyadzhiev_mod(2, 0, 2).lhs.empty());  // DZ(2,2) - DZ(2,2)

    CHECK(boyadzhiev_mod(1, 1, 2).lhs == FormalSum::single(tt(1, 1, 2)));

    FormalSum want507;
    want507.add(dz(5, 7), 2);  // boundary T(5,0,7) plus the j=4 term
    want507.add(dz(4, 8), 7);
    want507.add(dz(3, 9), 28);
    want507.add(dz(2, 10), 84);
    CHECK(boyadzhiev_mod(5, 0, 7).lhs == want507);
    CHECK(boyadzhiev_mod(5, 0, 7).mode == QuotientMode::ModPZ);

    CHECK_THROWS_WITH(boyadzhiev_mod(3, 1, 1), Catch::Matchers::ContainsSubstring("p must be >= 2"));
    CHECK_THROWS_WITH(boyadzhiev_mod(1, 0, 4), Catch::Matchers::ContainsSubstring("q+r must be >= 2"));
    CHECK_THROWS_WITH(boyadzhiev_mod(0, 2, 2), Catch::Matchers::ContainsSubstring("r must be >= 1"));
}

TEST_CASE("torn_p1_rewrite matches the rearranged recursion") {
    FormalSum want21;
    want21.add(tt(2, 1, 1), 1);
    want21.add(tt(1, 2, 1), -1);
    want21.add(dz(2, 2), 1);
    CHECK(torn_p1_rewrite(2, 1).lhs == want21);

    FormalSum want31;
    want31.add(tt(3, 1, 1), 1);
    want31.add(tt(2, 2, 1), -1);  // T(2,1,2) canonicalized
    want31.add(dz(3, 2), 1);
    CHECK(torn_p1_rewrite(3, 1).lhs == want31);

    FormalSum want22;  // T(2,1,2) canonicalizes onto T(2,2,1)
    want22.add(tt(2, 2, 1), 2);
    want22.add(tt(1, 2, 2), -1);
    CHECK(torn_p1_rewrite(2, 2).lhs == want22);

    CHECK_THROWS_AS(torn_p1_rewrite(1, 3), std::invalid_argument);
}

TEST_CASE("torn_p1_rewrite and tornheim_recursion expand to zero") {
    for (int a = 2; a <= 8; ++a)
        for (int b = 1; b <= 9 - a; ++b) {
            CAPTURE(a, b);
            CHECK(expand_all_t(torn_p1_rewrite(a, b).lhs).empty());
        }
    for (int k = 3; k <= 10; ++k)
        for (int r = 1; r <= k - 2; ++r)
            for (int q = 1; q <= k - r - 1; ++q) {
                int p = k - r - q;
                CAPTURE(r, q, p);
                CHECK(expand_all_t(tornheim_recursion(r, q, p).lhs).empty());
            }
}

TEST_CASE("descent matches its frozen instances") {
    FormalSum want38;
    want38.add(dz(3, 5), 2);
    want38.add(dz(2, 6), 5);
    CHECK(descent(3, 8).lhs == want38);

    FormalSum want312;
    want312.add(dz(3, 9), 2);
    want312.add(dz(2, 10), 9);
    CHECK(descent(3, 12).lhs == want312);

    FormalSum want512;
    want512.add(dz(5, 7), 2);
    want512.add(dz(4, 8), 7);
    want512.add(dz(2, 10), 84);
    want512.add(dz(3, 9), 28);
    CHECK(descent(5, 12).lhs == want512);

    CHECK_THROWS_AS(descent(4, 12), std::invalid_argument);
    CHECK_THROWS_AS(descent(3, 11), std::invalid_argument);
    CHECK_THROWS_AS(descent(11, 12), std::invalid_argument);
}

TEST_CASE("descent equals the expanded boyadzhiev_mod(r,0,k-r)") {
    for (int k = 6; k <= 20; k += 2)
        for (int r = 3; r <= k - 3; r += 2) {
            CAPTURE(r, k);
            FormalSum d = descent(r, k).lhs;
            CHECK(d == boyadzhiev_mod(r, 0, k - r).lhs);
            // trailing terms (everything except the two-term head) stay below r-2
            for (const auto& [s, c] : d.terms()) {
                if (s == dz(r, k - r) || s == dz(r - 1, k - r + 1)) continue;
                CHECK(s.a <= r - 2);
            }
        }
}

TEST_CASE("gkz_sum lists the odd first indices against zeta(k)/4") {
    FormalSum want4;
    want4.add(dz(3, 1), 1);
    want4.add(zz(4), rat(-1, 4));
    CHECK(gkz_sum(4).lhs == want4);

    FormalSum want6;
    want6.add(dz(3, 3), 1);
    want6.add(dz(5, 1), 1);
    want6.add(zz(6), rat(-1, 4));
    CHECK(gkz_sum(6).lhs == want6);

    FormalSum want12;
    for (int j = 3; j <= 11; j += 2) want12.add(dz(j, 12 - j), 1);
    want12.add(zz(12), rat(-1, 4));
    CHECK(gkz_sum(12).lhs == want12);

    CHECK_THROWS_AS(gkz_sum(7), std::invalid_argument);
    CHECK_THROWS_AS(gkz_sum(2), std::invalid_argument);
}

TEST_CASE("bernoulli numbers match the classical table") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == rat(-1, 2));
    CHECK(bernoulli(2) == rat(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(4) == rat(-1, 30));
    CHECK(bernoulli(6) == rat(1, 42));
    CHECK(bernoulli(8) == rat(-1, 30));
    CHECK(bernoulli(10) == rat(5, 66));
    CHECK(bernoulli(12) == rat(-691, 2730));
}

TEST_CASE("even zeta values over pi powers") {
    CHECK(zeta_even_over_pi_power(2) == rat(1, 6));
    CHECK(zeta_even_over_pi_power(4) == rat(1, 90));
    CHECK(zeta_even_over_pi_power(6) == rat(1, 945));
    CHECK(zeta_even_over_pi_power(8) == rat(1, 9450));
    CHECK(zeta_even_over_pi_power(12) == rat(691, 638512875));
}

TEST_CASE("even_product_ratio reproduces the Euler ratios") {
    CHECK(even_product_ratio(2, 4) == rat(5, 2));
    CHECK(even_product_ratio(2, 6) == rat(7, 4));
    CHECK(even_product_ratio(4, 8) == rat(7, 6));
    CHECK(even_product_ratio(6, 8) == even_product_ratio(2, 8));  // both are zeta(2)zeta(6)/zeta(8)
    CHECK_THROWS_AS(even_product_ratio(3, 8), std::invalid_argument);
    CHECK_THROWS_AS(even_product_ratio(2, 5), std::invalid_argument);
}

TEST_CASE("every emitted relation is weight-homogeneous") {
    // FormalSum::add enforces homogeneity; building a spread of instances
    // exercises it across all generators.
    for (int k = 4; k <= 16; k += 2) {
        CHECK(euler_top(k).lhs.weight() == k);
        CHECK(gkz_sum(k).lhs.weight() == k);
        for (int a = 2; a <= k / 2; ++a) CHECK(stuffle(a, k - a).lhs.weight() == k);
        for (int r = 3; r <= k - 3; r += 2) CHECK(descent(r, k).lhs.weight() == k);
    }
}
