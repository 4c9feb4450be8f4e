#include <catch2/catch_amalgamated.hpp>

#include "dzv/symbols.hpp"

using namespace dzv;

TEST_CASE("canonicalize applies T-symmetry and boundary rewrites") {
    CHECK(tt(1, 1, 2) == Symbol{Kind::T, 1, 2, 1});
    CHECK(canonicalize(Symbol{Kind::T, 1, 1, 2}) == tt(1, 2, 1));
    CHECK(tt(3, 0, 5) == dz(3, 5));
    CHECK(tt(3, 5, 0) == dz(3, 5));
    CHECK(dz(2, 10) == Symbol{Kind::DZ, 2, 10, 0});
    CHECK(pp(9, 3) == pp(3, 9));
}

TEST_CASE("canonicalize is idempotent and weight-preserving") {
    const Symbol samples[] = {tt(1, 1, 2), tt(3, 0, 5), dz(2, 10), pp(9, 3),
                              zz(12), tt(4, 4, 4), tt(2, 7, 3)};
    for (const Symbol& s : samples) {
        CHECK(canonicalize(s) == s);
    }
    CHECK(weight(tt(1, 1, 2)) == 4);
    CHECK(weight(canonicalize(Symbol{Kind::T, 1, 1, 2})) == 4);
}

TEST_CASE("weights sum all indices") {
    CHECK(weight(dz(3, 9)) == 12);
    CHECK(weight(tt(4, 4, 4)) == 12);
    CHECK(weight(pp(3, 9)) == 12);
    CHECK(weight(zz(12)) == 12);
}

TEST_CASE("invalid symbols are rejected") {
    CHECK_THROWS_AS(dz(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(dz(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(tt(1, 0, 5), std::invalid_argument);
    CHECK_THROWS_AS(tt(1, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(tt(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(tt(2, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(zz(1), std::invalid_argument);
    CHECK_THROWS_AS(pp(1, 4), std::invalid_argument);
}

TEST_CASE("formal sums cancel, scale and reject mixed weights") {
    FormalSum x = FormalSum::single(dz(3, 1), 2);
    FormalSum y = FormalSum::single(dz(3, 1), -2);
    CHECK((x + y).empty());

    FormalSum z = FormalSum::single(dz(3, 1), 2);
    z.add(zz(4), 4);
    FormalSum half = z.scaled(rat(1, 2));
    CHECK(half.coeff(dz(3, 1)) == 1);
    CHECK(half.coeff(zz(4)) == 2);

    FormalSum w;
    w.add(dz(3, 1), 1);
    CHECK_THROWS_AS(w.add(zz(5), 1), std::invalid_argument);
    CHECK(w.weight() == 4);
}

TEST_CASE("substitute distributes the coefficient") {
    FormalSum x = FormalSum::single(dz(11, 1), 3);
    FormalSum repl = FormalSum::single(zz(12), rat(1, 2));
    FormalSum out = x.substitute(dz(11, 1), repl);
    CHECK(out.size() == 1);
    CHECK(out.coeff(zz(12)) == rat(3, 2));

    // no occurrence -> unchanged
    CHECK(out.substitute(dz(2, 10), repl) == out);
    // empty replacement erases
    CHECK(x.substitute(dz(11, 1), FormalSum{}).empty());
    // weight mismatch rejected
    CHECK_THROWS_AS(x.substitute(dz(11, 1), FormalSum::single(zz(5))), std::invalid_argument);
}

TEST_CASE("sum_add is commutative/associative, scale distributes") {
    FormalSum a = FormalSum::single(dz(5, 7), rat(2, 3));
    FormalSum b = FormalSum::single(dz(3, 9), rat(-1, 4));
    FormalSum c = FormalSum::single(zz(12), 5);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    Rational s = rat(7, 5);
    CHECK((a + b).scaled(s) == a.scaled(s) + b.scaled(s));
}
