#include <catch2/catch_amalgamated.hpp>

#include "dzv/matrix.hpp"

using namespace dzv;

namespace {

std::vector<Rational> rowvec(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) v.push_back(rat(x));
    return v;
}

std::vector<Rational> mat_apply(const RationalMatrix& m, const std::vector<Rational>& v) {
    std::vector<Rational> out(m.nrows());
    for (std::size_t r = 0; r < m.nrows(); ++r) {
        Rational s(0);
        for (std::size_t c = 0; c < m.ncols; ++c) s += m.rows[r][c] * v[c];
        out[r] = Rational(s);
    }
    return out;
}

std::vector<Rational> row_combination(const RationalMatrix& m, const std::vector<Rational>& y) {
    std::vector<Rational> out(m.ncols);
    for (std::size_t r = 0; r < m.nrows(); ++r)
        for (std::size_t c = 0; c < m.ncols; ++c) out[c] += y[r] * m.rows[r][c];
    for (auto& x : out) x = Rational(x);
    return out;
}

}  // namespace

TEST_CASE("rref fixes the identity and reduces a rational matrix") {
    RationalMatrix id(2);
    id.add_row(rowvec({1, 0}));
    id.add_row(rowvec({0, 1}));
    auto [rid, pid] = rref(id);
    CHECK(rid.rows == id.rows);
    CHECK(pid == std::vector<std::size_t>{0, 1});

    RationalMatrix m(3);
    m.add_row({rat(2), rat(4), rat(-2)});
    m.add_row({rat(1), rat(2), rat(3)});
    m.add_row({rat(3), rat(6), rat(1)});  // row1 + row2
    auto [r, p] = rref(m);
    CHECK(p == std::vector<std::size_t>{0, 2});
    CHECK(rank(m) == 2);
    CHECK(r.rows[0] == rowvec({1, 2, 0}));
    CHECK(r.rows[1] == rowvec({0, 0, 1}));
    CHECK(r.rows[2] == rowvec({0, 0, 0}));
}

TEST_CASE("nullspace vectors satisfy m v = 0 and lead with 1") {
    RationalMatrix diff(2);
    diff.add_row(rowvec({1, -1}));
    auto ns = nullspace(diff);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == rowvec({1, 1}));

    RationalMatrix m(4);
    m.add_row({rat(1), rat(1, 2), rat(0), rat(3)});
    m.add_row({rat(0), rat(0), rat(1), rat(-5, 7)});
    auto basis = nullspace(m);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) {
        auto mv = mat_apply(m, v);
        for (const auto& x : mv) CHECK(x == 0);
        std::size_t first = 0;
        while (first < v.size() && v[first] == 0) ++first;
        REQUIRE(first < v.size());
        CHECK(v[first] == 1);
    }

    RationalMatrix full(2);
    full.add_row(rowvec({1, 0}));
    full.add_row(rowvec({0, 1}));
    CHECK(nullspace(full).empty());
}

TEST_CASE("solve expresses the target as a row combination") {
    RationalMatrix diag(2);
    diag.add_row(rowvec({2, 0}));
    diag.add_row(rowvec({0, 3}));
    auto y = solve(diag, rowvec({4, 3}));
    REQUIRE(y.has_value());
    CHECK(*y == rowvec({2, 1}));

    RationalMatrix m(3);
    m.add_row({rat(1), rat(2), rat(1)});
    m.add_row({rat(1), rat(2), rat(0)});
    m.add_row({rat(2), rat(4), rat(1)});  // sum of the first two
    auto y2 = solve(m, {rat(1), rat(2), rat(5)});
    REQUIRE(y2.has_value());
    CHECK(row_combination(m, *y2) == std::vector<Rational>{rat(1), rat(2), rat(5)});

    CHECK_FALSE(solve(m, {rat(1), rat(0), rat(0)}).has_value());
    CHECK_THROWS_AS(solve(m, rowvec({1, 2})), std::invalid_argument);
}

TEST_CASE("symbol column basis maps FormalSums to rows") {
    std::vector<Symbol> basis{dz(6, 2), dz(2, 6), zz(8), pp(3, 5)};
    RationalMatrix m(basis);
    FormalSum f;
    f.add(dz(2, 6), rat(-9, 2));
    f.add(pp(3, 5), 1);
    m.add_row(f);
    CHECK(m.rows[0] == std::vector<Rational>{rat(0), rat(-9, 2), rat(0), rat(1)});

    FormalSum g;
    g.add(dz(5, 3), 1);  // not a column
    CHECK_THROWS_AS(m.add_row(g), std::invalid_argument);
    CHECK_THROWS_AS(m.add_row(rowvec({1, 2})), std::invalid_argument);
}
