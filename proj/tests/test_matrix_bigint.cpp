#include "doctest.h"

#include "hermitian/bigint.hpp"
#include "hermitian/matrix.hpp"

using namespace hermitian;

TEST_CASE("rref and rank over GF(4)") {
    const FieldSpec& F = field_make(2);
    const GFMatrix m = GFMatrix::from_rows({{1, 2, 3, 0}, {0, 1, 1, 1}, {1, 3, 2, 1}});
    // row3 = row1 + row2 in GF(4)
    CHECK(rank(m, F) == 2);
    const GFMatrix r = rref(m, F);
    CHECK(r.rows == 2);
    CHECK(r.at(0, 0) == 1);
    CHECK(rref(r, F).a == r.a);  // idempotent
}

TEST_CASE("nullspace is orthogonal and has complementary rank") {
    const FieldSpec& F = field_make(3);
    const GFMatrix m = GFMatrix::from_rows({{1, 1, 1, 1, 1}, {0, 1, 2, 3, 4}});
    const GFMatrix ker = nullspace(m, F);
    CHECK(ker.rows == 3);
    CHECK(rows_orthogonal(m, ker, F));
    CHECK(rank(vstack(m, ker), F) == 5);
}

TEST_CASE("row space relations") {
    const FieldSpec& F = field_make(2);
    const GFMatrix a = GFMatrix::from_rows({{1, 0, 1}, {0, 1, 1}});
    const GFMatrix b = GFMatrix::from_rows({{1, 1, 0}, {1, 0, 1}});
    CHECK(same_row_space(a, b, F));
    const GFMatrix c = GFMatrix::from_rows({{1, 1, 0}});
    CHECK(row_space_contains(a, c, F));
    CHECK_FALSE(row_space_contains(c, a, F));
}

TEST_CASE("delete_column") {
    const FieldSpec& F = field_make(2);
    const GFMatrix m = GFMatrix::from_rows({{1, 2, 3}});
    const GFMatrix d = delete_column(m, 1);
    CHECK(d.cols == 2);
    CHECK(d.at(0, 0) == 1);
    CHECK(d.at(0, 1) == 3);
    CHECK(rank(d, F) == 1);
}

TEST_CASE("BigInt arithmetic") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK((BigInt(1) - BigInt(2)).to_string() == "-1");
    CHECK((BigInt(-5) * BigInt(-7)).to_string() == "35");
    // 2^100
    const BigInt big = BigInt::pow(BigInt(2), 100);
    CHECK(big.to_string() == "1267650600228229401496703205376");
    CHECK(big.div_exact(2).to_string() == "633825300114114700748351602688");
    CHECK(BigInt::from_string("-1267650600228229401496703205376") ==
          BigInt(0) - big);
    CHECK(BigInt::from_string(big.to_string()) == big);
    CHECK_THROWS_AS(BigInt(7).div_exact(2), std::logic_error);
    // carries across limbs
    const BigInt a = BigInt::pow(BigInt(10), 30);
    CHECK((a + a - a) == a);
    CHECK((a * BigInt(0)).is_zero());
    CHECK(BigInt(3) < BigInt(5));
    CHECK(BigInt(-5) < BigInt(3));
}
