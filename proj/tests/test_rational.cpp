// Exact scalar parsing and printing, primitive scaling, and the elimination
// kernels (rref, rank, kernel, solve) everything else is built on.
#include "doctest.h"

#include "galedeg/rational.hpp"

using namespace galedeg;

TEST_CASE("rational parsing and canonical text") {
    CHECK(parse_rational("3/6") == Rat(1, 2));
    CHECK(parse_rational("-4/2") == Rat(-2));
    CHECK(parse_rational("7") == Rat(7));
    CHECK(parse_rational("-0") == 0);
    CHECK(parse_rational("2/-4") == Rat(-1, 2));

    CHECK(rat_to_string(Rat(1, 2)) == "1/2");
    CHECK(rat_to_string(Rat(-3)) == "-3");
    CHECK(rat_to_string(Rat(0)) == "0");
    CHECK(rat_to_string(parse_rational("-10/4")) == "-5/2");

    CHECK_THROWS_AS(parse_rational(""), input_error);
    CHECK_THROWS_AS(parse_rational("1/0"), input_error);
    CHECK_THROWS_AS(parse_rational("x"), input_error);
    CHECK_THROWS_AS(parse_rational("2/"), input_error);
    CHECK_THROWS_AS(parse_rational("/2"), input_error);
    CHECK_THROWS_AS(parse_rational("1/2/3"), input_error);
    CHECK_THROWS_AS(parse_rational("1 2"), input_error);
    CHECK_THROWS_AS(parse_rational("+3"), input_error);
    CHECK_THROWS_AS(parse_rational("1-2"), input_error);
}

TEST_CASE("vector helpers") {
    QVec a = {Rat(1), Rat(2), Rat(-3)};
    QVec b = {Rat(4), Rat(-1), Rat(0)};
    CHECK(dot(a, b) == Rat(2));
    CHECK(sub(a, b) == QVec{Rat(-3), Rat(3), Rat(-3)});
    CHECK(is_zero_vec(QVec{Rat(0), Rat(0)}));
    CHECK_FALSE(is_zero_vec(a));
    CHECK(lex_less(QVec{Rat(1), Rat(1)}, QVec{Rat(1), Rat(2)}));
    CHECK_FALSE(lex_less(a, a));

    QVec c = {Rat(-2, 3), Rat(4, 3), Rat(0)};
    make_primitive(c);
    CHECK(c == QVec{Rat(1), Rat(-2), Rat(0)});  // first nonzero entry positive
    QVec z = {Rat(0), Rat(0)};
    make_primitive(z);
    CHECK(is_zero_vec(z));
}

TEST_CASE("rref, rank and pivots") {
    // rows: (1 2 3), (2 4 6), (0 1 1) -> rank 2, pivots in columns 0 and 1
    QMatrix m = QMatrix::from_rows(
        {{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}, {Rat(0), Rat(1), Rat(1)}}, 3);
    Rref r = rref(m);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    CHECK(rank_of(m) == 2);
    CHECK(r.mat.at(0, 0) == 1);
    CHECK(r.mat.at(0, 1) == 0);
    CHECK(r.mat.at(0, 2) == 1);  // row reduced against the second pivot
    CHECK(r.mat.at(1, 2) == 1);

    CHECK(rank_of_rows({{Rat(0), Rat(0)}}, 2) == 0);
    CHECK(rank_of_rows({}, 4) == 0);
    CHECK(rank_of_rows({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, 2) == 2);
}

TEST_CASE("kernel basis is canonical and annihilated") {
    QMatrix m = QMatrix::from_rows({{Rat(1), Rat(1), Rat(1), Rat(0)}}, 4);
    std::vector<QVec> k = kernel_basis(m);
    REQUIRE(k.size() == 3);
    for (const QVec& v : k) {
        // A v = 0 and the canonical form: primitive, first nonzero positive.
        Rat s = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            Rat t = m.at(0, j) * v[j];
            s += t;
        }
        CHECK(s == 0);
        for (const Rat& x : v) CHECK(x.get_den() == 1);
    }
    // free columns 1, 2, 3 in ascending order, sign-normalized
    CHECK(k[0] == QVec{Rat(1), Rat(-1), Rat(0), Rat(0)});
    CHECK(k[1] == QVec{Rat(1), Rat(0), Rat(-1), Rat(0)});
    CHECK(k[2] == QVec{Rat(0), Rat(0), Rat(0), Rat(1)});

    QMatrix full = QMatrix::from_cols({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, 2);
    CHECK(kernel_basis(full).empty());
}

TEST_CASE("solve_linear finds a solution or reports none") {
    QMatrix a = QMatrix::from_rows({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}}, 2);
    auto x = solve_linear(a, {Rat(5), Rat(6)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] * Rat(1) + (*x)[1] * Rat(2) == Rat(5));
    CHECK((*x)[0] * Rat(3) + (*x)[1] * Rat(4) == Rat(6));

    QMatrix sing = QMatrix::from_rows({{Rat(1), Rat(1)}, {Rat(2), Rat(2)}}, 2);
    CHECK_FALSE(solve_linear(sing, {Rat(1), Rat(3)}).has_value());
    auto y = solve_linear(sing, {Rat(1), Rat(2)});
    REQUIRE(y.has_value());
    CHECK((*y)[0] + (*y)[1] == Rat(1));
}

TEST_CASE("fnv1a64 hex is stable") {
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");  // offset basis
    CHECK(fnv1a64_hex("a") != fnv1a64_hex("b"));
    CHECK(fnv1a64_hex("points 2 4") == fnv1a64_hex("points 2 4"));
}
