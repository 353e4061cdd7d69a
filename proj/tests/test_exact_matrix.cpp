#include <doctest.h>

#include "spinpoly/exact_matrix.hpp"

using namespace spinpoly;

TEST_CASE("rref identifies pivots and rank") {
    ExactMatrix m(3, 4);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(0, 3) = 1;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    m.at(1, 3) = 3;
    m.at(2, 2) = 5;
    auto pivots = m.rref();
    CHECK(pivots == std::vector<std::size_t>{0, 2, 3});
}

TEST_CASE("kernel vectors are integral, coprime, first entry positive") {
    // x + 2y = 0: the coprime normalization with positive leading entry is (2, -1)
    ExactMatrix m(1, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    auto ker = m.kernel();
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] == Rational(2));
    CHECK(ker[0][1] == Rational(-1));

    ExactMatrix m2(1, 2);
    m2.at(0, 0) = Rational(1, 3);
    m2.at(0, 1) = Rational(1, 6);
    auto ker2 = m2.kernel();
    REQUIRE(ker2.size() == 1);
    CHECK(ker2[0][0] == Rational(1));
    CHECK(ker2[0][1] == Rational(-2));
}

TEST_CASE("kernel of invertible matrix is empty") {
    auto id = ExactMatrix::identity(4);
    CHECK(id.kernel().empty());
    CHECK(inverse(id) == id);
}

TEST_CASE("inverse of a rational matrix") {
    ExactMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 1;
    m.at(1, 0) = 7;
    m.at(1, 1) = 4;
    auto inv = inverse(m);
    CHECK(m * inv == ExactMatrix::identity(2));
    CHECK(inv.at(0, 0) == Rational(4));
    CHECK(inv.at(0, 1) == Rational(-1));

    ExactMatrix sing(2, 2);
    sing.at(0, 0) = 1;
    sing.at(1, 0) = 2;
    CHECK_THROWS(inverse(sing));
}

TEST_CASE("ColumnSolver recovers coordinates and rejects outsiders") {
    // columns span a 2-dim subspace of Q^3
    ExactMatrix b(3, 2);
    b.at(0, 0) = 1;
    b.at(1, 0) = 1;
    b.at(1, 1) = 1;
    b.at(2, 1) = 2;
    ColumnSolver solver(b);
    REQUIRE(solver.dim() == 2);

    std::vector<Rational> w{Rational(3), Rational(5), Rational(4)};  // 3*c0 + 2*c1
    std::vector<Rational> x;
    REQUIRE(solver.solve(w, x));
    CHECK(x[0] == Rational(3));
    CHECK(x[1] == Rational(2));

    std::vector<Rational> outside{Rational(1), Rational(0), Rational(0)};
    CHECK(!solver.solve(outside, x));
}

TEST_CASE("matrix algebra basics") {
    ExactMatrix a(2, 2);
    a.at(0, 1) = 1;
    auto s = a + a.transposed();
    CHECK(s.at(0, 1) == Rational(1));
    CHECK(s.at(1, 0) == Rational(1));
    auto c = a;
    c.add_scaled_identity(Rational(-3));
    CHECK(c.at(0, 0) == Rational(-3));
    CHECK(!c.is_zero());
    CHECK(ExactMatrix(3, 3).is_zero());
    CHECK((ExactMatrix::identity(2) + ExactMatrix::identity(2)).is_scalar(Rational(2)));

    ExactMatrix v(2, 1);
    v.at(0, 0) = 1;
    v.at(1, 0) = 2;
    auto applied = a.apply({Rational(1), Rational(2)});
    CHECK(applied[0] == Rational(2));
    CHECK(applied[1] == Rational(0));
}
