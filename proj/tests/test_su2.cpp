#include <doctest.h>

#include "spinpoly/su2.hpp"

using namespace spinpoly;

namespace {
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }
}  // namespace

TEST_CASE("sl2 relations hold in the integer weight basis") {
    for (long m = 0; m <= 25; ++m) {
        auto h = irrep::h_matrix(m);
        auto e = irrep::e_matrix(m);
        auto f = irrep::f_matrix(m);
        CHECK(commutator(e, f) == h);
    }
}

TEST_CASE("commutators [H,E] = 2E and [H,F] = -2F") {
    for (long m : {1L, 4L, 9L, 17L}) {
        auto h = irrep::h_matrix(m);
        auto e = irrep::e_matrix(m);
        auto f = irrep::f_matrix(m);
        CHECK(commutator(h, e) == e + e);
        CHECK(commutator(h, f) + f + f == ExactMatrix(m + 1, m + 1));
    }
}

TEST_CASE("Casimir H^2 + 2H + 4FE is the scalar m(m+2)") {
    for (long m = 0; m <= 12; ++m) {
        auto h = irrep::h_matrix(m);
        auto fe = irrep::f_matrix(m) * irrep::e_matrix(m);
        auto c = h * h + h + h + fe + fe + fe + fe;
        CHECK(c.is_scalar(Rational(m * (m + 2))));
    }
}

TEST_CASE("E and F are adjoint for the diagonal Gram metric") {
    // <F v_k, v_{k+1}> = g_{k+1} must equal <v_k, E v_{k+1}> = (k+1)(m-k) g_k
    for (long m : {2L, 7L, 13L})
        for (long k = 0; k < m; ++k)
            CHECK(irrep::gram_entry(m, k + 1) ==
                  Int((k + 1) * (m - k)) * irrep::gram_entry(m, k));
}

TEST_CASE("invariant subspace dimension matches the multiplicity oracle") {
    std::vector<std::vector<long>> cases = {
        {1, 1},          {1, 1, 2},          {1, 1, 1, 1}, {2, 2, 2, 2},
        {1, 2, 3, 2},    {1, 1, 1, 1, 2},    {2, 2, 2, 2, 2, 2},
        {3, 3, 2, 2, 1, 1},
    };
    for (const auto& ell : cases) {
        InvariantSpace s(ell);
        CHECK(static_cast<long long>(s.dim()) == dim_invariant(ell));
    }
    CHECK(dim_invariant({1, 1, 1}) == 0);       // odd sum
    CHECK(dim_invariant({5, 1, 1, 1}) == 0);    // polygon inequality
    CHECK(dim_invariant({1, 1, 1, 1}) == 2);
    CHECK(dim_invariant({2, 2, 2, 2}) == 3);
}

TEST_CASE("ambient Casimir on V1 (x) V1 annihilates the singlet") {
    auto q = casimir_on_tensor({1, 1}, {1, 2});
    // spectrum {0, 8, 8, 8}: q(q - 8) = 0 and trace = 24
    auto shifted = q;
    shifted.add_scaled_identity(Rational(-8));
    CHECK((q * shifted).is_zero());
    Rational tr = 0;
    for (std::size_t i = 0; i < 4; ++i) tr += q.at(i, i);
    CHECK(tr == Rational(24));
}

TEST_CASE("restricted Casimirs are orientation independent and commute") {
    std::vector<long> ell{1, 2, 2, 1, 2};
    InvariantSpace s(ell);
    auto q12 = s.casimir_restricted({1, 2});
    auto q345 = s.casimir_restricted({3, 4, 5});
    CHECK(q12 == q345);  // I and its complement
    auto q123 = s.casimir_restricted({1, 2, 3});
    CHECK(commutator(q12, q123).is_zero());
}

TEST_CASE("joint eigenbasis of the four-point graph") {
    auto g = builtin_graph("g4");
    InvariantSpace s({1, 1, 1, 1});
    auto basis = joint_eigenbasis(g, s);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0].coloring.internal == std::vector<long>{0});
    CHECK(basis[1].coloring.internal == std::vector<long>{2});
    CHECK(basis[0].norm2 > 0);
    // eigenvector property in the invariant basis
    auto h = h_a_matrix(g, s, 0);
    for (const auto& v : basis) {
        long m = v.coloring.internal[0];
        auto img = h.apply(v.coords);
        for (std::size_t i = 0; i < img.size(); ++i)
            CHECK(img[i] == Rational(m * (m + 2)) * v.coords[i]);
    }
}

TEST_CASE("overlap matrix squares for the figure-7 pair") {
    InvariantSpace s({1, 1, 1, 1});
    auto ov = overlap_matrix(builtin_graph("g4"), builtin_graph("g4p"), s);
    REQUIRE(ov.size() == 2);
    CHECK(ov[0][0].exact_sq == Rational(1, 4));
    CHECK(ov[0][1].exact_sq == Rational(3, 4));
    CHECK(ov[1][0].exact_sq == Rational(3, 4));
    CHECK(ov[1][1].exact_sq == Rational(1, 4));
    // rows of a unitary matrix
    for (const auto& row : ov) {
        Rational sum = 0;
        for (const auto& o : row) sum += o.exact_sq;
        CHECK(sum == Rational(1));
    }
}

TEST_CASE("overlap matrix is unitary for larger boundaries") {
    InvariantSpace s({2, 2, 2, 2});
    auto ov = overlap_matrix(builtin_graph("g4"), builtin_graph("g4p"), s);
    REQUIRE(ov.size() == 3);
    for (std::size_t r = 0; r < ov.size(); ++r) {
        Rational sum = 0;
        for (const auto& o : ov[r]) sum += o.exact_sq;
        CHECK(sum == Rational(1));
    }
}
