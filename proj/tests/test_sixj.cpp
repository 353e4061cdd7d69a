#include <doctest.h>

#include <cmath>

#include "spinpoly/sixj.hpp"

using namespace spinpoly;

namespace {
SqrtRational sixj(long a, long b, long c, long d, long e, long f) {
    return racah_6j({a, b, c, d, e, f});
}
}  // namespace

TEST_CASE("pinned 6j values") {
    // {1/2 1/2 0; 1/2 1/2 0} = -1/2
    CHECK(sixj(1, 1, 0, 1, 1, 0).squared() == Rational(1, 4));
    CHECK(sixj(1, 1, 0, 1, 1, 0).sign() == -1);
    // {1 1 1; 1 1 1} = 1/6
    CHECK(sixj(2, 2, 2, 2, 2, 2).squared() == Rational(1, 36));
    CHECK(sixj(2, 2, 2, 2, 2, 2).sign() == 1);
    // {1/2 1/2 1; 1/2 1/2 1} = 1/6
    CHECK(sixj(1, 1, 2, 1, 1, 2).squared() == Rational(1, 36));
    CHECK(sixj(1, 1, 2, 1, 1, 2).sign() == 1);
    // {1 1 0; 1 1 1} = 1/3 with Racah sign +
    CHECK(sixj(2, 2, 0, 2, 2, 2).squared() == Rational(1, 9));
    // inadmissible labels vanish
    CHECK(sixj(1, 1, 1, 1, 1, 1).squared() == Rational(0));
    CHECK(sixj(2, 2, 6, 2, 2, 2).squared() == Rational(0));
}

TEST_CASE("column swap symmetry") {
    for (long m1 = 0; m1 <= 6; ++m1)
        for (long m2 = 0; m2 <= 6; ++m2)
            for (long m = 0; m <= 8; ++m)
                for (long mp = 0; mp <= 8; ++mp) {
                    SixJLabels a{m1, m2, m, m2, m1, mp};  // m3=m2, m4=m1
                    SixJLabels b{m2, m1, m, m1, m2, mp};
                    auto x = racah_6j(a), y = racah_6j(b);
                    CHECK(x.squared() == y.squared());
                    CHECK(x.sign() == y.sign());
                }
}

TEST_CASE("exchange of lower and upper labels in two columns") {
    // {a b c; d e f} = {d e c; a b f}
    for (long a = 0; a <= 5; ++a)
        for (long b = 0; b <= 5; ++b)
            for (long c = 0; c <= 6; ++c)
                for (long d = 0; d <= 5; ++d)
                    for (long e = 0; e <= 5; ++e)
                        for (long f = 0; f <= 6; ++f) {
                            auto x = sixj(a, b, c, d, e, f);
                            auto y = sixj(d, e, c, a, b, f);
                            CHECK(x.squared() == y.squared());
                            CHECK(x.sign() == y.sign());
                        }
}

TEST_CASE("orthogonality of the recoupling matrix") {
    // sum_m (m+1)(mp+1) 6j(m1 m2 m; m3 m4 mp)^2 = 1 whenever mp is admissible
    for (long m1 : {1L, 2L, 5L})
        for (long m2 : {1L, 3L, 4L})
            for (long m3 : {2L, 3L})
                for (long m4 : {2L, 4L})
                    for (long mp = std::abs(m1 - m4); mp <= m1 + m4; mp += 2) {
                        if (!clebsch_gordan_ok(m1, mp, m4) || !clebsch_gordan_ok(m2, mp, m3))
                            continue;
                        Rational sum = 0;
                        for (long m = std::abs(m1 - m2); m <= m1 + m2; m += 2) {
                            SixJLabels lbl{m1, m2, m, m3, m4, mp};
                            if (!lbl.admissible()) continue;
                            sum += Rational((m + 1) * (mp + 1)) * racah_6j(lbl).squared();
                        }
                        CHECK(sum == Rational(1));
                    }
}

TEST_CASE("overlap prediction reproduces the exact pairings") {
    // k = 2, ell = (1,1,1,1) puts the boundary at (1,1,1,1): |<m, mp>|^2 in {1/4, 3/4}
    auto p00 = overlap_from_6j(2, {1, 1, 1, 1}, 0, 0);
    CHECK(p00.magnitude.squared() == Rational(1, 4));
    auto p02 = overlap_from_6j(2, {1, 1, 1, 1}, 0, 2);
    CHECK(p02.magnitude.squared() == Rational(3, 4));
    auto p22 = overlap_from_6j(2, {1, 1, 1, 1}, 2, 2);
    CHECK(p22.magnitude.squared() == Rational(1, 4));
}

TEST_CASE("Bohr-Sommerfeld parity separates admissible labels") {
    auto g = builtin_graph("g4");
    std::vector<long> ell{1, 1, 1, 1};
    for (long k : {1L, 2L, 5L}) {
        std::vector<long> kl(4);
        for (int i = 0; i < 4; ++i) kl[i] = k * ell[i] - 1;
        for (const auto& phi : enumerate_colorings(g, kl))
            CHECK(bs_check(g, ell, k, phi));
        // a parity-violating label must fail
        auto phis = enumerate_colorings(g, kl);
        REQUIRE_FALSE(phis.empty());
        Coloring bad = phis.front();
        bad.internal[0] += 1;
        CHECK_FALSE(bs_check(g, ell, k, bad));
    }
}

TEST_CASE("eigenvalue shift identity") {
    for (long k : {1L, 3L, 10L})
        for (long m : {0L, 1L, 7L, 30L}) {
            auto [E, shifted] = eigenvalue_shift(k, m);
            CHECK(E == Rational((m + 1) * (m + 1), k * k));
            CHECK(shifted == E - Rational(1, k * k));
            CHECK(shifted == Rational(m * (m + 2), k * k));
        }
}

TEST_CASE("nearest admissible label with ties downward") {
    // target sqrt(E)=2: (m+1)/k = 2 exactly when m = 2k-1, parity permitting
    CHECK(nearest_admissible_label(10, 2.0, 0) == 18);   // 19/10 vs 21/10: tie, smaller
    CHECK(nearest_admissible_label(10, 2.0, 1) == 19);   // exact hit
    CHECK(nearest_admissible_label(7, 2.0, 1) == 13);
    CHECK(nearest_admissible_label(7, 2.0, 0) == 12);    // 13/7 and 15/7 tie, smaller wins
    CHECK(nearest_admissible_label(100, 2.0, 1) == 199);
    CHECK(nearest_admissible_label(1, 0.4, 0) == 0);
    CHECK_THROWS_AS(nearest_admissible_label(1, 0.0, 0), std::domain_error);
}
