#include <doctest.h>

#include <cmath>
#include <random>

#include "spinpoly/polyspace.hpp"

using namespace spinpoly;

namespace {
constexpr double pi = 3.14159265358979323846;

std::vector<double> interior_point(const AdmissibleGraph& g, const std::vector<double>& ell,
                                   std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double lmax = 0;
    for (double l : ell) lmax += l;
    for (int tries = 0; tries < 100000; ++tries) {
        std::vector<double> d(g.internal_edges().size());
        for (auto& x : d) x = u(rng) * lmax;
        if (polytope_membership(g, ell, d) == Membership::Interior) return d;
    }
    throw std::runtime_error("no interior point found");
}
}  // namespace

TEST_CASE("realize hits the requested fibre") {
    auto g = builtin_graph("g4");
    std::vector<double> ell{1, 1, 1, 1};
    for (double d : {0.3, 1.0, 1.7}) {
        auto c = realize(g, ell, {d});
        c.check_closure();
        auto lens = c.lengths();
        for (int i = 0; i < 4; ++i) CHECK(lens[i] == doctest::Approx(1.0).epsilon(1e-12));
        auto lam = lambda_map(g, c);
        CHECK(lam[0] == doctest::Approx(d).epsilon(1e-12));
    }
    CHECK_THROWS_AS(realize(g, ell, {2.5}), DomainError);
}

TEST_CASE("membership classification on the square") {
    auto g = builtin_graph("g4");
    std::vector<double> ell{1, 1, 1, 1};
    CHECK(polytope_membership(g, ell, {1.0}) == Membership::Interior);
    CHECK(polytope_membership(g, ell, {0.0}) == Membership::Boundary);
    CHECK(polytope_membership(g, ell, {2.0}) == Membership::Boundary);
    CHECK(polytope_membership(g, ell, {2.1}) == Membership::Outside);
}

TEST_CASE("bending preserves lengths and all lambda values") {
    std::mt19937_64 rng(7);
    for (const char* name : {"g4", "cat5", "star6"}) {
        auto g = builtin_graph(name);
        std::vector<double> ell(g.n_half());
        std::uniform_real_distribution<double> u(0.5, 2.0);
        for (auto& l : ell) l = u(rng);
        auto d = interior_point(g, ell, rng);
        auto c = realize(g, ell, d);
        for (std::size_t a = 0; a < g.internal_edges().size(); ++a) {
            auto cb = bend(c, g.i_subset(static_cast<int>(a)), 1.234);
            cb.check_closure();
            auto lam = lambda_map(g, cb);
            for (std::size_t b = 0; b < d.size(); ++b)
                CHECK(lam[b] == doctest::Approx(d[b]).epsilon(1e-9));
            auto l1 = c.lengths(), l2 = cb.lengths();
            for (std::size_t i = 0; i < l1.size(); ++i)
                CHECK(l2[i] == doctest::Approx(l1[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("bend by 2 pi is the identity in moduli space") {
    std::mt19937_64 rng(11);
    auto g = builtin_graph("cat5");
    std::vector<double> ell{1.0, 0.9, 1.3, 0.7, 1.1};
    auto d = interior_point(g, ell, rng);
    auto c = realize(g, ell, d);
    for (std::size_t a = 0; a < 2; ++a) {
        auto I = g.i_subset(static_cast<int>(a));
        CHECK(moduli_equal(c, bend(c, I, 2 * pi)));
        CHECK_FALSE(moduli_equal(c, bend(c, I, pi)));
    }
}

TEST_CASE("moduli equality is rotation invariant but reflection sensitive") {
    std::mt19937_64 rng(3);
    auto g = builtin_graph("g4");
    std::vector<double> ell{1, 1.2, 0.8, 1.1};
    auto c = realize(g, ell, interior_point(g, ell, rng));
    // non-planar representative
    c = bend(c, g.i_subset(0), 0.9);
    Configuration rot = c, refl = c;
    double th = 0.77;
    for (auto& v : rot.vectors) {
        double x = v.x * std::cos(th) - v.y * std::sin(th);
        double y = v.x * std::sin(th) + v.y * std::cos(th);
        v = {x, y, v.z};
    }
    for (auto& v : refl.vectors) v.z = -v.z;
    CHECK(moduli_equal(c, rot));
    CHECK_FALSE(moduli_equal(c, refl));
}

TEST_CASE("theta advances linearly under the bend of its own edge") {
    std::mt19937_64 rng(19);
    auto g = builtin_graph("cat6");
    std::vector<double> ell{1.0, 1.4, 0.6, 1.2, 0.9, 1.1};
    auto c = realize(g, ell, interior_point(g, ell, rng));
    for (std::size_t a = 0; a < g.internal_edges().size(); ++a) {
        double t0 = theta_angle(g, c, static_cast<int>(a));
        CHECK((std::abs(t0) < 1e-9 || std::abs(t0 - pi) < 1e-9));  // planar start
        for (double t : {0.4, 1.9, 3.3}) {
            auto cb = bend(c, g.i_subset(static_cast<int>(a)), t);
            double diff = theta_angle(g, cb, static_cast<int>(a)) - t0 - t;
            diff = std::remainder(diff, 2 * pi);
            CHECK(std::abs(diff) < 1e-6);
        }
    }
}

TEST_CASE("action-angle brackets from finite differences") {
    std::mt19937_64 rng(23);
    auto g = builtin_graph("cat5");
    std::vector<double> ell{1.1, 0.8, 1.3, 0.9, 1.0};
    auto c = realize(g, ell, interior_point(g, ell, rng));
    c = bend(c, g.i_subset(0), 0.6);  // move off the planar stratum
    Observable half0{Observable::HalfLambda, &g, 0};
    Observable half1{Observable::HalfLambda, &g, 1};
    Observable theta0{Observable::Theta, &g, 0};
    Observable theta1{Observable::Theta, &g, 1};
    // {(1/2)lambda_a, theta_a} = 1, cross brackets vanish
    CHECK(poisson_bracket_fd(c, half0, theta0) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(poisson_bracket_fd(c, half1, theta1) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::abs(poisson_bracket_fd(c, half0, theta1)) < 1e-6);
    CHECK(std::abs(poisson_bracket_fd(c, half0, half1)) < 1e-9);
    CHECK_THROWS_AS(poisson_bracket_fd(c, theta0, half0), DomainError);
}

TEST_CASE("gamma action coordinate") {
    auto g = builtin_graph("g4");
    std::vector<double> ell{1, 1, 1, 1};
    auto c = realize(g, ell, {1.2});
    CHECK(gamma_action(g, ell, c, 0) == doctest::Approx((1.2 + 2.0) / 2).epsilon(1e-12));
}

TEST_CASE("degenerate bend axis is reported") {
    auto g = builtin_graph("g4");
    std::vector<double> ell{1, 1, 1, 1};
    auto c = realize(g, ell, {0.0});  // lambda = 0: axis vanishes
    CHECK_THROWS_AS(bend(c, g.i_subset(0), 0.5), AxisVanishes);
}
