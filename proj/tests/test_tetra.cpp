#include <doctest.h>

#include <cmath>
#include <random>

#include "spinpoly/tetra.hpp"

using namespace spinpoly;

namespace {
constexpr double pi = 3.14159265358979323846;

TetraEdges regular(double s) { return {s, s, s, s, s, s}; }

TetraEdges from_points(const std::array<std::array<double, 3>, 4>& p) {
    auto dist = [&](int i, int j) {
        double dx = p[i][0] - p[j][0], dy = p[i][1] - p[j][1], dz = p[i][2] - p[j][2];
        return std::sqrt(dx * dx + dy * dy + dz * dz);
    };
    return {dist(0, 2), dist(1, 3), dist(0, 1), dist(1, 2), dist(2, 3), dist(0, 3)};
}
}  // namespace

TEST_CASE("regular tetrahedron closed forms") {
    auto t = regular(2.0);
    CHECK(classify(t) == TetraShape::NonDegenerate);
    // V = s^3 / (6 sqrt 2)
    double v = 8.0 / (6.0 * std::sqrt(2.0));
    CHECK(volume(t) == doctest::Approx(v).epsilon(1e-13));
    CHECK(volume_by_coordinates(t) == doctest::Approx(v).epsilon(1e-12));
    // every exterior dihedral is pi - arccos(1/3)
    double alpha = pi - std::acos(1.0 / 3.0);
    auto a = exterior_dihedrals(t);
    for (double x : {a.h, a.hp, a.l1, a.l2, a.l3, a.l4})
        CHECK(x == doctest::Approx(alpha).epsilon(1e-12));
    CHECK(theta_phase(t) == doctest::Approx(12 * alpha).epsilon(1e-12));
    CHECK(theta_phase(t) == doctest::Approx(22.927598).epsilon(1e-6));
    CHECK(area_D(t) == doctest::Approx(8 * pi - 12 * alpha).epsilon(1e-12));
    CHECK(omega_xxprime(t) == doctest::Approx(3 * v / 4.0).epsilon(1e-12));
}

TEST_CASE("area plus phase identity") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int done = 0;
    while (done < 50) {
        std::array<std::array<double, 3>, 4> p;
        for (auto& q : p)
            for (auto& x : q) x = u(rng);
        auto t = from_points(p);
        if (classify(t) != TetraShape::NonDegenerate) continue;
        if (volume(t) < 1e-3) continue;
        CHECK(area_D(t) + theta_phase(t) ==
              doctest::Approx(pi * (t.l1 + t.l2 + t.l3 + t.l4)).epsilon(1e-12));
        ++done;
    }
}

TEST_CASE("Cayley-Menger volume matches the coordinate route") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    int done = 0;
    while (done < 200) {
        std::array<std::array<double, 3>, 4> p;
        for (auto& q : p)
            for (auto& x : q) x = u(rng);
        auto t = from_points(p);
        if (classify(t) != TetraShape::NonDegenerate) continue;
        double v1 = volume(t), v2 = volume_by_coordinates(t);
        CHECK(std::abs(v1 - v2) <= 1e-10 * std::max(1.0, v1));
        ++done;
    }
}

TEST_CASE("classification and failure modes") {
    // coplanar: unit square with diagonals sqrt 2
    TetraEdges flat{std::sqrt(2.0), std::sqrt(2.0), 1, 1, 1, 1};
    CHECK(classify(flat) == TetraShape::Coplanar);
    CHECK(std::abs(volume(flat)) < 1e-9);
    CHECK_THROWS_AS(exterior_dihedrals(flat), DegenerateTetra);
    // violates the triangle inequality on a face
    TetraEdges bad{5.0, 1.0, 1, 1, 1, 1};
    CHECK(classify(bad) == TetraShape::NonRealizable);
    CHECK_THROWS_AS(volume(bad), NotRealizable);
    CHECK_THROWS_AS(realize_tetra(bad), NotRealizable);
}

TEST_CASE("omega scaling") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    int done = 0;
    while (done < 20) {
        std::array<std::array<double, 3>, 4> p;
        for (auto& q : p)
            for (auto& x : q) x = u(rng);
        auto t = from_points(p);
        if (classify(t) != TetraShape::NonDegenerate || volume(t) < 1e-2) continue;
        CHECK(omega_xxprime(t) ==
              doctest::Approx(3 * volume(t) / (t.e_h * t.e_hp)).epsilon(1e-12));
        ++done;
    }
}
