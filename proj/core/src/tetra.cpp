#include "spinpoly/tetra.hpp"

#include <algorithm>
#include <cmath>

namespace spinpoly {

namespace {

constexpr double kDegenerateHeight = 1e-9;  // relative to max edge length

double max_length(const TetraEdges& t) {
    return std::max({t.e_h, t.e_hp, t.l1, t.l2, t.l3, t.l4});
}

void check_positive(const TetraEdges& t) {
    if (t.e_h <= 0 || t.e_hp <= 0 || t.l1 <= 0 || t.l2 <= 0 || t.l3 <= 0 || t.l4 <= 0)
        throw NotRealizable("all six edge lengths must be positive");
}

// Squared distance table d2[i][j] for vertices P0..P3, in extended
// precision: rounding the squares to double already perturbs the
// Cayley-Menger determinant beyond the 1e-10 volume agreement level.
std::array<std::array<long double, 4>, 4> distance_table(const TetraEdges& t) {
    std::array<std::array<long double, 4>, 4> d2{};
    auto set = [&](int i, int j, long double l) { d2[i][j] = d2[j][i] = l * l; };
    set(0, 1, t.l1);
    set(1, 2, t.l2);
    set(2, 3, t.l3);
    set(0, 3, t.l4);
    set(0, 2, t.e_h);
    set(1, 3, t.e_hp);
    return d2;
}

double det5(long double m[5][5]) {
    // Gaussian elimination with partial pivoting; n = 5 only. Extended
    // precision: near-flat tetrahedra cancel ~6 digits in this determinant,
    // which would spoil the volume cross-check at the 1e-10 level.
    long double det = 1.0L;
    for (int c = 0; c < 5; ++c) {
        int p = c;
        for (int r = c + 1; r < 5; ++r)
            if (std::fabs(m[r][c]) > std::fabs(m[p][c])) p = r;
        if (m[p][c] == 0.0L) return 0.0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < 5; ++r) {
            long double f = m[r][c] / m[c][c];
            for (int k = c; k < 5; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return static_cast<double>(det);
}

}  // namespace

double cayley_menger(const TetraEdges& t) {
    auto d2 = distance_table(t);
    long double m[5][5];
    for (int i = 0; i < 5; ++i) m[0][i] = (i == 0) ? 0.0L : 1.0L;
    for (int i = 1; i < 5; ++i) {
        m[i][0] = 1.0L;
        for (int j = 1; j < 5; ++j) m[i][j] = d2[i - 1][j - 1];
    }
    return det5(m);
}

TetraShape classify(const TetraEdges& t) {
    check_positive(t);
    double cm = cayley_menger(t);
    double scale = std::pow(max_length(t), 6);  // CM scales like length^6
    if (cm > 1e-12 * scale) return TetraShape::NonDegenerate;
    if (cm < -1e-12 * scale) return TetraShape::NonRealizable;
    return TetraShape::Coplanar;
}

double volume(const TetraEdges& t) {
    check_positive(t);
    double cm = cayley_menger(t);
    double scale = std::pow(max_length(t), 6);
    if (cm < -1e-12 * scale) throw NotRealizable("Cayley-Menger determinant is negative");
    return std::sqrt(std::max(cm, 0.0) / 288.0);
}

std::array<std::array<double, 3>, 4> realize_tetra(const TetraEdges& t) {
    check_positive(t);
    auto d2 = distance_table(t);
    const double L = max_length(t);

    std::array<std::array<double, 3>, 4> p{};
    p[1] = {t.l1, 0.0, 0.0};

    // Extended precision for the intermediates: the heights come from
    // differences of squared lengths, and flat shapes cancel most digits.
    auto lsq = [](long double x) { return x * x; };

    // P2 in the xy-plane from |P0P2| and |P1P2|.
    long double x2 = (d2[0][2] + lsq(t.l1) - d2[1][2]) / (2.0L * t.l1);
    long double y2sq = d2[0][2] - lsq(x2);
    if (y2sq < -1e-12L * lsq(L)) throw NotRealizable("triangle P0 P1 P2 violates the triangle inequality");
    long double y2 = std::sqrt(std::max(y2sq, 0.0L));
    if (y2 < kDegenerateHeight * L) throw DegenerateTetra("face P0 P1 P2 is degenerate");
    p[2] = {static_cast<double>(x2), static_cast<double>(y2), 0.0};

    // P3 from distances to P0, P1, P2.
    long double x3 = (d2[0][3] + lsq(t.l1) - d2[1][3]) / (2.0L * t.l1);
    long double y3 = (d2[0][3] - d2[2][3] + lsq(x2) + lsq(y2) - 2.0L * x2 * x3) / (2.0L * y2);
    long double z3sq = d2[0][3] - lsq(x3) - lsq(y3);
    if (z3sq < -1e-12L * lsq(L)) throw NotRealizable("no Euclidean embedding of the six lengths");
    long double z3 = std::sqrt(std::max(z3sq, 0.0L));
    if (z3 < kDegenerateHeight * L) throw DegenerateTetra("tetrahedron is coplanar");
    p[3] = {static_cast<double>(x3), static_cast<double>(y3), static_cast<double>(z3)};
    return p;
}

namespace {

std::array<double, 3> sub(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
std::array<double, 3> cross(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
double norm(const std::array<double, 3>& a) { return std::sqrt(dot(a, a)); }

// Interior dihedral along edge (a,b) with opposite vertices c, d.
double interior_dihedral(const std::array<std::array<double, 3>, 4>& p, int a, int b, int c, int d) {
    auto ab = sub(p[b], p[a]);
    auto n1 = cross(ab, sub(p[c], p[a]));
    auto n2 = cross(ab, sub(p[d], p[a]));
    double cosv = dot(n1, n2) / (norm(n1) * norm(n2));
    cosv = std::clamp(cosv, -1.0, 1.0);
    return std::acos(cosv);
}

}  // namespace

double volume_by_coordinates(const TetraEdges& t) {
    auto p = realize_tetra(t);
    auto u1 = sub(p[1], p[0]);
    auto u2 = sub(p[2], p[0]);
    auto u3 = sub(p[3], p[0]);
    return std::fabs(dot(u1, cross(u2, u3))) / 6.0;
}

ExteriorDihedrals exterior_dihedrals(const TetraEdges& t) {
    auto p = realize_tetra(t);
    const double pi = M_PI;
    ExteriorDihedrals a;
    a.l1 = pi - interior_dihedral(p, 0, 1, 2, 3);
    a.l2 = pi - interior_dihedral(p, 1, 2, 0, 3);
    a.l3 = pi - interior_dihedral(p, 2, 3, 0, 1);
    a.l4 = pi - interior_dihedral(p, 0, 3, 1, 2);
    a.h = pi - interior_dihedral(p, 0, 2, 1, 3);
    a.hp = pi - interior_dihedral(p, 1, 3, 0, 2);
    return a;
}

double theta_phase(const TetraEdges& t) {
    auto a = exterior_dihedrals(t);
    return a.h * t.e_h + a.hp * t.e_hp + a.l1 * t.l1 + a.l2 * t.l2 + a.l3 * t.l3 + a.l4 * t.l4;
}

double area_D(const TetraEdges& t) {
    return -theta_phase(t) + M_PI * (t.l1 + t.l2 + t.l3 + t.l4);
}

double omega_xxprime(const TetraEdges& t) {
    double v = volume(t);
    return 3.0 * v / (t.e_h * t.e_hp);
}

}  // namespace spinpoly
