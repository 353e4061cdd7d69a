#ifndef SPINPOLY_TETRA_HPP
#define SPINPOLY_TETRA_HPP

#include <array>
#include <stdexcept>

namespace spinpoly {

struct NotRealizable : std::domain_error {
    using std::domain_error::domain_error;
};
struct DegenerateTetra : std::domain_error {
    using std::domain_error::domain_error;
};

/// Edge lengths of the tetrahedron with vertices P0=0, P1=u1, P2=u1+u2,
/// P3=u1+u2+u3:
///   |P0P1|=l1, |P1P2|=l2, |P2P3|=l3, |P0P3|=l4, |P0P2|=e_h, |P1P3|=e_hp.
struct TetraEdges {
    double e_h;   // sqrt(E), the h-diagonal
    double e_hp;  // sqrt(E')
    double l1, l2, l3, l4;
};

/// Cayley-Menger classification of the squared-distance data.
enum class TetraShape { NonDegenerate, Coplanar, NonRealizable };

TetraShape classify(const TetraEdges& t);

/// Cayley-Menger determinant of the six squared lengths (5x5 with the
/// standard border row of ones); 288 V^2 for realizable data.
double cayley_menger(const TetraEdges& t);

/// Volume via V = sqrt(CM/288). Throws NotRealizable when CM < 0 beyond
/// tolerance.
double volume(const TetraEdges& t);

/// Coordinate realization P0..P3 (P0 at origin, P1 on the x-axis, P2 in
/// the xy-plane, P3 above); the single tolerance ladder for degeneracy.
/// Throws NotRealizable / DegenerateTetra.
std::array<std::array<double, 3>, 4> realize_tetra(const TetraEdges& t);

/// Volume from the coordinate realization (triple product / 6) --
/// independent route used as the oracle against cayley_menger.
double volume_by_coordinates(const TetraEdges& t);

/// Exterior dihedral angles, keyed by edge role: pi minus the interior
/// angle, each in (0, pi) for a non-degenerate tetrahedron.
struct ExteriorDihedrals {
    double h, hp, l1, l2, l3, l4;
};
ExteriorDihedrals exterior_dihedrals(const TetraEdges& t);

/// theta(E,E') = alpha sqrt(E) + alpha' sqrt(E') + sum_i alpha_i l_i.
double theta_phase(const TetraEdges& t);

/// Symplectic area A(E,E') = -theta(E,E') + pi (l1+l2+l3+l4).
double area_D(const TetraEdges& t);

/// |omega(X, X')| = 3 V / sqrt(E E') for the Hamiltonian fields of
/// (1/2)sqrt(h) and (1/2)sqrt(h').
double omega_xxprime(const TetraEdges& t);

}  // namespace spinpoly

#endif
