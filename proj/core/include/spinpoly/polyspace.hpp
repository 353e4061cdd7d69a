#ifndef SPINPOLY_POLYSPACE_HPP
#define SPINPOLY_POLYSPACE_HPP

#include <stdexcept>
#include <vector>

#include "spinpoly/graphs.hpp"

namespace spinpoly {

struct Vec3 {
    double x = 0, y = 0, z = 0;
    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};
double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);
double triple(const Vec3& a, const Vec3& b, const Vec3& c);

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};
struct AxisVanishes : std::domain_error {
    using std::domain_error::domain_error;
};
struct DegenerateFace : std::domain_error {
    using std::domain_error::domain_error;
};

/// n vectors in 3-space with prescribed norms summing to zero; a
/// representative of a polygon-space point. Immutable by convention --
/// every operation returns a new value.
struct Configuration {
    std::vector<Vec3> vectors;

    std::vector<double> lengths() const;
    Vec3 total() const;
    /// Checks |sum x_i| <= 1e-9 * sum l_i; throws DomainError otherwise.
    void check_closure() const;
};

/// lambda_a = |sum_{i in I(a)} x_i| per internal edge, in edge order.
std::vector<double> lambda_map(const AdmissibleGraph& g, const Configuration& c);

enum class Membership { Interior, Boundary, Outside };

/// Triangle-inequality classification of internal values d against the
/// polytope Delta(l, Gamma).
Membership polytope_membership(const AdmissibleGraph& g, const std::vector<double>& ell,
                               const std::vector<double>& d);

/// Planar chain-of-triangles representative with lambda_map(c) = d.
/// Throws DomainError when d is outside the polytope.
Configuration realize(const AdmissibleGraph& g, const std::vector<double>& ell,
                      const std::vector<double>& d);

/// Rodrigues rotation of {x_i : i in I} by `angle` about sum_{i in I} x_i.
/// Note on flow times: the Hamiltonian flow of lambda_a at time t is
/// bend(c, I(a), 2t) -- pi-periodic -- and the flow of (1/2)lambda_a at
/// time t is bend(c, I(a), t), the 2*pi-periodic torus generator.
Configuration bend(const Configuration& c, const std::vector<int>& I, double angle);

/// Equality in the moduli space M_l: Gram matrices agree (1e-8) and the
/// sign of one non-degenerate triple product agrees.
bool moduli_equal(const Configuration& c1, const Configuration& c2);

/// Dihedral angle in [0, 2pi) between the two triangulation faces
/// adjacent to internal edge a; 0 or pi exactly on coplanar faces, and
/// advanced by `angle` under bend(c, I(a), angle).
double theta_angle(const AdmissibleGraph& g, const Configuration& c, int a);

/// Action coordinate gamma_a = (lambda_a + sum_{i in I(a)} l_i) / 2.
double gamma_action(const AdmissibleGraph& g, const std::vector<double>& ell,
                    const Configuration& c, int a);

/// Observables with closed-form flows, for finite-difference brackets.
/// HalfLambda is (1/2)lambda_a = (1/2)sqrt(h_a); its flow at time t is
/// bend(c, I(a), t).
struct Observable {
    enum Kind { HalfLambda, Theta } kind;
    const AdmissibleGraph* graph;
    int edge;
};

double evaluate(const Observable& f, const Configuration& c);

/// Central finite difference of g along the flow of f, step h.
/// Only HalfLambda observables generate flows.
double poisson_bracket_fd(const Configuration& c, const Observable& f, const Observable& g,
                          double h = 1e-5);

}  // namespace spinpoly

#endif
