#pragma once

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spinpoly/graphs.hpp"
#include "spinpoly/rational.hpp"
#include "spinpoly/sqrt_rational.hpp"

namespace spinpoly {

// Labels in the m-convention (spin = m/2), laid out as
//   (m1 m2 m ; m3 m4 mp)
// with triads (m1,m2,m), (m3,m4,m), (m1,mp,m4), (m2,mp,m3).
struct SixJLabels {
    long m1, m2, m;
    long m3, m4, mp;

    bool admissible() const;
};

// n! as a big integer, cached process-wide.
const Int& factorial(long n);

// Exact Wigner 6j via the Racah single sum; inadmissible labels give 0.
SqrtRational racah_6j(const SixJLabels& lbl);

struct OverlapPrediction {
    SqrtRational magnitude;  // sqrt((m+1)(mp+1)) * |6j|
    int sign;                // Racah sign times the renormalization parity
};

OverlapPrediction overlap_from_6j(long k, const std::array<long, 4>& ell, long m, long mp);

struct RobertsValue {
    double overlap_scale;  // sqrt(2/(3pi)) k^{-1/2} (EE')^{1/4} V^{-1/2} cos(k theta/2 + pi/4)
    double sixj_scale;     // sqrt(2/(3pi)) k^{-3/2} V^{-1/2} cos(k theta/2 + pi/4)
    double envelope;       // sqrt(2/(3pi)) k^{-3/2} V^{-1/2}
    double cosine;         // cos(k theta/2 + pi/4)
};

RobertsValue roberts_asymptotic(long k, double E, double Ep, const std::array<double, 4>& ell);

// Bohr-Sommerfeld integrality at level k: for every internal edge a,
// (k/2)(sqrt(E_a) + sum_{i in I(a)} ell_i) + eps_a/2 is an integer,
// with sqrt(E_a) = (phi(a)+1)/k and eps_a = (#I(a)+1) mod 2.
bool bs_check(const AdmissibleGraph& g, const std::vector<long>& ell, long k,
              const Coloring& phi);

// E = ((m+1)/k)^2 and the shifted eigenvalue m(m+2)/k^2; checks E - 1/k^2 exactly.
std::pair<Rational, Rational> eigenvalue_shift(long k, long m);

// Integer m >= 0 of the given parity minimizing |(m+1)/k - target|, ties to smaller m.
long nearest_admissible_label(long k, double target, int parity);

}  // namespace spinpoly
