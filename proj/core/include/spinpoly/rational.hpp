#ifndef SPINPOLY_RATIONAL_HPP
#define SPINPOLY_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

namespace spinpoly {

// Exact arithmetic everywhere: no rounding ever happens inside the
// representation-theoretic computations. Floats appear only at the
// reporting boundary.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Rational& r) { return r.sign(); }

/// Convert an exact rational to double without overflowing on huge
/// numerator/denominator (mpq_get_d handles the scaling internally).
inline double to_double(const Rational& r) {
    return mpq_get_d(r.backend().data());
}

inline double to_double(const Int& z) {
    return mpz_get_d(z.backend().data());
}

}  // namespace spinpoly

#endif
