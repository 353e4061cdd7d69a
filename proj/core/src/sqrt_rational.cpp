#include "spinpoly/sqrt_rational.hpp"

#include <stdexcept>

namespace spinpoly {

namespace {

// Pull the largest easily found square factor out of z: exact square
// detection first, then trial division by small primes. Returns the
// extracted square root; z is reduced in place to the leftover part.
Int extract_square_part(Int& z) {
    if (z == 0 || z == 1) return 1;
    Int root, rem;
    mpz_sqrtrem(root.backend().data(), rem.backend().data(), z.backend().data());
    if (rem == 0) {
        z = 1;
        return root;
    }
    Int out = 1;
    static const unsigned kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                                            47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (unsigned p : kSmallPrimes) {
        Int p2 = Int(p) * p;
        while (z % p2 == 0) {
            z /= p2;
            out *= p;
        }
    }
    return out;
}

}  // namespace

SqrtRational::SqrtRational(Rational s, Rational q) : s_(std::move(s)), q_(std::move(q)) {
    if (q_ < 0) throw std::domain_error("SqrtRational: negative radicand");
    canonicalize();
}

SqrtRational SqrtRational::sqrt_of(const Rational& r) {
    if (r < 0) throw std::domain_error("SqrtRational::sqrt_of: negative argument");
    return SqrtRational(Rational(1), r);
}

void SqrtRational::canonicalize() {
    if (s_ == 0 || q_ == 0) {
        s_ = 0;
        q_ = 1;
        return;
    }
    Int num = numerator(q_);
    Int den = denominator(q_);
    // sqrt(n/d) = sqrt(n*d)/d keeps the radicand integral.
    Int nd = num * den;
    Int sq = extract_square_part(nd);
    s_ *= Rational(sq, den);
    q_ = Rational(nd);
}

double SqrtRational::to_double() const {
    if (s_ == 0) return 0.0;
    using mpf = boost::multiprecision::mpf_float_100;
    mpf v = mpf(numerator(s_)) / mpf(denominator(s_));
    mpf rad = mpf(numerator(q_)) / mpf(denominator(q_));
    return static_cast<double>(v * sqrt(rad));
}

std::string SqrtRational::str() const {
    if (q_ == 1) return s_.str();
    return s_.str() + "*sqrt(" + q_.str() + ")";
}

}  // namespace spinpoly
