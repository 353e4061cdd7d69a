#ifndef SPINPOLY_SQRT_RATIONAL_HPP
#define SPINPOLY_SQRT_RATIONAL_HPP

#include <string>

#include "spinpoly/rational.hpp"

namespace spinpoly {

/// Exact value of the form s * sqrt(q) with s, q rational and q >= 0.
/// This is the value domain of 6j-symbols and of eigenvector norms:
/// the square s^2 * q is always an exact rational, so squared-value
/// comparisons never touch floating point.
class SqrtRational {
public:
    SqrtRational() : s_(0), q_(1) {}
    explicit SqrtRational(const Rational& s) : s_(s), q_(1) {}
    SqrtRational(Rational s, Rational q);

    /// sqrt(r) for r >= 0, with perfect-square factors folded into s.
    static SqrtRational sqrt_of(const Rational& r);

    const Rational& coeff() const { return s_; }
    const Rational& radicand() const { return q_; }

    bool is_zero() const { return s_ == 0; }
    int sign() const { return s_.sign(); }

    /// Exact square s^2 * q.
    Rational squared() const { return s_ * s_ * q_; }

    SqrtRational operator-() const { return SqrtRational(-s_, q_, no_canon{}); }
    SqrtRational& operator*=(const Rational& r) { s_ *= r; if (s_ == 0) q_ = 1; return *this; }
    friend SqrtRational operator*(SqrtRational a, const Rational& r) { a *= r; return a; }

    bool operator==(const SqrtRational& o) const { return s_ == o.s_ && q_ == o.q_; }

    double to_double() const;
    std::string str() const;

private:
    struct no_canon {};
    SqrtRational(Rational s, Rational q, no_canon) : s_(std::move(s)), q_(std::move(q)) {}
    void canonicalize();

    Rational s_;
    Rational q_;  // q >= 0, no small perfect-square factors
};

}  // namespace spinpoly

#endif
