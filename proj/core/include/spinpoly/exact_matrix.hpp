#ifndef SPINPOLY_EXACT_MATRIX_HPP
#define SPINPOLY_EXACT_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "spinpoly/rational.hpp"

namespace spinpoly {

/// Dense matrix over exact rationals. The carrier for Casimir operators,
/// invariant subspaces and recoupling matrices.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const ExactMatrix& o) const = default;

    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix transposed() const;

    void add_scaled_identity(const Rational& c);

    bool is_zero() const;
    bool is_scalar(const Rational& c) const;

    /// In-place reduced row echelon form; returns the pivot column list.
    std::vector<std::size_t> rref();

    /// Basis of the right kernel. Each vector is scaled to coprime integers
    /// with positive first non-zero entry, so the span is reproducible.
    std::vector<std::vector<Rational>> kernel() const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

/// Scale v so entries are coprime integers and the first non-zero one is
/// positive. No-op on the zero vector.
void normalize_vector(std::vector<Rational>& v);

/// Solves B x = w for x where the columns of B are independent.
/// Returns false when w is outside the column span.
class ColumnSolver {
public:
    explicit ColumnSolver(const ExactMatrix& basis);
    bool solve(const std::vector<Rational>& w, std::vector<Rational>& x) const;
    std::size_t dim() const { return dim_; }

private:
    ExactMatrix basis_;
    ExactMatrix minv_;                    // inverse of the pivot-row square block
    std::vector<std::size_t> pivot_rows_;
    std::size_t dim_;
};

/// Inverse of a square matrix; throws on singular input.
ExactMatrix inverse(const ExactMatrix& m);

}  // namespace spinpoly

#endif
