#include "spinpoly/exact_matrix.hpp"

#include <stdexcept>

namespace spinpoly {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("ExactMatrix: shape mismatch in product");
    ExactMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rational& b = o.at(k, j);
                if (b != 0) r.at(i, j) += a * b;
            }
        }
    }
    return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("ExactMatrix: shape mismatch");
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + o.entries_[i];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("ExactMatrix: shape mismatch");
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - o.entries_[i];
    return r;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

void ExactMatrix::add_scaled_identity(const Rational& c) {
    if (rows_ != cols_) throw std::invalid_argument("ExactMatrix: not square");
    for (std::size_t i = 0; i < rows_; ++i) at(i, i) += c;
}

bool ExactMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

bool ExactMatrix::is_scalar(const Rational& c) const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? c : Rational(0))) return false;
    return true;
}

std::vector<std::size_t> ExactMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t p = row;
        while (p < rows_ && at(p, col) == 0) ++p;
        if (p == rows_) continue;
        if (p != row)
            for (std::size_t j = col; j < cols_; ++j) std::swap(at(p, j), at(row, j));
        Rational inv = Rational(1) / at(row, col);
        for (std::size_t j = col; j < cols_; ++j) at(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || at(i, col) == 0) continue;
            Rational f = at(i, col);
            for (std::size_t j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

void normalize_vector(std::vector<Rational>& v) {
    Int lcm = 1;
    for (const auto& e : v)
        if (e != 0) mpz_lcm(lcm.backend().data(), lcm.backend().data(), denominator(e).backend().data());
    Int gcd = 0;
    for (auto& e : v) {
        if (e == 0) continue;
        e *= lcm;
        mpz_gcd(gcd.backend().data(), gcd.backend().data(), numerator(e).backend().data());
    }
    if (gcd == 0) return;
    int s = 0;
    for (auto& e : v) {
        if (s == 0 && e != 0) s = e.sign();
    }
    if (s < 0) gcd = -gcd;
    for (auto& e : v)
        if (e != 0) e /= gcd;
}

std::vector<std::vector<Rational>> ExactMatrix::kernel() const {
    ExactMatrix m = *this;
    std::vector<std::size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
        normalize_vector(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rational> ExactMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("ExactMatrix::apply: size mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
    return out;
}

ExactMatrix inverse(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    std::size_t n = m.rows();
    ExactMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto pivots = aug.rref();
    if (pivots.size() != n || pivots.back() != n - 1) throw std::domain_error("inverse: singular matrix");
    ExactMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

ColumnSolver::ColumnSolver(const ExactMatrix& basis) : basis_(basis), dim_(basis.cols()) {
    // Row-reduce a copy to locate a set of rows on which the columns are
    // invertible, then invert that square block once.
    ExactMatrix work = basis.transposed();  // dim_ x rows
    std::size_t rows = basis.rows();
    std::size_t r = 0;
    std::vector<std::size_t> piv;
    for (std::size_t col = 0; col < rows && r < dim_; ++col) {
        std::size_t p = r;
        while (p < dim_ && work.at(p, col) == 0) ++p;
        if (p == dim_) continue;
        if (p != r)
            for (std::size_t j = col; j < rows; ++j) std::swap(work.at(p, j), work.at(r, j));
        Rational inv = Rational(1) / work.at(r, col);
        for (std::size_t j = col; j < rows; ++j) work.at(r, j) *= inv;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (i == r || work.at(i, col) == 0) continue;
            Rational f = work.at(i, col);
            for (std::size_t j = col; j < rows; ++j) work.at(i, j) -= f * work.at(r, j);
        }
        piv.push_back(col);
        ++r;
    }
    if (piv.size() != dim_) throw std::domain_error("ColumnSolver: columns are dependent");
    pivot_rows_ = piv;
    ExactMatrix block(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) block.at(i, j) = basis.at(pivot_rows_[i], j);
    minv_ = inverse(block);
}

bool ColumnSolver::solve(const std::vector<Rational>& w, std::vector<Rational>& x) const {
    x.assign(dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if (minv_.at(i, j) != 0 && w[pivot_rows_[j]] != 0) x[i] += minv_.at(i, j) * w[pivot_rows_[j]];
    // Exact consistency check over every row, not just the pivot block.
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        Rational acc(0);
        for (std::size_t j = 0; j < dim_; ++j)
            if (basis_.at(i, j) != 0 && x[j] != 0) acc += basis_.at(i, j) * x[j];
        if (acc != w[i]) return false;
    }
    return true;
}

}  // namespace spinpoly
