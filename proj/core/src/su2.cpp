#include "spinpoly/su2.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace spinpoly {

namespace irrep {

ExactMatrix h_matrix(long m) {
    ExactMatrix h(m + 1, m + 1);
    for (long k = 0; k <= m; ++k) h.at(k, k) = m - 2 * k;
    return h;
}

ExactMatrix e_matrix(long m) {
    ExactMatrix e(m + 1, m + 1);
    for (long k = 1; k <= m; ++k) e.at(k - 1, k) = k * (m + 1 - k);
    return e;
}

ExactMatrix f_matrix(long m) {
    ExactMatrix f(m + 1, m + 1);
    for (long k = 0; k < m; ++k) f.at(k + 1, k) = 1;
    return f;
}

Int gram_entry(long m, long k) {
    // k! * m! / (m-k)!
    Int g = 1;
    for (long i = 1; i <= k; ++i) g *= i;
    for (long i = m - k + 1; i <= m; ++i) g *= i;
    return g;
}

}  // namespace irrep

namespace {

void enumerate_slice(const std::vector<long>& ell, long target, std::vector<std::vector<long>>& out) {
    std::vector<long> k(ell.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, long remaining) -> void {
        if (i == ell.size()) {
            if (remaining == 0) out.push_back(k);
            return;
        }
        long hi = std::min(ell[i], remaining);
        for (long v = 0; v <= hi; ++v) {
            k[i] = v;
            self(self, i + 1, remaining - v);
        }
        k[i] = 0;
    };
    rec(rec, 0, target);
}

long long encode(const std::vector<long>& k, const std::vector<long long>& strides) {
    long long code = 0;
    for (std::size_t i = 0; i < k.size(); ++i) code += k[i] * strides[i];
    return code;
}

}  // namespace

InvariantSpace::InvariantSpace(std::vector<long> boundary) : boundary_(std::move(boundary)) {
    const std::size_t n = boundary_.size();
    if (n == 0) throw std::invalid_argument("empty boundary");
    for (long l : boundary_)
        if (l < 0) throw std::invalid_argument("negative boundary color");

    strides_.assign(n, 1);
    for (std::size_t i = 1; i < n; ++i) strides_[i] = strides_[i - 1] * (boundary_[i - 1] + 1);

    long total = 0;
    for (long l : boundary_) total += l;
    if (total % 2 != 0) {
        basis_ = ExactMatrix(0, 0);
        gram_ = ExactMatrix(0, 0);
        return;
    }
    const long half = total / 2;
    enumerate_slice(boundary_, half, slice_);
    for (std::size_t s = 0; s < slice_.size(); ++s) index_[encode(slice_[s], strides_)] = static_cast<int>(s);

    std::vector<std::vector<long>> upper;  // weight-2 slice
    enumerate_slice(boundary_, half - 1, upper);
    std::unordered_map<long long, int> upper_index;
    for (std::size_t s = 0; s < upper.size(); ++s) upper_index[encode(upper[s], strides_)] = static_cast<int>(s);

    // Total raising operator E restricted to the weight-zero slice.
    ExactMatrix e_total(upper.size(), slice_.size());
    for (std::size_t col = 0; col < slice_.size(); ++col) {
        std::vector<long> k = slice_[col];
        for (std::size_t i = 0; i < n; ++i) {
            if (k[i] == 0) continue;
            long coeff = k[i] * (boundary_[i] + 1 - k[i]);
            k[i] -= 1;
            e_total.at(upper_index.at(encode(k, strides_)), col) += coeff;
            k[i] += 1;
        }
    }

    auto kern = e_total.kernel();
    basis_ = ExactMatrix(slice_.size(), kern.size());
    for (std::size_t j = 0; j < kern.size(); ++j)
        for (std::size_t i = 0; i < slice_.size(); ++i) basis_.at(i, j) = kern[j][i];

    // Verify the total lowering operator also kills the kernel (the
    // weight-zero E-kernel must be the genuine invariant subspace).
    std::vector<std::vector<long>> lower;
    enumerate_slice(boundary_, half + 1, lower);
    std::unordered_map<long long, int> lower_index;
    for (std::size_t s = 0; s < lower.size(); ++s) lower_index[encode(lower[s], strides_)] = static_cast<int>(s);
    for (std::size_t j = 0; j < kern.size(); ++j) {
        std::vector<Rational> image(lower.size(), Rational(0));
        for (std::size_t col = 0; col < slice_.size(); ++col) {
            if (basis_.at(col, j) == 0) continue;
            std::vector<long> k = slice_[col];
            for (std::size_t i = 0; i < n; ++i) {
                if (k[i] == boundary_[i]) continue;
                k[i] += 1;
                image[lower_index.at(encode(k, strides_))] += basis_.at(col, j);
                k[i] -= 1;
            }
        }
        for (const auto& e : image)
            if (e != 0) throw std::logic_error("invariant basis vector not killed by total F");
    }

    metric_.reserve(slice_.size());
    for (const auto& k : slice_) {
        Int g = 1;
        for (std::size_t i = 0; i < n; ++i) g *= irrep::gram_entry(boundary_[i], k[i]);
        metric_.emplace_back(g);
    }

    gram_ = ExactMatrix(dim(), dim());
    for (std::size_t a = 0; a < dim(); ++a)
        for (std::size_t b = a; b < dim(); ++b) {
            Rational acc(0);
            for (std::size_t s = 0; s < slice_.size(); ++s)
                if (basis_.at(s, a) != 0 && basis_.at(s, b) != 0)
                    acc += metric_[s] * basis_.at(s, a) * basis_.at(s, b);
            gram_.at(a, b) = acc;
            gram_.at(b, a) = acc;
        }

    if (dim() > 0) solver_ = std::make_shared<ColumnSolver>(basis_);
}

int InvariantSpace::slice_index(const std::vector<long>& k) const {
    auto it = index_.find(encode(k, strides_));
    return it == index_.end() ? -1 : it->second;
}

ExactMatrix InvariantSpace::casimir_restricted(const std::vector<int>& I) const {
    if (I.empty()) throw std::invalid_argument("empty Casimir index set");
    const std::size_t n = boundary_.size();
    const std::size_t d = dim();
    ExactMatrix image(slice_.size(), d);

    // Q_I = sum_{i in I} l_i(l_i+2) + sum_{i != j in I} (H_i H_j + 4 E_i F_j),
    // applied column by column to the basis; each term preserves the slice.
    Rational scalar(0);
    for (int i : I) scalar += Rational(boundary_[i - 1] * (boundary_[i - 1] + 2));

    for (std::size_t col = 0; col < d; ++col) {
        for (std::size_t s = 0; s < slice_.size(); ++s) {
            const Rational& c = basis_.at(s, col);
            if (c == 0) continue;
            const std::vector<long>& k = slice_[s];
            // diagonal part
            Rational diag = scalar;
            for (int i : I)
                for (int j : I) {
                    if (i == j) continue;
                    diag += Rational((boundary_[i - 1] - 2 * k[i - 1]) * (boundary_[j - 1] - 2 * k[j - 1]));
                }
            image.at(s, col) += diag * c;
            // off-diagonal: 4 E_i F_j for ordered pairs i != j
            std::vector<long> kk = k;
            for (int i : I) {
                if (k[i - 1] == 0) continue;
                long ecoeff = k[i - 1] * (boundary_[i - 1] + 1 - k[i - 1]);
                for (int j : I) {
                    if (j == i || k[j - 1] == boundary_[j - 1]) continue;
                    kk[i - 1] -= 1;
                    kk[j - 1] += 1;
                    image.at(index_.at(encode(kk, strides_)), col) += Rational(4 * ecoeff) * c;
                    kk[i - 1] += 1;
                    kk[j - 1] -= 1;
                }
            }
        }
    }

    // The Casimir preserves the subspace; solve for exact coordinates.
    ExactMatrix out(d, d);
    std::vector<Rational> w(slice_.size()), x;
    for (std::size_t col = 0; col < d; ++col) {
        for (std::size_t s = 0; s < slice_.size(); ++s) w[s] = image.at(s, col);
        if (!solver_->solve(w, x))
            throw std::logic_error("Casimir image left the invariant subspace");
        for (std::size_t r = 0; r < d; ++r) out.at(r, col) = x[r];
    }
    return out;
}

InvariantSpace invariant_subspace(const std::vector<long>& boundary) { return InvariantSpace(boundary); }

long long dim_invariant(const std::vector<long>& boundary) {
    std::map<long, long long> mult{{0, 1}};
    for (long l : boundary) {
        std::map<long, long long> next;
        for (const auto& [m, c] : mult)
            for (long t = std::labs(m - l); t <= m + l; t += 2) next[t] += c;
        mult = std::move(next);
    }
    auto it = mult.find(0);
    return it == mult.end() ? 0 : it->second;
}

ExactMatrix casimir_on_tensor(const std::vector<long>& boundary, const std::vector<int>& I) {
    if (I.empty()) throw std::invalid_argument("empty Casimir index set");
    const std::size_t n = boundary.size();
    long long dim = 1;
    for (long l : boundary) dim *= (l + 1);

    std::vector<long long> strides(n, 1);
    for (std::size_t i = 1; i < n; ++i) strides[i] = strides[i - 1] * (boundary[i - 1] + 1);

    long scalar = 0;
    for (int i : I) scalar += boundary[i - 1] * (boundary[i - 1] + 2);

    ExactMatrix q(dim, dim);
    std::vector<long> k(n, 0);
    for (long long col = 0; col < dim; ++col) {
        long long rest = col;
        for (std::size_t i = 0; i < n; ++i) {
            k[i] = (rest / strides[i]) % (boundary[i] + 1);
        }
        long diag = scalar;
        for (int i : I)
            for (int j : I)
                if (i != j) diag += (boundary[i - 1] - 2 * k[i - 1]) * (boundary[j - 1] - 2 * k[j - 1]);
        q.at(col, col) += diag;
        for (int i : I) {
            if (k[i - 1] == 0) continue;
            long ecoeff = k[i - 1] * (boundary[i - 1] + 1 - k[i - 1]);
            for (int j : I) {
                if (j == i || k[j - 1] == boundary[j - 1]) continue;
                long long row = col - strides[i - 1] + strides[j - 1];
                q.at(row, col) += 4 * ecoeff;
            }
        }
    }
    return q;
}

ExactMatrix h_a_matrix(const AdmissibleGraph& g, const InvariantSpace& space, int a) {
    if (space.dim() == 0) throw std::invalid_argument("trivial invariant space");
    return space.casimir_restricted(g.i_subset(a));
}

std::vector<JointEigenvector> joint_eigenbasis(const AdmissibleGraph& g, const InvariantSpace& space) {
    const std::size_t d = space.dim();
    auto colorings = enumerate_colorings(g, space.boundary());
    if (colorings.size() != d)
        throw std::logic_error("coloring count does not match invariant dimension");

    std::vector<ExactMatrix> h;
    for (std::size_t a = 0; a < g.internal_edges().size(); ++a) h.push_back(h_a_matrix(g, space, a));

    std::vector<JointEigenvector> out;
    for (const auto& phi : colorings) {
        // joint kernel of { H_a - phi(a)(phi(a)+2) }
        std::size_t na = h.size();
        ExactMatrix stacked(na * d, d);
        for (std::size_t a = 0; a < na; ++a) {
            Rational mu(phi.internal[a] * (phi.internal[a] + 2));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    stacked.at(a * d + i, j) = h[a].at(i, j) - (i == j ? mu : Rational(0));
        }
        auto kern = stacked.kernel();
        if (kern.size() != 1) throw std::logic_error("joint eigenspace dimension is not 1");
        JointEigenvector ev;
        ev.coloring = phi;
        ev.coords = std::move(kern[0]);
        Rational n2(0);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (ev.coords[i] != 0 && ev.coords[j] != 0)
                    n2 += space.gram().at(i, j) * ev.coords[i] * ev.coords[j];
        ev.norm2 = n2;
        out.push_back(std::move(ev));
    }
    return out;
}

std::vector<std::vector<Overlap>> overlap_matrix(const AdmissibleGraph& g1, const AdmissibleGraph& g2,
                                                 const InvariantSpace& space) {
    auto b1 = joint_eigenbasis(g1, space);
    auto b2 = joint_eigenbasis(g2, space);
    const std::size_t d = space.dim();

    std::vector<std::vector<Overlap>> out(b1.size(), std::vector<Overlap>(b2.size()));
    for (std::size_t r = 0; r < b1.size(); ++r) {
        for (std::size_t c = 0; c < b2.size(); ++c) {
            Rational pairing(0);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    if (b1[r].coords[i] != 0 && b2[c].coords[j] != 0)
                        pairing += space.gram().at(i, j) * b1[r].coords[i] * b2[c].coords[j];
            Overlap o;
            o.exact_sq = pairing * pairing / (b1[r].norm2 * b2[c].norm2);
            o.sign = pairing.sign();
            o.value = o.sign * std::sqrt(to_double(o.exact_sq));
            out[r][c] = o;
        }
    }
    return out;
}

}  // namespace spinpoly
