#ifndef SPINPOLY_SU2_HPP
#define SPINPOLY_SU2_HPP

#include <memory>
#include <unordered_map>
#include <vector>

#include "spinpoly/exact_matrix.hpp"
#include "spinpoly/graphs.hpp"
#include "spinpoly/rational.hpp"
#include "spinpoly/sqrt_rational.hpp"

namespace spinpoly {

/// Integer weight basis v_0..v_m of the irrep V_m (dimension m+1):
///   H v_k = (m-2k) v_k,  E v_k = k(m+1-k) v_{k-1},  F v_k = v_{k+1},
/// with diagonal Gram entries g_k = k! m! / (m-k)!. Every generator matrix
/// is integer-valued; irrationality is confined to final normalizations.
namespace irrep {
ExactMatrix h_matrix(long m);
ExactMatrix e_matrix(long m);
ExactMatrix f_matrix(long m);
Int gram_entry(long m, long k);
}  // namespace irrep

/// Exact basis of Inv(V_{l1} x ... x V_{ln}) inside the weight-zero slice
/// of the product weight basis, together with the product Gram metric.
class InvariantSpace {
public:
    explicit InvariantSpace(std::vector<long> boundary);

    const std::vector<long>& boundary() const { return boundary_; }
    std::size_t dim() const { return basis_.cols(); }
    std::size_t slice_size() const { return slice_.size(); }

    /// Multi-indices (k_1..k_n) spanning the weight-zero slice.
    const std::vector<std::vector<long>>& slice() const { return slice_; }
    /// Slice-coordinates basis matrix, slice_size x dim, integer entries.
    const ExactMatrix& basis() const { return basis_; }
    /// Gram matrix of the basis columns under the product metric.
    const ExactMatrix& gram() const { return gram_; }
    const std::vector<Rational>& slice_metric() const { return metric_; }

    /// Matrix of the Casimir Q_{I} restricted to this subspace, in the
    /// stored basis. I is a subset of {1..n}. Orientation independence
    /// (Q_I = Q_{I^c} on the subspace) is a theorem, not an assumption.
    ExactMatrix casimir_restricted(const std::vector<int>& I) const;

    int slice_index(const std::vector<long>& k) const;  // -1 when absent

private:
    std::vector<long> boundary_;
    std::vector<std::vector<long>> slice_;
    std::vector<long long> strides_;
    std::unordered_map<long long, int> index_;
    std::vector<Rational> metric_;  // diagonal product Gram on the slice
    ExactMatrix basis_;
    ExactMatrix gram_;
    std::shared_ptr<const ColumnSolver> solver_;
};

/// Builds the invariant subspace: exact kernel of total E on the
/// weight-zero slice (total F is verified to vanish as well).
InvariantSpace invariant_subspace(const std::vector<long>& boundary);

/// Dimension oracle by iterated Clebsch-Gordan multiplicity counting;
/// never touches matrices.
long long dim_invariant(const std::vector<long>& boundary);

/// Full matrix of Q_I on the ambient tensor product (product weight
/// basis); exponential in n, intended for small boundaries.
ExactMatrix casimir_on_tensor(const std::vector<long>& boundary, const std::vector<int>& I);

/// Matrix of H_{a,l} = Q_{I(a)}|_{Inv} in the stored invariant basis.
ExactMatrix h_a_matrix(const AdmissibleGraph& g, const InvariantSpace& space, int a);

struct JointEigenvector {
    Coloring coloring;
    std::vector<Rational> coords;  // in the invariant basis, first non-zero > 0
    Rational norm2;                // exact squared Gram norm
};

/// One unit joint eigenvector per admissible coloring; throws
/// std::logic_error if any joint eigenspace is not one-dimensional.
std::vector<JointEigenvector> joint_eigenbasis(const AdmissibleGraph& g, const InvariantSpace& space);

struct Overlap {
    Rational exact_sq;  // exact square of the normalized pairing
    int sign;
    double value;
};

/// Change-of-basis pairings (Psi_phi, Psi'_psi) between the joint
/// eigenbases of two graphs on the same invariant space. Rows follow
/// enumerate_colorings(g1), columns enumerate_colorings(g2).
std::vector<std::vector<Overlap>> overlap_matrix(const AdmissibleGraph& g1, const AdmissibleGraph& g2,
                                                 const InvariantSpace& space);

}  // namespace spinpoly

#endif
