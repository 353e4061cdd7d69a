#ifndef SPINPOLY_COUPLING_HPP
#define SPINPOLY_COUPLING_HPP

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "spinpoly/graphs.hpp"
#include "spinpoly/rational.hpp"

namespace spinpoly {

/// Matrix-free route to the joint eigenbasis: for each admissible coloring
/// the eigenvector is assembled exactly by composing lowest-weight
/// Clebsch-Gordan embeddings V_m -> V_p (x) V_q along the tree, then the
/// Casimir eigen-equations are checked by sparse operator application.
/// All arithmetic is 128-bit integer with overflow audits, so every verdict
/// is exact. Requires n <= 8 half-edges and labels < 256.

/// Multi-index (k_1..k_n) packed 8 bits per half-edge.
using PackedIndex = std::uint64_t;
PackedIndex pack_index(const std::vector<long>& k);

/// Integer components of the coloring's joint eigenvector on the
/// zero-weight slice (defined up to overall scale, never all zero).
std::unordered_map<PackedIndex, Int> coupled_eigenvector(const AdmissibleGraph& g,
                                                         const Coloring& phi);

/// Builds the eigenvector and verifies, exactly:
///   E_total v = 0,  F_total v = 0,  v != 0,
///   Q_{I(a)} v = phi(a)(phi(a)+2) v  for every internal edge a.
bool verify_coloring_eigenvector(const AdmissibleGraph& g, const Coloring& phi);

/// dim ker of E_total on the zero-weight slice modulo the prime 2^61 - 1.
/// The rank mod p is at most the rational rank, so this is an upper bound
/// on the invariant dimension; exhibiting as many independent invariant
/// vectors certifies the exact value.
long long invariant_dim_mod_p(const std::vector<long>& boundary);

/// Batched exact verifier for one boundary: precomputes the weight slices
/// and the index transitions of E_i F_j once, then checks every coloring of
/// a graph with dense integer arithmetic. Same verdicts as
/// verify_coloring_eigenvector, an order of magnitude faster in bulk.
class SpectrumVerifier {
public:
    explicit SpectrumVerifier(std::vector<long> boundary);
    ~SpectrumVerifier();
    SpectrumVerifier(const SpectrumVerifier&) = delete;
    SpectrumVerifier& operator=(const SpectrumVerifier&) = delete;

    const std::vector<long>& boundary() const { return boundary_; }
    /// mod-p upper bound for the invariant dimension (see above).
    long long certified_dim() const { return dim_p_; }

    /// Verifies the joint eigenvector of every admissible coloring of g and
    /// returns their number; -1 if any check fails.
    long long verify_graph(const AdmissibleGraph& g) const;

private:
    struct Tables;
    std::vector<long> boundary_;
    long long dim_p_;
    std::unique_ptr<Tables> t_;
};

}  // namespace spinpoly

#endif
