#ifndef SPINPOLY_GRAPHS_HPP
#define SPINPOLY_GRAPHS_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinpoly {

/// Syntax error in the graph text format.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structural violation (wrong valence, cycle, disconnection, bad numbering).
/// The message names the failing condition.
struct NotAdmissible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Connected acyclic trivalent graph with numbered half-edges.
/// Vertices are triples of edge slots; internal edges carry an explicit
/// orientation (tail = vertex of first occurrence, head = second).
class AdmissibleGraph {
public:
    struct Slot {
        bool half;  // half-edge (numbered) or internal edge (indexed)
        int id;     // half-edge number 1..n, or internal edge index 0..n-4
        bool operator==(const Slot&) const = default;
    };
    struct Vertex {
        std::string name;
        std::array<Slot, 3> slots;
    };
    struct InternalEdge {
        std::string name;  // as written in the text format, e.g. "e1"
        int tail;          // vertex index
        int head;
    };

    /// Validates and builds; throws NotAdmissible on structural violations.
    AdmissibleGraph(std::vector<Vertex> vertices, std::vector<InternalEdge> internal, int n_half);

    int n_half() const { return n_half_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<InternalEdge>& internal_edges() const { return internal_; }
    int vertex_of_half_edge(int h) const { return half_to_vertex_.at(h - 1); }
    int internal_index(const std::string& name) const;

    /// Half-edges reachable from the tail of edge a without crossing its
    /// head; pass reversed=true for the complementary orientation.
    std::vector<int> i_subset(int a, bool reversed = false) const;

    /// Same graph with the orientation of internal edge a flipped.
    AdmissibleGraph with_flipped_edge(int a) const;

private:
    int n_half_;
    std::vector<Vertex> vertices_;
    std::vector<InternalEdge> internal_;
    std::vector<int> half_to_vertex_;
};

/// Clebsch-Gordan predicate: parity plus the triangle inequalities.
bool clebsch_gordan_ok(long p, long l, long m);

/// Edge -> color map for a specific graph: boundary colors on half-edges
/// (index i-1 for half-edge i) and one color per internal edge index.
struct Coloring {
    std::vector<long> half;
    std::vector<long> internal;
    bool operator==(const Coloring&) const = default;
};

/// Parses the one-declaration-per-line text format:
///   vertex <name> = <slot> <slot> <slot>
/// with slots h<k> or e<name>; '#' starts a comment.
AdmissibleGraph parse_graph(const std::string& text);

/// The chain graph with half-edges 1,2 at one end and n at the other;
/// oriented so that I(a_i) = {1, ..., i+1}.
AdmissibleGraph caterpillar(int n);

/// Named graphs used throughout: g4 (pairs 1,2|3,4), g4p (pairs 2,3|1,4),
/// g4q (pairs 1,3|2,4), cat<n>, star6.
AdmissibleGraph builtin_graph(const std::string& name);

/// All admissible graphs with n numbered half-edges ((2n-5)!! of them),
/// built by leaf insertion; orientations are construction order.
std::vector<AdmissibleGraph> all_graphs(int n);

/// Admissible colorings with the given boundary, in lexicographic order of
/// the internal colors. Empty when none exist.
std::vector<Coloring> enumerate_colorings(const AdmissibleGraph& g, const std::vector<long>& boundary);

/// Non-triviality of Inv(V_l1 x ... x V_ln): even sum and polygonal
/// inequalities l_j <= (sum l_i)/2.
bool nontrivial(const std::vector<long>& boundary);

}  // namespace spinpoly

#endif
