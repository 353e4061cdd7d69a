#include "spinpoly/graphs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace spinpoly {

bool clebsch_gordan_ok(long p, long l, long m) {
    if (p < 0 || l < 0 || m < 0) return false;
    if ((p + l + m) % 2 != 0) return false;
    return p <= l + m && l <= m + p && m <= l + p;
}

AdmissibleGraph::AdmissibleGraph(std::vector<Vertex> vertices, std::vector<InternalEdge> internal,
                                 int n_half)
    : n_half_(n_half), vertices_(std::move(vertices)), internal_(std::move(internal)) {
    if (n_half_ < 3) throw NotAdmissible("a graph needs at least 3 half-edges");
    if (static_cast<int>(vertices_.size()) != n_half_ - 2)
        throw NotAdmissible("vertex count must be n_half - 2");
    if (static_cast<int>(internal_.size()) != n_half_ - 3)
        throw NotAdmissible("internal edge count must be n_half - 3");

    half_to_vertex_.assign(n_half_, -1);
    std::vector<int> internal_seen(internal_.size(), 0);
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        for (const Slot& s : vertices_[v].slots) {
            if (s.half) {
                if (s.id < 1 || s.id > n_half_) throw NotAdmissible("half-edge number out of range");
                if (half_to_vertex_[s.id - 1] != -1)
                    throw NotAdmissible("half-edge " + std::to_string(s.id) + " appears twice");
                half_to_vertex_[s.id - 1] = static_cast<int>(v);
            } else {
                if (s.id < 0 || s.id >= static_cast<int>(internal_.size()))
                    throw NotAdmissible("internal edge index out of range");
                ++internal_seen[s.id];
            }
        }
    }
    for (int h = 0; h < n_half_; ++h)
        if (half_to_vertex_[h] == -1)
            throw NotAdmissible("half-edge " + std::to_string(h + 1) + " is missing");
    for (std::size_t a = 0; a < internal_.size(); ++a) {
        if (internal_seen[a] != 2)
            throw NotAdmissible("internal edge " + internal_[a].name + " must join exactly two vertices");
        if (internal_[a].tail == internal_[a].head)
            throw NotAdmissible("internal edge " + internal_[a].name + " is a loop");
    }

    // n_half-2 vertices with n_half-3 internal edges: connected iff acyclic.
    std::vector<std::vector<int>> adj(vertices_.size());
    for (const auto& e : internal_) {
        adj[e.tail].push_back(e.head);
        adj[e.head].push_back(e.tail);
    }
    std::vector<bool> seen(vertices_.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    if (count != vertices_.size()) throw NotAdmissible("graph is disconnected");
}

int AdmissibleGraph::internal_index(const std::string& name) const {
    for (std::size_t a = 0; a < internal_.size(); ++a)
        if (internal_[a].name == name) return static_cast<int>(a);
    throw std::out_of_range("unknown internal edge " + name);
}

std::vector<int> AdmissibleGraph::i_subset(int a, bool reversed) const {
    if (a < 0 || a >= static_cast<int>(internal_.size()))
        throw std::out_of_range("unknown internal edge index");
    int start = reversed ? internal_[a].head : internal_[a].tail;
    int avoid = reversed ? internal_[a].tail : internal_[a].head;

    std::vector<bool> seen(vertices_.size(), false);
    std::vector<int> stack{start};
    seen[start] = true;
    seen[avoid] = true;  // blocked
    std::vector<int> members;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const Slot& s : vertices_[v].slots) {
            if (s.half) {
                members.push_back(s.id);
            } else {
                const InternalEdge& e = internal_[s.id];
                int w = (e.tail == v) ? e.head : e.tail;
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

AdmissibleGraph AdmissibleGraph::with_flipped_edge(int a) const {
    auto internal = internal_;
    std::swap(internal.at(a).tail, internal.at(a).head);
    return AdmissibleGraph(vertices_, std::move(internal), n_half_);
}

AdmissibleGraph parse_graph(const std::string& text) {
    std::vector<AdmissibleGraph::Vertex> vertices;
    std::map<std::string, int> edge_index;
    std::vector<AdmissibleGraph::InternalEdge> internal;
    std::set<int> halves;

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw != "vertex") throw ParseError("expected 'vertex', got '" + kw + "'");
        std::string name, eq;
        if (!(ls >> name >> eq) || eq != "=") throw ParseError("expected 'vertex <name> = ...'");
        AdmissibleGraph::Vertex v;
        v.name = name;
        for (int i = 0; i < 3; ++i) {
            std::string tok;
            if (!(ls >> tok)) throw ParseError("vertex " + name + " needs exactly 3 slots");
            if (tok.size() < 2) throw ParseError("bad slot '" + tok + "'");
            if (tok[0] == 'h') {
                int k;
                try {
                    k = std::stoi(tok.substr(1));
                } catch (...) {
                    throw ParseError("bad half-edge slot '" + tok + "'");
                }
                if (!halves.insert(k).second)
                    throw NotAdmissible("half-edge " + std::to_string(k) + " appears twice");
                v.slots[i] = {true, k};
            } else if (tok[0] == 'e') {
                std::string ename = tok;
                auto it = edge_index.find(ename);
                int idx;
                if (it == edge_index.end()) {
                    idx = static_cast<int>(internal.size());
                    edge_index[ename] = idx;
                    internal.push_back({ename, static_cast<int>(vertices.size()), -1});
                } else {
                    idx = it->second;
                    if (internal[idx].head != -1)
                        throw NotAdmissible("internal edge " + ename + " appears more than twice");
                    internal[idx].head = static_cast<int>(vertices.size());
                }
                v.slots[i] = {false, idx};
            } else {
                throw ParseError("slot must be h<k> or e<name>, got '" + tok + "'");
            }
        }
        std::string extra;
        if (ls >> extra) throw NotAdmissible("vertex " + name + " has more than 3 slots");
        vertices.push_back(std::move(v));
    }
    if (vertices.empty()) throw ParseError("no vertex declarations");
    for (const auto& e : internal)
        if (e.head == -1) throw NotAdmissible("internal edge " + e.name + " has only one endpoint");
    int n = static_cast<int>(halves.size());
    // contiguity: numbers must be exactly 1..n
    if (!halves.empty() && (*halves.begin() != 1 || *halves.rbegin() != n))
        throw NotAdmissible("half-edge numbers must be contiguous 1..n");
    return AdmissibleGraph(std::move(vertices), std::move(internal), n);
}

AdmissibleGraph caterpillar(int n) {
    if (n < 3) throw NotAdmissible("caterpillar needs n >= 3");
    std::vector<AdmissibleGraph::Vertex> vertices;
    std::vector<AdmissibleGraph::InternalEdge> internal;
    for (int a = 0; a < n - 3; ++a) internal.push_back({"e" + std::to_string(a + 1), a, a + 1});
    for (int v = 0; v < n - 2; ++v) {
        AdmissibleGraph::Vertex vert;
        vert.name = "v" + std::to_string(v + 1);
        if (v == 0) {
            vert.slots[0] = {true, 1};
            vert.slots[1] = {true, 2};
            vert.slots[2] = (n == 3) ? AdmissibleGraph::Slot{true, 3} : AdmissibleGraph::Slot{false, 0};
        } else {
            vert.slots[0] = {false, v - 1};
            vert.slots[1] = {true, v + 2};
            vert.slots[2] = (v == n - 3) ? AdmissibleGraph::Slot{true, n} : AdmissibleGraph::Slot{false, v};
        }
        vertices.push_back(std::move(vert));
    }
    return AdmissibleGraph(std::move(vertices), std::move(internal), n);
}

AdmissibleGraph builtin_graph(const std::string& name) {
    if (name == "g4") return parse_graph("vertex A = h1 h2 e1\nvertex B = h3 h4 e1\n");
    if (name == "g4p") return parse_graph("vertex A = h2 h3 e1\nvertex B = h4 h1 e1\n");
    if (name == "g4q") return parse_graph("vertex A = h1 h3 e1\nvertex B = h2 h4 e1\n");
    if (name == "star6")
        return parse_graph(
            "vertex C = e1 e2 e3\n"
            "vertex A = h1 h2 e1\n"
            "vertex B = h3 h4 e2\n"
            "vertex D = h5 h6 e3\n");
    if (name.rfind("cat", 0) == 0) {
        int n;
        try {
            n = std::stoi(name.substr(3));
        } catch (...) {
            throw ParseError("bad builtin graph name '" + name + "'");
        }
        return caterpillar(n);
    }
    throw ParseError("unknown builtin graph '" + name + "'");
}

namespace {

// Leaf-insertion enumeration of trivalent trees with numbered half-edges.
// Working representation: adjacency between "nodes"; leaves carry numbers.
struct WorkTree {
    // edge list between inner nodes, plus leaf attachments
    struct Edge {
        int u, v;  // node ids; leaves are encoded as negative -(leaf number)
    };
    std::vector<Edge> edges;
    int next_node = 0;
};

void expand(WorkTree t, int leaf, int n, std::vector<WorkTree>& out) {
    if (leaf > n) {
        out.push_back(std::move(t));
        return;
    }
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        WorkTree s = t;
        int mid = s.next_node++;
        auto [u, v] = s.edges[i];
        s.edges[i] = {u, mid};
        s.edges.push_back({mid, v});
        s.edges.push_back({mid, -leaf});
        expand(std::move(s), leaf + 1, n, out);
    }
}

AdmissibleGraph to_graph(const WorkTree& t, int n) {
    // Node ids -> vertex indices; collect slots per node.
    std::map<int, std::vector<AdmissibleGraph::Slot>> slots;
    std::vector<AdmissibleGraph::InternalEdge> internal;
    std::map<std::pair<int, int>, int> internal_id;
    for (const auto& e : t.edges) {
        if (e.u >= 0 && e.v >= 0) {
            int idx = static_cast<int>(internal.size());
            internal.push_back({"e" + std::to_string(idx + 1), e.u, e.v});
            slots[e.u].push_back({false, idx});
            slots[e.v].push_back({false, idx});
        } else {
            int node = e.u >= 0 ? e.u : e.v;
            int leaf = -(e.u >= 0 ? e.v : e.u);
            slots[node].push_back({true, leaf});
        }
    }
    // Renumber nodes densely in slot-map (ordered) sequence.
    std::map<int, int> node_to_vertex;
    std::vector<AdmissibleGraph::Vertex> vertices;
    for (const auto& [node, ss] : slots) {
        node_to_vertex[node] = static_cast<int>(vertices.size());
        AdmissibleGraph::Vertex v;
        v.name = "v" + std::to_string(vertices.size() + 1);
        for (int i = 0; i < 3; ++i) v.slots[i] = ss.at(i);
        vertices.push_back(std::move(v));
    }
    for (auto& e : internal) {
        e.tail = node_to_vertex.at(e.tail);
        e.head = node_to_vertex.at(e.head);
    }
    return AdmissibleGraph(std::move(vertices), std::move(internal), n);
}

}  // namespace

std::vector<AdmissibleGraph> all_graphs(int n) {
    if (n < 3) throw NotAdmissible("all_graphs needs n >= 3");
    WorkTree base;
    base.next_node = 1;
    base.edges = {{0, -1}, {0, -2}, {0, -3}};
    std::vector<WorkTree> trees;
    expand(std::move(base), 4, n, trees);
    std::vector<AdmissibleGraph> out;
    out.reserve(trees.size());
    for (const auto& t : trees) out.push_back(to_graph(t, n));
    return out;
}

std::vector<Coloring> enumerate_colorings(const AdmissibleGraph& g, const std::vector<long>& boundary) {
    if (boundary.size() != static_cast<std::size_t>(g.n_half()))
        throw std::invalid_argument("boundary length must equal n_half");

    const auto& verts = g.vertices();
    const auto& internal = g.internal_edges();
    std::size_t n_int = internal.size();

    // Peeling order: repeatedly pick a vertex with exactly one unknown edge.
    // Rooted-tree interval propagation: the two known colors p,l at that
    // vertex restrict the third to {|p-l|, |p-l|+2, ..., p+l}.
    std::vector<bool> known(n_int, false);
    struct Step {
        int vertex;
        int edge;  // internal edge decided at this vertex
    };
    std::vector<Step> order;
    std::vector<bool> used_vertex(verts.size(), false);
    for (std::size_t it = 0; it < n_int; ++it) {
        bool progressed = false;
        for (std::size_t v = 0; v < verts.size() && !progressed; ++v) {
            if (used_vertex[v]) continue;
            int unknown = -1, count = 0;
            for (const auto& s : verts[v].slots)
                if (!s.half && !known[s.id]) {
                    unknown = s.id;
                    ++count;
                }
            if (count == 1) {
                order.push_back({static_cast<int>(v), unknown});
                known[unknown] = true;
                used_vertex[v] = true;
                progressed = true;
            }
        }
        if (!progressed) throw std::logic_error("peeling failed on an admissible graph");
    }

    std::vector<Coloring> out;
    Coloring current;
    current.half = boundary;
    current.internal.assign(n_int, -1);

    auto color_of = [&](const AdmissibleGraph::Slot& s) {
        return s.half ? boundary[s.id - 1] : current.internal[s.id];
    };

    auto check_vertex = [&](std::size_t v) {
        long c[3];
        for (int i = 0; i < 3; ++i) {
            c[i] = color_of(verts[v].slots[i]);
            if (c[i] < 0) return true;  // not fully known yet
        }
        return clebsch_gordan_ok(c[0], c[1], c[2]);
    };

    auto recurse = [&](auto&& self, std::size_t step) -> void {
        if (step == order.size()) {
            for (std::size_t v = 0; v < verts.size(); ++v)
                if (!check_vertex(v)) return;
            out.push_back(current);
            return;
        }
        const auto& [v, edge] = order[step];
        long p = -1, l = -1;
        for (const auto& s : verts[v].slots) {
            if (!s.half && s.id == edge) continue;
            (p < 0 ? p : l) = color_of(s);
        }
        int other_end = internal[edge].tail == v ? internal[edge].head : internal[edge].tail;
        for (long m = std::labs(p - l); m <= p + l; m += 2) {
            current.internal[edge] = m;
            if (check_vertex(other_end)) self(self, step + 1);
        }
        current.internal[edge] = -1;
    };
    recurse(recurse, 0);

    std::sort(out.begin(), out.end(),
              [](const Coloring& a, const Coloring& b) { return a.internal < b.internal; });
    return out;
}

bool nontrivial(const std::vector<long>& boundary) {
    long sum = 0;
    for (long l : boundary) sum += l;
    if (sum % 2 != 0) return false;
    for (long l : boundary)
        if (2 * l > sum) return false;
    return true;
}

}  // namespace spinpoly
