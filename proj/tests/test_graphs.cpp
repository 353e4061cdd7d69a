#include <doctest.h>

#include <algorithm>
#include <set>

#include "spinpoly/graphs.hpp"

using namespace spinpoly;

TEST_CASE("parse_graph accepts the two-vertex four-point graph") {
    auto g = parse_graph("# four points\n"
                         "vertex u = h1 h2 e1\n"
                         "vertex v = h3 h4 e1\n");
    CHECK(g.n_half() == 4);
    CHECK(g.internal_edges().size() == 1);
    CHECK(g.vertex_of_half_edge(3) == 1);
    auto I = g.i_subset(0);
    CHECK(I == std::vector<int>{1, 2});
    CHECK(g.i_subset(0, true) == std::vector<int>{3, 4});
}

TEST_CASE("parse_graph rejects structural violations") {
    // loop
    CHECK_THROWS_AS(parse_graph("vertex u = h1 e1 e1\nvertex v = h2 h3 e2\n"), NotAdmissible);
    // half-edge numbering with a gap
    CHECK_THROWS_AS(parse_graph("vertex u = h1 h2 e1\nvertex v = h3 h5 e1\n"), NotAdmissible);
    // duplicate half-edge
    CHECK_THROWS_AS(parse_graph("vertex u = h1 h1 e1\nvertex v = h2 h3 e1\n"), NotAdmissible);
    // internal edge with only one endpoint
    CHECK_THROWS_AS(parse_graph("vertex u = h1 h2 e1\n"), NotAdmissible);
    // disconnected (also forms a cycle): e used twice on both vertices
    CHECK_THROWS_AS(parse_graph("vertex u = h1 e1 e2\nvertex v = h2 e1 e2\n"
                                "vertex w = h3 h4 e3\nvertex x = h5 h6 e3\n"),
                    NotAdmissible);
    // syntax
    CHECK_THROWS_AS(parse_graph("vertex u = h1 h2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vrtx u = h1 h2 e1\n"), ParseError);
}

TEST_CASE("clebsch_gordan predicate") {
    CHECK(clebsch_gordan_ok(1, 1, 0));
    CHECK(clebsch_gordan_ok(1, 1, 2));
    CHECK(!clebsch_gordan_ok(1, 1, 1));  // parity
    CHECK(!clebsch_gordan_ok(1, 1, 4));  // triangle
    CHECK(clebsch_gordan_ok(0, 5, 5));
    CHECK(!clebsch_gordan_ok(2, 3, 4));
}

TEST_CASE("caterpillar subsets grow one half-edge at a time") {
    auto g = caterpillar(6);
    CHECK(g.n_half() == 6);
    REQUIRE(g.internal_edges().size() == 3);
    for (int a = 0; a < 3; ++a) {
        std::vector<int> want(a + 2);
        for (int i = 0; i <= a + 1; ++i) want[i] = i + 1;
        CHECK(g.i_subset(a) == want);
    }
}

TEST_CASE("builtin aliases") {
    CHECK(builtin_graph("g4").i_subset(0) == std::vector<int>{1, 2});
    CHECK(builtin_graph("g4p").i_subset(0) == std::vector<int>{2, 3});
    CHECK(builtin_graph("g4q").i_subset(0) == std::vector<int>{1, 3});
    CHECK(builtin_graph("cat4").n_half() == 4);
    CHECK(builtin_graph("star6").internal_edges().size() == 3);
    CHECK_THROWS(builtin_graph("nope"));
}

TEST_CASE("all_graphs counts (2n-5)!!") {
    CHECK(all_graphs(4).size() == 3);
    CHECK(all_graphs(5).size() == 15);
    CHECK(all_graphs(6).size() == 105);

    // pairwise distinct as half-edge partitions: the multiset of subsets
    // I(a) (up to complement) determines the tree
    std::set<std::set<std::set<int>>> seen;
    for (const auto& g : all_graphs(6)) {
        std::set<std::set<int>> splits;
        for (std::size_t a = 0; a < g.internal_edges().size(); ++a) {
            auto I = g.i_subset(static_cast<int>(a));
            auto Ic = g.i_subset(static_cast<int>(a), true);
            std::set<int> s(I.begin(), I.end()), sc(Ic.begin(), Ic.end());
            splits.insert(std::min(s, sc));
        }
        seen.insert(splits);
    }
    CHECK(seen.size() == 105);
}

TEST_CASE("i_subset halves partition the half-edges") {
    for (const auto& g : all_graphs(5))
        for (std::size_t a = 0; a < g.internal_edges().size(); ++a) {
            auto I = g.i_subset(static_cast<int>(a));
            auto Ic = g.i_subset(static_cast<int>(a), true);
            std::vector<int> all(I);
            all.insert(all.end(), Ic.begin(), Ic.end());
            std::sort(all.begin(), all.end());
            CHECK(all == std::vector<int>{1, 2, 3, 4, 5});
        }
}

TEST_CASE("with_flipped_edge swaps the two orientations") {
    auto g = builtin_graph("g4");
    auto f = g.with_flipped_edge(0);
    CHECK(f.i_subset(0) == std::vector<int>{3, 4});
}

namespace {
// brute force over all internal label tuples, checking every vertex
std::vector<Coloring> brute_colorings(const AdmissibleGraph& g, const std::vector<long>& ell) {
    long cap = 0;
    for (long l : ell) cap += l;
    std::vector<Coloring> out;
    std::vector<long> internal(g.internal_edges().size(), 0);
    auto label = [&](const AdmissibleGraph::Slot& s) {
        return s.half ? ell[s.id - 1] : internal[s.id];
    };
    auto rec = [&](auto&& self, std::size_t a) -> void {
        if (a == internal.size()) {
            for (const auto& v : g.vertices())
                if (!clebsch_gordan_ok(label(v.slots[0]), label(v.slots[1]), label(v.slots[2])))
                    return;
            out.push_back({ell, internal});
            return;
        }
        for (long m = 0; m <= cap; ++m) {
            internal[a] = m;
            self(self, a + 1);
        }
    };
    rec(rec, 0);
    return out;
}
}  // namespace

TEST_CASE("enumerate_colorings matches brute force") {
    for (const char* name : {"g4", "g4p", "cat5", "cat6", "star6"}) {
        auto g = builtin_graph(name);
        std::vector<std::vector<long>> boundaries;
        if (g.n_half() == 4) boundaries = {{1, 1, 1, 1}, {2, 2, 2, 2}, {1, 2, 2, 3}, {3, 3, 3, 3}};
        if (g.n_half() == 5) boundaries = {{1, 1, 1, 1, 2}, {2, 2, 1, 2, 1}, {3, 2, 3, 1, 1}};
        if (g.n_half() == 6)
            boundaries = {{1, 1, 1, 1, 1, 1}, {2, 1, 3, 1, 2, 1}, {3, 3, 3, 3, 3, 3}};
        for (const auto& ell : boundaries) {
            auto fast = enumerate_colorings(g, ell);
            auto slow = brute_colorings(g, ell);
            auto key = [](const Coloring& c) { return c.internal; };
            std::vector<std::vector<long>> a, b;
            for (auto& c : fast) a.push_back(key(c));
            for (auto& c : slow) b.push_back(key(c));
            std::sort(b.begin(), b.end());
            CHECK(a == b);  // also checks the lexicographic order contract
        }
    }
}

TEST_CASE("colorings empty for trivial boundaries") {
    CHECK(enumerate_colorings(builtin_graph("g4"), {1, 1, 1, 5}).empty());
    CHECK(!nontrivial({1, 1, 1, 5}));  // fails the polygon inequality
    // an entry equal to half the sum is the degenerate but admissible case
    CHECK(nontrivial({1, 1, 1, 3}));
    CHECK(enumerate_colorings(builtin_graph("g4"), {1, 1, 1, 3}).size() == 1);
    CHECK(!nontrivial({1, 1, 1}));  // odd sum
    CHECK(nontrivial({1, 1, 2}));
    CHECK(nontrivial({2, 2, 2, 2}));
}
