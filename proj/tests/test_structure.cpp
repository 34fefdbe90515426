#include <doctest.h>

#include "chord/enumerate.hpp"
#include "chord/structure.hpp"
#include "fixtures.hpp"

using namespace chord;
using namespace fx;

namespace {

using Lists = std::vector<std::vector<int>>;

bool connected_without(const ChordDiagram& c, Mask removed) {
    Mask keep = c.all() & ~removed;
    if (popcount(keep) <= 1) return true;
    return component_masks(c, keep).size() == 1;
}

// smallest vertex set whose removal disconnects or leaves one vertex
int kappa_brute(const ChordDiagram& c) {
    const int n = c.size();
    if (n <= 1 || !connected_without(c, 0)) return 0;
    int best = n - 1;
    for (Mask s = 0; s < bit(n); ++s) {
        if (popcount(s) >= best || popcount(s) > n - 2) continue;
        if (!connected_without(c, s)) best = popcount(s);
    }
    return best;
}

int lambda_brute(const ChordDiagram& c) {
    const int n = c.size();
    if (n <= 1 || !connected_without(c, 0)) return 0;
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (c.crosses(a, b)) edges.emplace_back(a, b);
    const int m = static_cast<int>(edges.size());
    int best = m;
    for (long s = 0; s < (1L << m); ++s) {
        int k = __builtin_popcountl(s);
        if (k >= best) continue;
        // union-find on kept edges
        std::vector<int> up(n);
        for (int i = 0; i < n; ++i) up[i] = i;
        auto find = [&](int x) {
            while (up[x] != x) x = up[x] = up[up[x]];
            return x;
        };
        int comps = n;
        for (int e = 0; e < m; ++e)
            if (!((s >> e) & 1)) {
                int a = find(edges[e].first), b = find(edges[e].second);
                if (a != b) up[a] = b, --comps;
            }
        if (comps > 1) best = k;
    }
    return best;
}

Mask traced_by_last_neighbor(const ChordDiagram& d, int c) {
    Mask in = bit(c);
    for (int x = c - 1; x >= 0; --x) {
        Mask r = d.right_neighbors(x);
        if (r && ((in >> (63 - __builtin_clzll(r))) & 1)) in |= bit(x);
    }
    return in;
}

}  // namespace

TEST_CASE("components") {
    CHECK(connected_components(Cc) == Lists{{0}, {1}});
    CHECK(indecomposable_components(Cc) == Lists{{0}, {1}});
    CHECK(connected_components(N2) == Lists{{0}, {1}});
    CHECK(indecomposable_components(N2) == Lists{{0, 1}});
    CHECK(connected_components(Ce) == Lists{{0, 1, 2}});
    CHECK(connected_components(ChordDiagram{}).empty());
}

TEST_CASE("connectivity conventions and examples") {
    CHECK(vertex_connectivity(K3) == 2);
    CHECK(vertex_connectivity(Cb) == 1);
    CHECK(edge_connectivity(Cb) == 1);
    CHECK(vertex_connectivity(Cc) == 0);
    CHECK(vertex_connectivity(Ca) == 0);
    CHECK(vertex_connectivity(ChordDiagram{}) == 0);
    CHECK(edge_connectivity(K3) == 2);
}

TEST_CASE("max-flow connectivity matches brute force up to size 6") {
    for (int n = 0; n <= 6; ++n)
        for_each_diagram(n, [&](const ChordDiagram& c) {
            CHECK(vertex_connectivity(c) == kappa_brute(c));
            if (n <= 5) CHECK(edge_connectivity(c) == lambda_brute(c));
        });
}

TEST_CASE("intersection order") {
    CHECK(intersection_order(Cd).label == std::vector<int>{1, 2, 3});
    CHECK(intersection_order(Ce).label == std::vector<int>{1, 2, 3});
    CHECK(intersection_order(Cg).label == std::vector<int>{1, 2, 3, 4});
    CHECK_THROWS_AS(intersection_order(Cc), DiagramError);
    // (8,10) is labelled before (5,7): both hang off (4,9) after (2,6) is removed
    auto c = parse_text("(1,3)(2,6)(4,9)(5,7)(8,10)");
    CHECK(intersection_order(c).label == std::vector<int>{1, 2, 3, 5, 4});
}

TEST_CASE("intersection order extends reachability") {
    for (int n = 1; n <= 6; ++n)
        for_each_diagram(n, [&](const ChordDiagram& c) {
            if (!is_connected(c)) return;
            auto io = intersection_order(c);
            CHECK(io.label[0] == 1);
            for (int a = 0; a < n; ++a)
                for (int b : mask_to_list(c.right_neighbors(a))) CHECK(io.label[a] < io.label[b]);
        });
}

TEST_CASE("terminal profile") {
    CHECK(terminal_profile(Cd).t == std::vector<int>{2, 3});
    CHECK(terminal_profile(Ce).t == std::vector<int>{3});
    CHECK(terminal_profile(K3).t == std::vector<int>{3});
    CHECK(terminal_profile(Cd).gaps == std::vector<int>{1});
    CHECK_THROWS_AS(terminal_profile(Cc), DiagramError);
}

TEST_CASE("k-terminality") {
    CHECK(is_k_terminal(Ce, 1));
    CHECK_FALSE(is_k_terminal(Cd, 1));
    CHECK(is_k_terminal(K3, 2));
    CHECK_FALSE(is_k_terminal(Cc, 1));
    CHECK_FALSE(is_k_terminal(Ce, 2));
    CHECK(terminality(Ce) == 1);
    CHECK(terminality(Cd) == 0);
    CHECK(terminality(K3) == 3);
}

TEST_CASE("k-terminal-minimal") {
    CHECK(is_k_terminal_minimal(Cf, 1));
    // chords (1,5) and (2,4) each have the single right neighbor (3,6)
    CHECK(is_k_terminal_minimal(Ce, 1));
    CHECK(is_k_terminal_minimal(K3, 2));
    CHECK_FALSE(is_k_terminal_minimal(K3, 1));
}

TEST_CASE("source-sink groups") {
    auto pts = [](const ChordDiagram& c) {
        Lists out;
        for (const auto& g : source_sink_groups(c)) {
            std::vector<int> p;
            for (int x : g.points) p.push_back(x + 1);
            out.push_back(p);
        }
        return out;
    };
    CHECK(pts(Cf) == Lists{{1}, {2, 3}, {4, 5}});
    CHECK(pts(Ce) == Lists{{1}, {2}, {3, 4, 5}});
    CHECK(pts(Ca) == Lists{{1}});
    // Cd: head is chords 1,2; component {(3,5)} attaches at sink 4 of chord 1
    CHECK(pts(Cd) == Lists{{1}, {2, 3, 4, 5}});
}

TEST_CASE("traced subdiagrams") {
    CHECK(traced_subdiagram(Ce, 2) == 0b111);
    CHECK(traced_subdiagram(Ce, 1) == 0b010);
    CHECK(traced_subdiagram(Cf, 1) == 0b011);
    CHECK_THROWS_AS(traced_subdiagram(Cd, 0), DiagramError);
    for (int n = 1; n <= 6; ++n)
        for_each_diagram(n, [&](const ChordDiagram& d) {
            if (!is_one_terminal(d)) return;
            for (int c = 0; c < n; ++c) CHECK(traced_subdiagram(d, c) == traced_by_last_neighbor(d, c));
        });
}

TEST_CASE("valency") {
    CHECK(valency(Ce, 2) == 2);
    CHECK(valency(Ce, 1) == 0);
    CHECK(valency(Ce, 0) == 0);
    CHECK(valency(Cf, 2) == 1);
    CHECK(valency(Cf, 1) == 1);
    CHECK(valency(Cf, 0) == 0);
    CHECK(valency(Ca, 0) == 0);
    CHECK(valency(Cb, 1) == 1);
    CHECK(valency(K3, 2) == 2);
}

TEST_CASE("nonnesting induced paths") {
    CHECK(exists_nonnesting_induced_path(Cf, 0, 2));
    CHECK(exists_nonnesting_induced_path(Ce, 1, 2));
    CHECK_FALSE(exists_nonnesting_induced_path(N2, 0, 1));
    // Ce: chord 1 nests over chord 2, and chord 1 to 3 is direct
    CHECK(exists_nonnesting_induced_path(Ce, 0, 2));
}
