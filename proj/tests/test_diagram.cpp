#include <doctest.h>

#include "chord/diagram.hpp"
#include "chord/enumerate.hpp"
#include "fixtures.hpp"

using namespace chord;
using namespace fx;

namespace {
// pairwise endpoint test, independent of the neighbor masks
bool crosses_naive(const Chord& a, const Chord& b) {
    return (a.source < b.source && b.source < a.sink && a.sink < b.sink) ||
           (b.source < a.source && a.source < b.sink && b.sink < a.sink);
}
}  // namespace

TEST_CASE("from_pairs normalizes and validates") {
    CHECK(ChordDiagram::from_pairs({{1, 3}, {2, 4}}) == Cb);
    CHECK(ChordDiagram::from_pairs({{3, 1}, {4, 2}}) == Cb);
    CHECK_THROWS_WITH_AS(ChordDiagram::from_pairs({{1, 2}, {2, 3}}), doctest::Contains("point 2 reused"), DiagramError);
    CHECK_THROWS_AS(ChordDiagram::from_pairs({{1, 5}}), DiagramError);
    CHECK_THROWS_AS(ChordDiagram::from_pairs({{0, 1}}), DiagramError);
    CHECK(ChordDiagram::from_pairs({}).size() == 0);
}

TEST_CASE("crossings and nestings") {
    CHECK(crossings(Cb) == 1);
    CHECK(nestings(Cb) == 0);
    CHECK(crossings(N2) == 0);
    CHECK(nestings(N2) == 1);
    CHECK(crossings(Ce) == 2);
    CHECK(nestings(Ce) == 1);
}

TEST_CASE("intersection graph arcs") {
    CHECK(intersection_graph(Cb).arcs == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(intersection_graph(K3).arcs == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(intersection_graph(Cc).arcs.empty());
}

TEST_CASE("concatenate and induced subdiagram") {
    CHECK(concatenate(Ca, Ca) == Cc);
    CHECK(concatenate(ChordDiagram{}, Cb) == Cb);
    CHECK(to_text(concatenate(Cb, Ca)) == "(1,3)(2,4)(5,6)");
    CHECK(induced_subdiagram(Ce, std::vector<int>{0, 1}) == N2);
    CHECK(induced_subdiagram(K3, std::vector<int>{1, 2}) == Cb);
    CHECK(induced_subdiagram(Cg, Cg.all()) == Cg);
    CHECK_THROWS_AS(induced_subdiagram(Cb, std::vector<int>{2}), DiagramError);
}

TEST_CASE("text and json") {
    CHECK(to_text(Cb) == "(1,3)(2,4)");
    CHECK(parse_text("(2,4)(1,3)") == Cb);
    CHECK(parse_text(" (1, 3) (2,4) ") == Cb);
    CHECK_THROWS_AS(parse_text("(1,3)(2,3)"), DiagramError);
    CHECK_THROWS_WITH(parse_text("(1,3(2,4)"), doctest::Contains("position"));
    CHECK(diagram_from_json(to_json(Cg)) == Cg);
    CHECK(to_json(Cb).dump() == R"({"n":2,"pairs":[[1,3],[2,4]]})");
}

TEST_CASE("exhaustive invariants up to size 7") {
    for (int n = 0; n <= 7; ++n) {
        long count = 0;
        for_each_diagram(n, [&](const ChordDiagram& c) {
            ++count;
            CHECK(crossings(c) + nestings(c) + disjoint_pairs(c) == n * (n - 1) / 2);
            CHECK(parse_text(to_text(c)) == c);
            auto g = intersection_graph(c);
            std::vector<std::pair<int, int>> naive;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (crosses_naive(c.chord(a), c.chord(b))) naive.emplace_back(a, b);
            std::sort(g.arcs.begin(), g.arcs.end());
            CHECK(g.arcs == naive);
        });
        long expect = 1;
        for (int k = 1; k <= 2 * n - 1; k += 2) expect *= k;
        CHECK(count == expect);
    }
}

TEST_CASE("generation order is lexicographic in partner arrays") {
    auto v = all_diagrams(4);
    CHECK(std::is_sorted(v.begin(), v.end()));
    CHECK(all_diagrams(2).size() == 3);
    CHECK(all_diagrams(0).size() == 1);
}

TEST_CASE("parallel sweep does not depend on job count") {
    auto visit = [](const ChordDiagram& c, std::vector<int>& acc) { acc.push_back(crossings(c)); };
    auto merge = [](std::vector<int>& a, std::vector<int>&& b) { a.insert(a.end(), b.begin(), b.end()); };
    auto one = sweep(5, 1, std::vector<int>{}, visit, merge);
    auto four = sweep(5, 4, std::vector<int>{}, visit, merge);
    CHECK(one == four);
    CHECK(one.size() == 945);
}
