#include <doctest.h>

#include "chord/enumerate.hpp"
#include "chord/patterns.hpp"
#include "chord/structure.hpp"
#include "fixtures.hpp"

using namespace chord;
using namespace fx;

namespace {

bool graph_is_cycle(const ChordDiagram& c) {
    if (c.size() < 3 || !is_connected(c)) return false;
    for (int i = 0; i < c.size(); ++i)
        if (popcount(c.neighbors(i)) != 2) return false;
    return true;
}

// subset search without pruning
bool contains_brute(const ChordDiagram& c, const ChordDiagram& p) {
    for (Mask s = 0; s < bit(c.size()); ++s)
        if (popcount(s) == p.size() && induced_subdiagram(c, s) == p) return true;
    return false;
}

long count_connected(int n, const PatternClass& cls) {
    long total = 0;
    for_each_diagram(n, [&](const ChordDiagram& c) { total += is_connected(c) && in_class(c, cls); });
    return total;
}

}  // namespace

TEST_CASE("complete and nesting diagrams") {
    CHECK(complete_diagram(3) == K3);
    CHECK(nesting_diagram(2) == N2);
    CHECK(complete_diagram(1) == Ca);
    CHECK(complete_diagram(0).size() == 0);
}

TEST_CASE("induced cycle realizations match the enumeration oracle") {
    for (int m = 3; m <= 7; ++m) {
        std::vector<ChordDiagram> brute;
        for_each_diagram(m, [&](const ChordDiagram& c) {
            if (graph_is_cycle(c)) brute.push_back(c);
        });
        CHECK(cycle_realizations(m) == brute);
        CHECK(brute.size() == (m == 3 ? 1u : 2u));
    }
    CHECK(top_cycle(3) == K3);
    CHECK(bottom_cycle(3) == K3);
    CHECK(top_cycle(4) == parse_text("(1,4)(2,7)(3,6)(5,8)"));
    CHECK(bottom_cycle(4) != top_cycle(4));
    CHECK_THROWS_AS(top_cycle(2), DiagramError);
}

TEST_CASE("top orientation pinned by connected top-cycle-free counts") {
    const std::vector<long> expect{1, 1, 3, 13, 68};
    auto top = PatternClass::parse("top-cycle-free");
    for (int n = 1; n <= 5; ++n) CHECK(count_connected(n, top) == expect[n - 1]);
    // the swapped orientation gives something else
    auto bottom = PatternClass::parse("bottom-cycle-free");
    CHECK(count_connected(5, bottom) != 68);
}

TEST_CASE("contains_pattern") {
    CHECK(contains_pattern(K3, K3));
    CHECK_FALSE(contains_pattern(Ce, K3));
    CHECK(contains_pattern(Cb, Ca));
    CHECK(contains_any_top_cycle(K3));
    CHECK_FALSE(contains_any_top_cycle(Ce));
    CHECK_FALSE(contains_any_top_cycle(Cg));
    for (int n = 1; n <= 6; ++n)
        for_each_diagram(n, [&](const ChordDiagram& c) {
            for (const auto& p : {Cb, N2, K3, Ce, Cd, top_cycle(4), bottom_cycle(4)})
                CHECK(contains_pattern(c, p) == contains_brute(c, p));
        });
}

TEST_CASE("cycle-based class predicates agree with explicit pattern lists") {
    for (const auto& name : builtin_class_names()) {
        auto cls = PatternClass::parse(name);
        CHECK(cls.name() == name);
        for (int n = 0; n <= 6; ++n) {
            auto pats = cls.forbidden(n);
            for_each_diagram(n, [&](const ChordDiagram& c) {
                bool avoid = true;
                for (const auto& p : pats) avoid = avoid && !contains_pattern(c, p);
                if (cls.kind == PatternClass::Kind::All) return;
                CHECK_MESSAGE(in_class(c, cls) == avoid, name, " ", to_text(c));
            });
        }
    }
}

TEST_CASE("class examples and definitional cross-checks") {
    CHECK_FALSE(in_class(K3, PatternClass::parse("triangle-free")));
    CHECK(in_class(Ce, PatternClass::parse("tree")));
    CHECK(in_class(Cc, PatternClass::parse("noncrossing")));
    CHECK_THROWS_AS(PatternClass::parse("bogus"), DiagramError);
    for (int n = 0; n <= 6; ++n)
        for_each_diagram(n, [&](const ChordDiagram& c) {
            CHECK(in_class(c, PatternClass::parse("noncrossing")) == (crossings(c) == 0));
            CHECK(in_class(c, PatternClass::parse("nonnesting")) == (nestings(c) == 0));
        });
}

TEST_CASE("permutation diagrams") {
    CHECK(permutation_diagram({2, 3, 1}) == parse_text("(1,5)(2,6)(3,4)"));
    CHECK(permutation_diagram({1, 3, 2}) == parse_text("(1,4)(2,6)(3,5)"));
    CHECK(permutation_diagram({3, 1, 2}) == parse_text("(1,6)(2,4)(3,5)"));
    CHECK(permutation_diagram({2, 1, 3}) == parse_text("(1,5)(2,4)(3,6)"));
    CHECK(is_permutation_diagram(Cb));
    CHECK_FALSE(is_permutation_diagram(Cc));
    CHECK(is_shifted_permutation_diagram(Cg) == false);
    CHECK(is_shifted_permutation_diagram(Cb));
    CHECK_THROWS_AS(permutation_diagram({1, 1}), DiagramError);
}

TEST_CASE("top-cycle-free 1-terminal diagrams are trees with out-degree one") {
    for (int n = 1; n <= 6; ++n)
        for_each_diagram(n, [&](const ChordDiagram& c) {
            if (contains_any_top_cycle(c)) return;
            bool tree_outdeg = induced_cycles(c).empty() && is_connected(c);
            if (tree_outdeg)
                for (int x = 0; x < n; ++x)
                    tree_outdeg = tree_outdeg && (c.right_neighbors(x) == 0 ? x == c.chord_at(c.points() - 1)
                                                                            : popcount(c.right_neighbors(x)) == 1);
            CHECK(is_one_terminal(c) == tree_outdeg);
        });
}
