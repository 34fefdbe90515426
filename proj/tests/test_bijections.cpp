#include <doctest.h>

#include <set>

#include "chord/bijections.hpp"
#include "chord/enumerate.hpp"
#include "chord/patterns.hpp"
#include "chord/stirling.hpp"
#include "chord/structure.hpp"
#include "chord/triangulation.hpp"
#include "fixtures.hpp"

using namespace chord;
using namespace fx;

TEST_CASE("psi and chi examples") {
    CHECK(psi(Cb) == Ca);
    CHECK(psi(Ce) == N2);
    CHECK(psi(Cf) == Cc);
    CHECK(psi(Ca).size() == 0);
    CHECK_THROWS_AS(psi(Cd), DiagramError);
    CHECK(chi(Ca) == Cb);
    CHECK(chi(Cc) == Cf);
    CHECK(chi(ChordDiagram{}) == Ca);
}

TEST_CASE("psi inverts chi up to size 6") {
    for (int n = 0; n <= 6; ++n)
        for_each_diagram(n, [&](const ChordDiagram& c) {
            auto t = chi(c);
            CHECK(is_one_terminal(t));
            CHECK(psi(t) == c);
        });
}

TEST_CASE("alpha examples") {
    CHECK(alpha(Ce) == Parts{{Ca, {1}}, {Ca, {2}}});
    CHECK(alpha(K3) == Parts{{Ca, {2}}, {Ca, {1}}});
    CHECK(alpha(Cg) == Parts{{Cb, {1, 2}}, {Ca, {3}}});
    CHECK(alpha(Cb) == Parts{{Ca, {1}}});
    CHECK_THROWS_AS(alpha(Ca), DiagramError);
    CHECK_THROWS_AS(alpha(Cc), DiagramError);
}

TEST_CASE("beta examples") {
    CHECK(beta({{Ca, {1}}, {Ca, {2}}}) == Ce);
    CHECK(beta({{Ca, {2}}, {Ca, {1}}}) == K3);
    CHECK(beta({{Cb, {1, 2}}, {Ca, {3}}}) == Cg);
    CHECK_THROWS_AS(beta({{Ca, {1, 2}}}), DiagramError);
    CHECK_THROWS_AS(beta({{Ca, {2}}}), DiagramError);
    CHECK_THROWS_AS(beta({{Cc, {1}}}), DiagramError);
}

TEST_CASE("beta inverts alpha up to size 6") {
    for (int n = 2; n <= 6; ++n)
        for_each_diagram(n, [&](const ChordDiagram& c) {
            if (!is_connected(c)) return;
            auto parts = alpha(c);
            CHECK_MESSAGE(beta(parts) == c, to_text(c));
            int j = first_terminal(c) - 1;
            int total = 0;
            for (auto& p : parts) total += static_cast<int>(p.block.size());
            CHECK(total == j);
        });
}

TEST_CASE("alpha inverts beta on all tuples of small parts") {
    // every tuple with j <= 4 built from connected parts of size <= 3
    std::vector<ChordDiagram> pieces;
    for (int n = 1; n <= 3; ++n)
        for_each_diagram(n, [&](const ChordDiagram& c) {
            if (is_connected(c)) pieces.push_back(c);
        });
    long checked = 0;
    std::function<void(Parts&, std::vector<int>&)> grow = [&](Parts& cur, std::vector<int>& free) {
        if (free.empty()) {
            if (cur.empty()) return;
            auto c = beta(cur);
            CHECK(alpha(c) == cur);
            CHECK(first_terminal(c) == 1 + [&] { int s = 0; for (auto& p : cur) s += static_cast<int>(p.block.size()); return s; }());
            ++checked;
            return;
        }
        // the part holding the smallest free position is chosen next in any slot order:
        // enumerate subsets containing free[0]
        const int f = static_cast<int>(free.size());
        for (int m = 1; m < (1 << f); m += 2) {
            std::vector<int> block, rest;
            for (int i = 0; i < f; ++i) ((m >> i) & 1 ? block : rest).push_back(free[i]);
            for (const auto& piece : pieces) {
                if (static_cast<int>(block.size()) > first_terminal(piece)) continue;
                for (std::size_t slot = 0; slot <= cur.size(); ++slot) {
                    cur.insert(cur.begin() + static_cast<long>(slot), Part{piece, block});
                    grow(cur, rest);
                    cur.erase(cur.begin() + static_cast<long>(slot));
                }
            }
        }
    };
    for (int j = 1; j <= 3; ++j) {
        Parts cur;
        std::vector<int> free;
        for (int i = 1; i <= j; ++i) free.push_back(i);
        grow(cur, free);
    }
    CHECK(checked > 100);
}

TEST_CASE("root-share decomposition") {
    auto k = root_share_decompose(K3);
    auto e = root_share_decompose(Ce);
    CHECK(k.root_side == Ca);
    CHECK(k.outer == Cb);
    CHECK(e.root_side == Ca);
    CHECK(e.outer == Cb);
    CHECK(k.index != e.index);
    CHECK(root_share_compose(Ca, Ca, 1) == Cb);
    CHECK_THROWS_AS(root_share_compose(Ca, Ca, 2), DiagramError);
    for (int n = 2; n <= 6; ++n)
        for_each_diagram(n, [&](const ChordDiagram& c) {
            if (!is_connected(c)) return;
            auto r = root_share_decompose(c);
            CHECK(is_connected(r.root_side));
            CHECK(is_connected(r.outer));
            CHECK(root_share_compose(r.root_side, r.outer, r.index) == c);
            CHECK(first_terminal(r.outer) == first_terminal(c) - 1);
        });
}

TEST_CASE("omega and gamma examples") {
    CHECK(omega(Ca).is_edge());
    auto tb = omega(Cb);
    CHECK(tb.exterior_count() == 3);
    CHECK(tb.interior_count() == 0);
    auto te = omega(Ce);
    CHECK(te.exterior_count() == 4);
    CHECK(te.interior_count() == 0);
    CHECK(te.triangles.size() == 2);
    CHECK_THROWS_AS(omega(K3), DiagramError);
    auto g = gamma(tb);
    REQUIRE(g.size() == 1);
    CHECK(g[0].triangulation.is_edge());
    CHECK(g[0].index == 1);
    auto ge = gamma(te);
    REQUIRE(ge.size() == 2);
    CHECK((ge[0].triangulation.is_edge() && ge[1].triangulation.is_edge()));
    auto gg = gamma(omega(Cg));
    REQUIRE(gg.size() == 2);
    CHECK(canonical_code(gg[0].triangulation) == canonical_code(tb));
    CHECK(gg[0].index == 2);
    CHECK(gg[1].triangulation.is_edge());
    CHECK_THROWS_AS(gamma(Triangulation::edge()), DiagramError);
}

TEST_CASE("canonical codes") {
    Triangulation a;
    a.vertex_count = 3;
    a.exterior = {0, 1, 2};
    a.triangles = {{0, 1, 2}};
    Triangulation b;
    b.vertex_count = 3;
    b.exterior = {2, 0, 1};
    b.triangles = {{1, 2, 0}};
    CHECK(canonical_code(a) == canonical_code(b));
    CHECK(canonical_code(a) != canonical_code(omega(Ce)));
    CHECK(canonical_code(a) == canonical_code(omega(Cb)));
}

TEST_CASE("omega is injective and counts match up to size 5") {
    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> codes;
        long count = 0;
        for_each_diagram(n, [&](const ChordDiagram& c) {
            if (!is_connected(c) || contains_any_top_cycle(c)) return;
            auto t = omega(c);
            ++count;
            codes.insert(canonical_code(t));
            CHECK(t.exterior_count() == first_terminal(c) + 1);
            CHECK(t.interior_count() == n - first_terminal(c));
        });
        CHECK(static_cast<long>(codes.size()) == count);
    }
}

TEST_CASE("zeta examples and inverse") {
    CHECK(word_to_text(zeta(Cb)) == "1221");
    CHECK(word_to_text(zeta(Cc)) == "2211");
    CHECK(word_to_text(zeta(N2)) == "1122");
    CHECK(zeta(ChordDiagram{}).empty());
    CHECK_THROWS_AS(zeta_inverse(parse_word("1212")), DiagramError);
    for (int n = 0; n <= 5; ++n)
        for_each_diagram(n, [&](const ChordDiagram& c) {
            auto w = zeta(c);
            CHECK(is_stirling(w));
            CHECK(zeta_inverse(w) == c);
        });
}

TEST_CASE("eta and theta examples") {
    IncreasingOrderedTree path;
    path.children = {{1}, {2}, {}};
    IncreasingOrderedTree star;
    star.children = {{1, 2}, {}, {}};
    CHECK(word_to_text(eta(path)) == "1221");
    CHECK(word_to_text(eta(star)) == "1122");
    CHECK(eta(IncreasingOrderedTree{}).empty());
    CHECK(eta_inverse(parse_word("1221")) == path);
    IncreasingOrderedTree edge;
    edge.children = {{1}, {}};
    CHECK(theta(Cb) == edge);
    CHECK(theta(Ce) == star);
    CHECK(theta(Ca) == IncreasingOrderedTree{});
    CHECK_THROWS_AS(theta(Cd), DiagramError);
    CHECK(tree_to_text(path) == "0(1(2))");
}

TEST_CASE("theta round trips up to size 6") {
    for (int n = 1; n <= 6; ++n)
        for_each_diagram(n, [&](const ChordDiagram& c) {
            if (!is_one_terminal(c)) return;
            auto t = theta(c);
            validate_tree(t);
            CHECK(t.size() == n);
            CHECK(theta_inverse(t) == c);
        });
    for (int n = 1; n <= 6; ++n)
        for (const auto& t : all_trees(n)) CHECK(theta(theta_inverse(t)) == t);
}
