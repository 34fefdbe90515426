#include "chord/diagram.hpp"

#include <algorithm>
#include <map>

namespace chord {

ChordDiagram ChordDiagram::from_pairs(const std::vector<std::pair<int, int>>& pairs) {
    const int n = static_cast<int>(pairs.size());
    if (n > kMaxChords) throw DiagramError("too many chords (limit 64)");
    std::vector<int> partner(2 * n, -1);
    for (auto [a, b] : pairs) {
        if (a > b) std::swap(a, b);
        if (a < 1 || b > 2 * n)
            throw DiagramError("point out of range 1.." + std::to_string(2 * n));
        if (a == b) throw DiagramError("chord joins point " + std::to_string(a) + " to itself");
        for (int p : {a, b})
            if (partner[p - 1] != -1) throw DiagramError("point " + std::to_string(p) + " reused");
        partner[a - 1] = b - 1;
        partner[b - 1] = a - 1;
    }
    ChordDiagram c;
    c.partner_.assign(partner.begin(), partner.end());
    c.build();
    return c;
}

ChordDiagram ChordDiagram::from_partner(std::vector<std::uint8_t> partner) {
    const int m = static_cast<int>(partner.size());
    if (m % 2) throw DiagramError("odd number of points");
    if (m / 2 > kMaxChords) throw DiagramError("too many chords (limit 64)");
    for (int p = 0; p < m; ++p) {
        int q = partner[p];
        if (q >= m || q == p || partner[q] != p) throw DiagramError("partner array is not a fixed-point-free involution");
    }
    ChordDiagram c;
    c.partner_ = std::move(partner);
    c.build();
    return c;
}

ChordDiagram ChordDiagram::from_sequence(const std::vector<int>& labels) {
    const int m = static_cast<int>(labels.size());
    if (m % 2) throw DiagramError("odd number of points");
    std::map<int, int> first;
    std::vector<std::uint8_t> partner(m);
    for (int p = 0; p < m; ++p) {
        auto [it, fresh] = first.try_emplace(labels[p], p);
        if (fresh) continue;
        if (it->second < 0) throw DiagramError("label used more than twice");
        partner[p] = static_cast<std::uint8_t>(it->second);
        partner[it->second] = static_cast<std::uint8_t>(p);
        it->second = -1;
    }
    for (auto& [l, p] : first)
        if (p >= 0) throw DiagramError("label used once");
    return from_partner(std::move(partner));
}

void ChordDiagram::build() {
    const int m = points();
    chord_at_.assign(m, 0);
    chords_.clear();
    for (int p = 0; p < m; ++p) {
        if (partner_[p] > p) {
            chord_at_[p] = chord_at_[partner_[p]] = static_cast<std::uint8_t>(chords_.size());
            chords_.push_back({p, partner_[p]});
        }
    }
    const int n = size();
    right_.assign(n, 0);
    left_.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        const int sa = chords_[a].source, ka = chords_[a].sink;
        // chords with source strictly inside a whose sink is beyond a
        for (int p = sa + 1; p < ka; ++p) {
            if (partner_[p] > ka) {
                int b = chord_at_[p];
                right_[a] |= bit(b);
                left_[b] |= bit(a);
            }
        }
    }
}

int crossings(const ChordDiagram& c) {
    int total = 0;
    for (int i = 0; i < c.size(); ++i) total += popcount(c.right_neighbors(i));
    return total;
}

int nestings(const ChordDiagram& c) {
    int total = 0;
    for (int a = 0; a < c.size(); ++a)
        for (int b = a + 1; b < c.size(); ++b) total += c.nests_over(a, b);
    return total;
}

int disjoint_pairs(const ChordDiagram& c) {
    int total = 0;
    for (int a = 0; a < c.size(); ++a)
        for (int b = a + 1; b < c.size(); ++b) total += c.chord(a).sink < c.chord(b).source;
    return total;
}

DirectedIntersectionGraph intersection_graph(const ChordDiagram& c) {
    DirectedIntersectionGraph g;
    g.vertices = c.size();
    for (int a = 0; a < c.size(); ++a)
        for (int b : mask_to_list(c.right_neighbors(a))) g.arcs.emplace_back(a, b);
    return g;
}

ChordDiagram concatenate(const ChordDiagram& a, const ChordDiagram& b) {
    std::vector<std::uint8_t> partner(a.partner_array());
    const int shift = a.points();
    for (auto q : b.partner_array()) partner.push_back(static_cast<std::uint8_t>(q + shift));
    return ChordDiagram::from_partner(std::move(partner));
}

ChordDiagram induced_subdiagram(const ChordDiagram& c, Mask chords) {
    if (c.size() < 64 && (chords >> c.size()) != 0) throw DiagramError("chord index out of range");
    std::vector<int> labels;
    labels.reserve(2 * popcount(chords));
    for (int p = 0; p < c.points(); ++p)
        if ((chords >> c.chord_at(p)) & 1) labels.push_back(c.chord_at(p));
    return ChordDiagram::from_sequence(labels);
}

ChordDiagram induced_subdiagram(const ChordDiagram& c, const std::vector<int>& chords) {
    for (int i : chords)
        if (i < 0 || i >= c.size()) throw DiagramError("chord index out of range");
    return induced_subdiagram(c, list_to_mask(chords));
}

std::vector<int> mask_to_list(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(lowest(m));
        m &= m - 1;
    }
    return out;
}

Mask list_to_mask(const std::vector<int>& v) {
    Mask m = 0;
    for (int i : v) m |= bit(i);
    return m;
}

std::vector<int> label_sequence(const ChordDiagram& c) {
    std::vector<int> out(c.points());
    for (int p = 0; p < c.points(); ++p) out[p] = c.chord_at(p);
    return out;
}

std::string to_text(const ChordDiagram& c) {
    std::string s;
    for (const auto& ch : c.chords())
        s += "(" + std::to_string(ch.source + 1) + "," + std::to_string(ch.sink + 1) + ")";
    return s;
}

ChordDiagram parse_text(std::string_view s) {
    std::vector<std::pair<int, int>> pairs;
    std::size_t i = 0;
    auto fail = [&](const std::string& what) {
        throw DiagramError("parse error at position " + std::to_string(i) + ": " + what);
    };
    auto skip = [&] {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
    };
    auto number = [&] {
        skip();
        if (i >= s.size() || s[i] < '0' || s[i] > '9') fail("expected a number");
        int v = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
            v = v * 10 + (s[i] - '0');
            if (v > 1000) fail("number too large");
            ++i;
        }
        return v;
    };
    auto expect = [&](char ch) {
        skip();
        if (i >= s.size() || s[i] != ch) fail(std::string("expected '") + ch + "'");
        ++i;
    };
    skip();
    if (s.substr(i) == "empty" || s.substr(i) == "()") return ChordDiagram{};
    while (true) {
        skip();
        if (i == s.size()) break;
        expect('(');
        int a = number();
        expect(',');
        int b = number();
        expect(')');
        pairs.emplace_back(a, b);
    }
    try {
        return ChordDiagram::from_pairs(pairs);
    } catch (const DiagramError& e) {
        throw DiagramError(std::string("parse error: ") + e.what());
    }
}

nlohmann::json to_json(const ChordDiagram& c) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& ch : c.chords()) pairs.push_back({ch.source + 1, ch.sink + 1});
    return {{"n", c.size()}, {"pairs", pairs}};
}

ChordDiagram diagram_from_json(const nlohmann::json& j) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : j.at("pairs")) pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    auto c = ChordDiagram::from_pairs(pairs);
    if (j.contains("n") && j.at("n").get<int>() != c.size()) throw DiagramError("size field disagrees with pairs");
    return c;
}

}  // namespace chord
