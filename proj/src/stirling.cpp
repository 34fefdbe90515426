#include "chord/stirling.hpp"

#include <algorithm>
#include <functional>

#include "chord/bijections.hpp"
#include "chord/structure.hpp"

namespace chord {

bool is_stirling(const StirlingWord& w) {
    if (w.size() % 2) return false;
    const int n = static_cast<int>(w.size() / 2);
    std::vector<int> first(n + 1, -1), count(n + 1, 0);
    for (std::size_t p = 0; p < w.size(); ++p) {
        int x = w[p];
        if (x < 1 || x > n || ++count[x] > 2) return false;
        if (count[x] == 1) {
            first[x] = static_cast<int>(p);
            continue;
        }
        for (std::size_t q = first[x] + 1; q < p; ++q)
            if (w[q] <= x) return false;
    }
    return true;
}

std::string word_to_text(const StirlingWord& w) {
    bool small = std::all_of(w.begin(), w.end(), [](int x) { return x <= 9; });
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!small && i) s += ' ';
        s += std::to_string(w[i]);
    }
    return s;
}

StirlingWord parse_word(const std::string& s) {
    StirlingWord w;
    bool spaced = s.find_first_of(" ,") != std::string::npos;
    if (spaced) {
        std::string cur;
        for (char ch : s + " ") {
            if (ch == ' ' || ch == ',') {
                if (!cur.empty()) w.push_back(std::stoi(cur));
                cur.clear();
            } else if (ch >= '0' && ch <= '9') {
                cur += ch;
            } else {
                throw DiagramError("bad character in word");
            }
        }
    } else {
        for (char ch : s) {
            if (ch < '0' || ch > '9') throw DiagramError("bad character in word");
            w.push_back(ch - '0');
        }
    }
    return w;
}

StirlingWord zeta(const ChordDiagram& c) {
    if (c.empty()) return {};
    auto w = zeta(induced_subdiagram(c, c.all() & ~bit(0)));
    const int after = c.chord(0).sink - 1;  // symbols before the new pair
    const int n = c.size();
    w.insert(w.begin() + after, {n, n});
    return w;
}

ChordDiagram zeta_inverse(const StirlingWord& w) {
    if (!is_stirling(w)) throw DiagramError("not a Stirling word");
    if (w.empty()) return {};
    const int n = static_cast<int>(w.size() / 2);
    auto q = static_cast<int>(std::find(w.begin(), w.end(), n) - w.begin());
    StirlingWord rest(w);
    rest.erase(rest.begin() + q, rest.begin() + q + 2);
    auto inner = zeta_inverse(rest);
    const int sink = q + 1;  // 0-based point of the new root's sink
    std::vector<int> seq{n};
    int p = 0;
    for (int point = 1; point < 2 * n; ++point) seq.push_back(point == sink ? n : inner.chord_at(p++));
    return ChordDiagram::from_sequence(seq);
}

void validate_tree(const IncreasingOrderedTree& t) {
    std::vector<int> parents(t.size(), 0);
    for (int v = 0; v < t.size(); ++v)
        for (int c : t.children[v]) {
            if (c <= v || c >= t.size()) throw DiagramError("tree labels must increase away from the root");
            ++parents[c];
        }
    for (int v = 1; v < t.size(); ++v)
        if (parents[v] != 1) throw DiagramError("every non-root vertex needs exactly one parent");
}

std::string tree_to_text(const IncreasingOrderedTree& t) {
    std::function<std::string(int)> go = [&](int v) {
        std::string s = std::to_string(v);
        if (t.children[v].empty()) return s;
        s += "(";
        for (std::size_t i = 0; i < t.children[v].size(); ++i) s += (i ? " " : "") + go(t.children[v][i]);
        return s + ")";
    };
    return go(0);
}

StirlingWord eta(const IncreasingOrderedTree& t) {
    validate_tree(t);
    StirlingWord w;
    std::function<void(int)> go = [&](int v) {
        for (int c : t.children[v]) {
            w.push_back(c);
            go(c);
            w.push_back(c);
        }
    };
    go(0);
    return w;
}

IncreasingOrderedTree eta_inverse(const StirlingWord& w) {
    if (!is_stirling(w)) throw DiagramError("not a Stirling word");
    IncreasingOrderedTree t;
    t.children.assign(w.size() / 2 + 1, {});
    std::vector<int> stack{0};
    std::vector<bool> seen(t.children.size(), false);
    for (int x : w) {
        if (!seen[x]) {
            seen[x] = true;
            t.children[stack.back()].push_back(x);
            stack.push_back(x);
        } else {
            stack.pop_back();
        }
    }
    return t;
}

IncreasingOrderedTree theta(const ChordDiagram& c) {
    if (!is_one_terminal(c)) throw DiagramError("theta needs a 1-terminal diagram");
    IncreasingOrderedTree t;
    t.children.assign(c.size(), {});
    if (c.size() == 1) return t;
    for (const auto& part : alpha(c)) {
        auto sub = theta(part.diagram);
        const auto& lab = part.block;
        t.children[0].push_back(lab[0]);
        for (int v = 0; v < sub.size(); ++v)
            for (int ch : sub.children[v]) t.children[lab[v]].push_back(lab[ch]);
    }
    return t;
}

ChordDiagram theta_inverse(const IncreasingOrderedTree& t) {
    validate_tree(t);
    if (t.size() == 1) return parse_text("(1,2)");
    Parts parts;
    for (int r : t.children[0]) {
        std::vector<int> labels;
        std::function<void(int)> collect = [&](int v) {
            labels.push_back(v);
            for (int c : t.children[v]) collect(c);
        };
        collect(r);
        std::sort(labels.begin(), labels.end());
        auto rank = [&](int v) { return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin()); };
        IncreasingOrderedTree sub;
        sub.children.assign(labels.size(), {});
        for (int v : labels)
            for (int c : t.children[v]) sub.children[rank(v)].push_back(rank(c));
        parts.push_back({theta_inverse(sub), labels});
    }
    return beta(parts);
}

ChordDiagram stirling_via_trees(const StirlingWord& w) {
    return psi(theta_inverse(eta_inverse(w)));
}

std::vector<IncreasingOrderedTree> all_trees(int n) {
    // vertex v goes into any of the 2v-1 child slots of a tree on 0..v-1
    std::vector<IncreasingOrderedTree> cur;
    if (n < 1) return cur;
    cur.push_back({});
    for (int v = 1; v < n; ++v) {
        std::vector<IncreasingOrderedTree> next;
        for (const auto& t : cur)
            for (int u = 0; u < v; ++u)
                for (std::size_t slot = 0; slot <= t.children[u].size(); ++slot) {
                    auto x = t;
                    x.children.emplace_back();
                    x.children[u].insert(x.children[u].begin() + static_cast<long>(slot), v);
                    next.push_back(std::move(x));
                }
        cur = std::move(next);
    }
    return cur;
}

std::vector<StirlingWord> all_stirling_words(int n) {
    std::vector<StirlingWord> cur{{}};
    for (int k = 1; k <= n; ++k) {
        std::vector<StirlingWord> next;
        for (const auto& w : cur)
            for (std::size_t g = 0; g <= w.size(); ++g) {
                StirlingWord x(w);
                x.insert(x.begin() + static_cast<long>(g), {k, k});
                next.push_back(std::move(x));
            }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace chord
