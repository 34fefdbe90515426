#include "chord/patterns.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "chord/structure.hpp"

namespace chord {

ChordDiagram complete_diagram(int k) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= k; ++i) pairs.emplace_back(i, k + i);
    return ChordDiagram::from_pairs(pairs);
}

ChordDiagram nesting_diagram(int k) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= k; ++i) pairs.emplace_back(i, 2 * k + 1 - i);
    return ChordDiagram::from_pairs(pairs);
}

namespace {

// Left-to-right placement keeping every closed chord at exactly two crossings
// and no chord above two.
struct CycleSearch {
    int m;
    std::vector<int> seq;     // chord label per point
    std::vector<int> open;    // labels currently open, in opening order
    std::vector<int> degree;
    std::vector<ChordDiagram> found;

    void run(int placed, int opened) {
        const int p = static_cast<int>(seq.size());
        if (p == 2 * m) {
            auto c = ChordDiagram::from_sequence(seq);
            if (c.size() == m && component_masks(c, c.all()).size() == 1) found.push_back(c);
            return;
        }
        // open a new chord
        if (opened < m) {
            seq.push_back(opened);
            open.push_back(opened);
            run(placed, opened + 1);
            open.pop_back();
            seq.pop_back();
        }
        // close an open chord: it crosses every chord opened after it that is still open
        for (std::size_t i = 0; i < open.size(); ++i) {
            int x = open[i];
            int extra = static_cast<int>(open.size() - i - 1);
            if (degree[x] + extra != 2) continue;
            bool ok = true;
            for (std::size_t j = i + 1; j < open.size(); ++j) ok = ok && degree[open[j]] < 2;
            if (!ok) continue;
            for (std::size_t j = i + 1; j < open.size(); ++j) ++degree[open[j]];
            degree[x] += extra;
            auto saved = open;
            open.erase(open.begin() + static_cast<long>(i));
            seq.push_back(x);
            run(placed + 1, opened);
            seq.pop_back();
            open = saved;
            degree[x] -= extra;
            for (std::size_t j = i + 1; j < open.size(); ++j) --degree[open[j]];
        }
    }
};

}  // namespace

std::vector<ChordDiagram> cycle_realizations(int m) {
    if (m < 3) throw DiagramError("cycles need at least 3 chords");
    static std::mutex mu;
    static std::map<int, std::vector<ChordDiagram>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    CycleSearch s{m, {}, {}, std::vector<int>(m, 0), {}};
    s.run(0, 0);
    std::sort(s.found.begin(), s.found.end());
    s.found.erase(std::unique(s.found.begin(), s.found.end()), s.found.end());
    return cache[m] = s.found;
}

ChordDiagram top_cycle(int m) {
    for (const auto& c : cycle_realizations(m))
        if (is_one_terminal(c)) return c;
    throw DiagramError("no top cycle realization found");
}

ChordDiagram bottom_cycle(int m) {
    auto all = cycle_realizations(m);
    if (m == 3) return all.front();
    for (const auto& c : all)
        if (!is_one_terminal(c)) return c;
    throw DiagramError("no bottom cycle realization found");
}

std::vector<Mask> induced_cycles(const ChordDiagram& c) {
    std::vector<Mask> out;
    const int n = c.size();
    std::vector<int> path;
    std::function<void(Mask)> grow = [&](Mask on) {
        const int s = path.front();
        const int last = path.back();
        const int r = static_cast<int>(path.size()) - 1;
        Mask inner = on & ~bit(s) & ~bit(last);
        for (int w : mask_to_list(c.neighbors(last) & ~on)) {
            if (w < s || (c.neighbors(w) & inner)) continue;
            if (r >= 1 && c.crosses(w, s)) {
                if (path[1] < w) out.push_back(on | bit(w));
                continue;
            }
            path.push_back(w);
            grow(on | bit(w));
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        grow(bit(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_top_realization(const ChordDiagram& c, Mask cycle) {
    return popcount(cycle) == 3 || is_one_terminal(induced_subdiagram(c, cycle));
}

bool is_bottom_realization(const ChordDiagram& c, Mask cycle) {
    return popcount(cycle) == 3 || !is_one_terminal(induced_subdiagram(c, cycle));
}

namespace {

// 0 disjoint, 1 crossing, 2 a nests over b; requires a before b
int relation(const ChordDiagram& c, int a, int b) {
    if (c.chord(a).sink < c.chord(b).source) return 0;
    return c.chord(b).sink < c.chord(a).sink ? 2 : 1;
}

bool match(const ChordDiagram& c, const ChordDiagram& p, std::vector<int>& chosen, int from) {
    const int r = static_cast<int>(chosen.size());
    if (r == p.size()) return true;
    for (int x = from; x <= c.size() - (p.size() - r); ++x) {
        bool ok = true;
        for (int s = 0; s < r && ok; ++s) ok = relation(c, chosen[s], x) == relation(p, s, r);
        if (!ok) continue;
        chosen.push_back(x);
        if (match(c, p, chosen, x + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool contains_pattern(const ChordDiagram& c, const ChordDiagram& p) {
    if (p.size() > c.size()) return false;
    std::vector<int> chosen;
    return match(c, p, chosen, 0);
}

bool contains_any_top_cycle(const ChordDiagram& c) {
    for (Mask cyc : induced_cycles(c))
        if (is_top_realization(c, cyc)) return true;
    return false;
}

bool contains_any_bottom_cycle(const ChordDiagram& c) {
    for (Mask cyc : induced_cycles(c))
        if (is_bottom_realization(c, cyc)) return true;
    return false;
}

static void check_perm(const std::vector<int>& sigma) {
    std::vector<int> sorted(sigma);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 1) throw DiagramError("not a permutation of 1..k");
}

ChordDiagram permutation_diagram(const std::vector<int>& sigma) {
    check_perm(sigma);
    const int k = static_cast<int>(sigma.size());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i) pairs.emplace_back(i + 1, k + sigma[i]);
    return ChordDiagram::from_pairs(pairs);
}

bool is_permutation_diagram(const ChordDiagram& c) {
    for (const auto& ch : c.chords())
        if (ch.source >= c.size()) return false;
    return true;
}

bool is_shifted_permutation_diagram(const ChordDiagram& c) {
    if (!is_one_terminal(c)) return false;
    int last = c.chord_at(c.points() - 1);
    return is_permutation_diagram(induced_subdiagram(c, c.all() & ~bit(last)));
}

namespace {

bool has_clique(const ChordDiagram& c, Mask cand, int need) {
    if (need == 0) return true;
    if (popcount(cand) < need) return false;
    while (cand) {
        int v = lowest(cand);
        cand &= cand - 1;
        if (has_clique(c, cand & c.neighbors(v), need - 1)) return true;
    }
    return false;
}

int longest_nesting_chain(const ChordDiagram& c) {
    // chords by source; chain a1 over a2 over ... ; dp on standard order
    const int n = c.size();
    std::vector<int> best(n, 1);
    int top = 0;
    for (int b = 0; b < n; ++b) {
        for (int a = 0; a < b; ++a)
            if (c.nests_over(a, b)) best[b] = std::max(best[b], best[a] + 1);
        top = std::max(top, best[b]);
    }
    return top;
}

}  // namespace

bool in_class(const ChordDiagram& c, const PatternClass& cls) {
    using K = PatternClass::Kind;
    switch (cls.kind) {
        case K::All:
            return true;
        case K::TopCycleFree:
            return !contains_any_top_cycle(c);
        case K::BottomCycleFree:
            return !contains_any_bottom_cycle(c);
        case K::TriangleFree:
            return !has_clique(c, c.all(), 3);
        case K::Tree:
            return induced_cycles(c).empty();
        case K::Chordal:
            for (Mask cyc : induced_cycles(c))
                if (popcount(cyc) >= 4) return false;
            return true;
        case K::Bipartite:
            for (Mask cyc : induced_cycles(c))
                if (popcount(cyc) % 2) return false;
            return true;
        case K::CompleteFree:
            return !has_clique(c, c.all(), cls.k);
        case K::NestingFree:
            return c.size() == 0 ? cls.k > 0 : longest_nesting_chain(c) < cls.k;
        case K::Noncrossing:
            return crossings(c) == 0;
        case K::Nonnesting:
            return nestings(c) == 0;
        case K::PermFree:
            return !contains_pattern(c, permutation_diagram(cls.perm));
    }
    return false;
}

std::string PatternClass::name() const {
    using K = Kind;
    switch (kind) {
        case K::All: return "all";
        case K::TopCycleFree: return "top-cycle-free";
        case K::BottomCycleFree: return "bottom-cycle-free";
        case K::TriangleFree: return "triangle-free";
        case K::Tree: return "tree";
        case K::Chordal: return "chordal";
        case K::Bipartite: return "bipartite";
        case K::CompleteFree: return "K" + std::to_string(k) + "-free";
        case K::NestingFree: return "N" + std::to_string(k) + "-free";
        case K::Noncrossing: return "noncrossing";
        case K::Nonnesting: return "nonnesting";
        case K::PermFree: {
            std::string s = "perm-free:";
            for (int v : perm) s += std::to_string(v);
            return s;
        }
    }
    return "?";
}

PatternClass PatternClass::parse(const std::string& name) {
    using K = Kind;
    static const std::map<std::string, K> plain = {
        {"all", K::All},
        {"top-cycle-free", K::TopCycleFree},
        {"bottom-cycle-free", K::BottomCycleFree},
        {"triangle-free", K::TriangleFree},
        {"tree", K::Tree},
        {"chordal", K::Chordal},
        {"bipartite", K::Bipartite},
        {"noncrossing", K::Noncrossing},
        {"nonnesting", K::Nonnesting},
    };
    PatternClass c;
    if (auto it = plain.find(name); it != plain.end()) {
        c.kind = it->second;
        return c;
    }
    auto numbered = [&](char lead, K kind) {
        if (name.size() < 7 || name[0] != lead || name.substr(name.size() - 5) != "-free") return false;
        auto digits = name.substr(1, name.size() - 6);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) return false;
        c.kind = kind;
        c.k = std::stoi(digits);
        return c.k >= 1;
    };
    if (numbered('K', K::CompleteFree) || numbered('N', K::NestingFree)) return c;
    if (name.rfind("perm-free:", 0) == 0) {
        c.kind = K::PermFree;
        for (char ch : name.substr(10)) {
            if (ch < '1' || ch > '9') throw DiagramError("bad permutation in class name: " + name);
            c.perm.push_back(ch - '0');
        }
        check_perm(c.perm);
        return c;
    }
    throw DiagramError("unknown class: " + name);
}

std::vector<ChordDiagram> PatternClass::forbidden(int max_size) const {
    using K = Kind;
    std::vector<ChordDiagram> out;
    auto cycles = [&](auto keep) {
        for (int m = 3; m <= max_size; ++m)
            for (const auto& c : cycle_realizations(m)) {
                bool top = m == 3 || is_one_terminal(c);
                bool bottom = m == 3 || !top;
                if (keep(m, top, bottom)) out.push_back(c);
            }
    };
    switch (kind) {
        case K::All: break;
        case K::TopCycleFree: cycles([](int, bool t, bool) { return t; }); break;
        case K::BottomCycleFree: cycles([](int, bool, bool b) { return b; }); break;
        case K::TriangleFree: cycles([](int m, bool, bool) { return m == 3; }); break;
        case K::Tree: cycles([](int, bool, bool) { return true; }); break;
        case K::Chordal: cycles([](int m, bool, bool) { return m >= 4; }); break;
        case K::Bipartite: cycles([](int m, bool, bool) { return m % 2 == 1; }); break;
        case K::CompleteFree: if (k <= max_size) out.push_back(complete_diagram(k)); break;
        case K::NestingFree: if (k <= max_size) out.push_back(nesting_diagram(k)); break;
        case K::Noncrossing: if (max_size >= 2) out.push_back(complete_diagram(2)); break;
        case K::Nonnesting: if (max_size >= 2) out.push_back(nesting_diagram(2)); break;
        case K::PermFree:
            if (static_cast<int>(perm.size()) <= max_size) out.push_back(permutation_diagram(perm));
            break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool PatternClass::connected_patterns() const {
    using K = Kind;
    switch (kind) {
        case K::NestingFree: return k == 1;
        case K::Nonnesting: return false;
        case K::PermFree: return is_connected(permutation_diagram(perm));
        default: return true;
    }
}

std::vector<std::string> builtin_class_names() {
    return {"all",      "top-cycle-free", "bottom-cycle-free", "triangle-free", "tree",
            "chordal",  "bipartite",      "K3-free",           "K4-free",       "N3-free",
            "noncrossing", "nonnesting",  "perm-free:213",     "perm-free:132", "perm-free:231",
            "perm-free:312"};
}

}  // namespace chord
