#include "chord/structure.hpp"

#include <algorithm>
#include <climits>
#include <queue>

namespace chord {

std::vector<Mask> component_masks(const ChordDiagram& c, Mask within) {
    std::vector<Mask> out;
    Mask rest = within;
    while (rest) {
        Mask comp = bit(lowest(rest)), frontier = comp;
        while (frontier) {
            int v = lowest(frontier);
            frontier &= frontier - 1;
            Mask fresh = c.neighbors(v) & within & ~comp;
            comp |= fresh;
            frontier |= fresh;
        }
        out.push_back(comp);
        rest &= ~comp;
    }
    return out;
}

std::vector<Block> indecomposable_blocks(const ChordDiagram& c, Mask within) {
    std::vector<Block> out;
    int reach = -1, start = -1;
    Mask cur = 0;
    for (int p = 0; p < c.points(); ++p) {
        int x = c.chord_at(p);
        if (!((within >> x) & 1)) continue;
        if (start < 0) start = p;
        cur |= bit(x);
        reach = std::max(reach, c.partner(p));
        if (reach == p) {
            out.push_back({cur, start, p});
            start = -1;
            cur = 0;
        }
    }
    return out;
}

static std::vector<std::vector<int>> to_lists(const std::vector<Mask>& ms) {
    std::vector<std::vector<int>> out;
    for (Mask m : ms) out.push_back(mask_to_list(m));
    return out;
}

std::vector<std::vector<int>> connected_components(const ChordDiagram& c) {
    return to_lists(component_masks(c, c.all()));
}

std::vector<std::vector<int>> indecomposable_components(const ChordDiagram& c) {
    std::vector<Mask> ms;
    for (const auto& b : indecomposable_blocks(c, c.all())) ms.push_back(b.chords);
    return to_lists(ms);
}

bool is_connected(const ChordDiagram& c) {
    return c.size() >= 1 && component_masks(c, c.all()).size() == 1;
}

bool is_indecomposable(const ChordDiagram& c) {
    return c.size() >= 1 && indecomposable_blocks(c, c.all()).size() == 1;
}

namespace {

// Dense Edmonds-Karp; graphs here have at most 2*64 nodes.
struct MaxFlow {
    int n;
    std::vector<int> cap;
    explicit MaxFlow(int n) : n(n), cap(n * n, 0) {}
    void add(int u, int v, int c) { cap[u * n + v] += c; }
    int run(int s, int t, int limit) {
        int flow = 0;
        std::vector<int> prev(n);
        while (flow < limit) {
            std::fill(prev.begin(), prev.end(), -1);
            prev[s] = s;
            std::queue<int> q;
            q.push(s);
            while (!q.empty() && prev[t] < 0) {
                int u = q.front();
                q.pop();
                for (int v = 0; v < n; ++v)
                    if (prev[v] < 0 && cap[u * n + v] > 0) {
                        prev[v] = u;
                        q.push(v);
                    }
            }
            if (prev[t] < 0) break;
            int aug = INT_MAX;
            for (int v = t; v != s; v = prev[v]) aug = std::min(aug, cap[prev[v] * n + v]);
            for (int v = t; v != s; v = prev[v]) {
                cap[prev[v] * n + v] -= aug;
                cap[v * n + prev[v]] += aug;
            }
            flow += aug;
        }
        return flow;
    }
};

}  // namespace

int vertex_connectivity(const ChordDiagram& c) {
    const int n = c.size();
    if (n <= 1 || !is_connected(c)) return 0;
    int best = n - 1;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (c.crosses(s, t)) continue;
            MaxFlow f(2 * n);
            const int big = n + 1;
            for (int v = 0; v < n; ++v) {
                f.add(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
                for (int w : mask_to_list(c.neighbors(v))) f.add(2 * v + 1, 2 * w, big);
            }
            best = std::min(best, f.run(2 * s + 1, 2 * t, best));
        }
    return best;
}

int edge_connectivity(const ChordDiagram& c) {
    const int n = c.size();
    if (n <= 1 || !is_connected(c)) return 0;
    int best = n;
    for (int t = 1; t < n; ++t) {
        MaxFlow f(n);
        for (int v = 0; v < n; ++v)
            for (int w : mask_to_list(c.neighbors(v))) f.add(v, w, 1);
        best = std::min(best, f.run(0, t, best));
    }
    return best;
}

static void label_component(const ChordDiagram& c, Mask comp, IntersectionOrder& io, int& next) {
    int root = lowest(comp);
    io.label[root] = ++next;
    io.chord[next - 1] = root;
    for (Mask m : component_masks(c, comp & ~bit(root))) label_component(c, m, io, next);
}

IntersectionOrder intersection_order(const ChordDiagram& c) {
    if (!is_connected(c)) throw DiagramError("intersection order needs a connected nonempty diagram");
    IntersectionOrder io;
    io.label.assign(c.size(), 0);
    io.chord.assign(c.size(), 0);
    int next = 0;
    label_component(c, c.all(), io, next);
    return io;
}

TerminalProfile terminal_profile(const ChordDiagram& c) {
    auto io = intersection_order(c);
    TerminalProfile tp;
    for (int l = 1; l <= c.size(); ++l)
        if (c.right_neighbors(io.chord[l - 1]) == 0) tp.t.push_back(l);
    tp.k = static_cast<int>(tp.t.size());
    for (std::size_t j = 1; j < tp.t.size(); ++j) tp.gaps.push_back(tp.t[j] - tp.t[j - 1]);
    return tp;
}

int first_terminal(const ChordDiagram& c) { return terminal_profile(c).t.front(); }

bool is_k_terminal(const ChordDiagram& c, int k) {
    if (!is_connected(c)) return false;
    const int n = c.size();
    auto io = intersection_order(c);
    for (int x = 0; x < n; ++x) {
        int rn = popcount(c.right_neighbors(x));
        // x is j-terminal for every j > rn; the smallest such j is the strictest
        int j = rn + 1;
        if (j <= k && io.label[x] < n - j + 1) return false;
    }
    return true;
}

int terminality(const ChordDiagram& c) {
    if (!is_connected(c)) return 0;
    int k = 0;
    while (k < c.size() && is_k_terminal(c, k + 1)) ++k;
    return k;
}

bool is_one_terminal(const ChordDiagram& c) { return is_k_terminal(c, 1); }

bool is_k_terminal_minimal(const ChordDiagram& c, int k) {
    if (!is_k_terminal(c, k)) return false;
    auto io = intersection_order(c);
    const int n = c.size();
    for (int x = 0; x < n; ++x)
        if (io.label[x] <= n - k && popcount(c.right_neighbors(x)) != k) return false;
    return true;
}

Mask head_chords(const ChordDiagram& c) {
    auto io = intersection_order(c);
    int t1 = 0;
    while (c.right_neighbors(io.chord[t1]) != 0) ++t1;
    Mask m = 0;
    for (int l = 0; l <= t1; ++l) m |= bit(io.chord[l]);
    return m;
}

std::vector<SourceSinkGroup> source_sink_groups(const ChordDiagram& c) {
    const Mask head = head_chords(c);
    const auto rest = indecomposable_blocks(c, c.all() & ~head);
    std::vector<SourceSinkGroup> out;
    for (int x : mask_to_list(head)) {
        SourceSinkGroup g;
        g.chord = x;
        g.source = c.chord(x).source;
        g.points.push_back(g.source);
        for (int p = g.source + 1; p < c.points(); ++p) {
            int y = c.chord_at(p);
            if (!((head >> y) & 1)) continue;
            if (c.is_source(p) || y == x) break;
            g.sink_chords.push_back(y);
            g.points.push_back(p);
        }
        for (const auto& b : rest) {
            bool hit = false;
            for (int y : g.sink_chords) hit = hit || (c.neighbors(y) & b.chords);
            if (!hit) continue;
            g.attached.push_back(b.chords);
            for (int p = 0; p < c.points(); ++p)
                if ((b.chords >> c.chord_at(p)) & 1) g.points.push_back(p);
        }
        std::sort(g.points.begin(), g.points.end());
        out.push_back(std::move(g));
    }
    return out;
}

Mask traced_subdiagram(const ChordDiagram& d, int chord) {
    if (!is_one_terminal(d)) throw DiagramError("traced subdiagram needs a 1-terminal diagram");
    if (chord < 0 || chord >= d.size()) throw DiagramError("chord index out of range");
    auto groups = source_sink_groups(d);
    Mask in = bit(chord), frontier = in;
    while (frontier) {
        int x = lowest(frontier);
        frontier &= frontier - 1;
        for (int y : groups[x].sink_chords)
            if (!((in >> y) & 1)) {
                in |= bit(y);
                frontier |= bit(y);
            }
    }
    return in;
}

int valency(const ChordDiagram& c, int x) {
    if (!is_connected(c)) throw DiagramError("valency needs a connected diagram");
    const Mask later = c.all() & ~((bit(x) << 1) - 1);
    const Mask left = c.left_neighbors(x);
    int k = 0;
    for (int y : mask_to_list(left))
        if (!(c.neighbors(y) & later)) ++k;
    const Mask rest = c.all() & ~left & ~bit(x);
    std::vector<Block> blocks;
    for (Mask m : component_masks(c, rest)) {
        Block b{m, 2 * c.size(), -1};
        for (int y : mask_to_list(m)) {
            b.first = std::min(b.first, c.chord(y).source);
            b.last = std::max(b.last, c.chord(y).sink);
        }
        blocks.push_back(b);
    }
    const int sink = c.chord(x).sink;
    auto next_point = [&](int p) {
        ++p;
        while (p < c.points() && !((rest >> c.chord_at(p)) & 1) && c.chord_at(p) != x) ++p;
        return p;
    };
    int l = 0;
    int p = next_point(c.chord(x).source);
    while (p < sink) {
        auto it = std::find_if(blocks.begin(), blocks.end(), [&](const Block& b) { return b.first == p; });
        if (it == blocks.end() || it->last > sink) break;
        ++l;
        p = next_point(it->last);
    }
    return k + l;
}

static bool extend_path(const ChordDiagram& c, std::vector<int>& path, Mask on, int target) {
    int last = path.back();
    if (last == target) return true;
    for (int w : mask_to_list(c.neighbors(last) & ~on)) {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < path.size() && ok; ++i) ok = !c.crosses(path[i], w);
        for (int v : path) ok = ok && !c.nests_over(v, w) && !c.nests_over(w, v);
        if (!ok) continue;
        path.push_back(w);
        if (extend_path(c, path, on | bit(w), target)) return true;
        path.pop_back();
    }
    return false;
}

bool exists_nonnesting_induced_path(const ChordDiagram& c, int a, int b) {
    if (a < 0 || b < 0 || a >= c.size() || b >= c.size()) return false;
    std::vector<int> path{a};
    return extend_path(c, path, bit(a), b);
}

}  // namespace chord
