#include "chord/triangulation.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "chord/bijections.hpp"
#include "chord/patterns.hpp"
#include "chord/structure.hpp"

namespace chord {

std::vector<std::vector<int>> Triangulation::rotation() const {
    std::vector<std::vector<int>> rot(vertex_count);
    if (is_edge()) {
        rot[exterior[0]] = {exterior[1]};
        rot[exterior[1]] = {exterior[0]};
        return rot;
    }
    std::vector<std::map<int, int>> next(vertex_count);
    for (auto [a, b, c] : triangles) {
        next[a][b] = c;
        next[b][c] = a;
        next[c][a] = b;
    }
    std::vector<int> succ(vertex_count, -1);
    const int t = exterior_count();
    for (int m = 0; m < t; ++m) succ[exterior[m]] = exterior[(m + 1) % t];
    for (int v = 0; v < vertex_count; ++v) {
        if (next[v].empty()) continue;
        int start = succ[v] >= 0 ? succ[v] : next[v].begin()->first;
        int w = start;
        do {
            rot[v].push_back(w);
            auto it = next[v].find(w);
            if (it == next[v].end()) break;
            w = it->second;
        } while (w != start);
    }
    return rot;
}

std::string canonical_code(const Triangulation& t) {
    const auto rot = t.rotation();
    std::vector<int> label(t.vertex_count, -1), order;
    std::vector<int> ref(t.vertex_count, -1);
    std::queue<int> q;
    const int root = t.exterior.front();
    label[root] = 0;
    ref[root] = t.exterior.back();
    order.push_back(root);
    q.push(root);
    std::string code = "e" + std::to_string(t.exterior_count()) + ";";
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        const auto& r = rot[u];
        auto it = std::find(r.begin(), r.end(), ref[u]);
        std::size_t s = it == r.end() ? 0 : static_cast<std::size_t>(it - r.begin());
        code += std::to_string(label[u]) + ":";
        for (std::size_t i = 0; i < r.size(); ++i) {
            int w = r[(s + i) % r.size()];
            if (label[w] < 0) {
                label[w] = static_cast<int>(order.size());
                order.push_back(w);
                ref[w] = u;
                q.push(w);
            }
            code += std::to_string(label[w]) + (i + 1 < r.size() ? "," : "");
        }
        code += ";";
    }
    return code;
}

nlohmann::json to_json(const Triangulation& t) {
    nlohmann::json tri = nlohmann::json::array();
    for (auto& f : t.triangles) tri.push_back({f[0], f[1], f[2]});
    return {{"vertices", t.vertex_count},
            {"exterior", t.exterior},
            {"triangles", tri},
            {"rotation", t.rotation()},
            {"interior_count", t.interior_count()},
            {"code", canonical_code(t)}};
}

Triangulation join(const std::vector<GluedPart>& parts) {
    if (parts.empty()) throw DiagramError("join needs at least one part");
    Triangulation out;
    out.vertex_count = 0;
    out.exterior.clear();
    std::vector<int> polygon;
    int joint = -1;
    for (std::size_t l = 0; l < parts.size(); ++l) {
        const auto& tp = parts[l].triangulation;
        const auto& ext = tp.exterior;
        const int t = tp.exterior_count() - 1;
        const int i = parts[l].index;
        if (i < 1 || i > t) throw DiagramError("attachment index out of range");
        std::vector<int> map(tp.vertex_count, -1);
        if (joint >= 0) map[ext[0]] = joint;
        for (int v = 0; v < tp.vertex_count; ++v)
            if (map[v] < 0) map[v] = out.vertex_count++;
        for (auto f : tp.triangles) out.triangles.push_back({map[f[0]], map[f[1]], map[f[2]]});
        if (l == 0) {
            out.exterior.push_back(map[ext[0]]);
            polygon.push_back(map[ext[0]]);
        }
        for (int m = 1; m <= i; ++m) out.exterior.push_back(map[ext[m]]);
        for (int m = t; m >= i; --m) polygon.push_back(map[ext[m]]);
        joint = map[ext[i]];
    }
    const int v = out.vertex_count++;
    for (std::size_t m = 0; m + 1 < polygon.size(); ++m) out.triangles.push_back({polygon[m], polygon[m + 1], v});
    out.exterior.push_back(v);
    return out;
}

std::vector<GluedPart> gamma(const Triangulation& t) {
    if (t.is_edge()) throw DiagramError("a single edge has no decomposition");
    const int v = t.exterior.back();
    std::vector<int> pos(t.vertex_count, -1);
    for (int m = 0; m < t.exterior_count(); ++m) pos[t.exterior[m]] = m;
    std::map<int, int> fan;
    std::vector<std::array<int, 3>> others;
    for (auto f : t.triangles) {
        auto it = std::find(f.begin(), f.end(), v);
        if (it == f.end()) {
            others.push_back(f);
            continue;
        }
        int k = static_cast<int>(it - f.begin());
        fan[f[(k + 1) % 3]] = f[(k + 2) % 3];
    }
    std::vector<int> polygon{t.exterior.front()};
    while (fan.count(polygon.back())) polygon.push_back(fan[polygon.back()]);
    if (polygon.back() != t.exterior[t.exterior_count() - 2]) throw DiagramError("malformed fan at the root vertex");

    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    for (std::size_t f = 0; f < others.size(); ++f)
        for (int e = 0; e < 3; ++e) {
            int a = others[f][e], b = others[f][(e + 1) % 3];
            edge_faces[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(f));
        }

    std::vector<GluedPart> out;
    std::size_t s = 0;
    while (s + 1 < polygon.size()) {
        std::size_t e = s + 1;
        while (pos[polygon[e]] < 0) ++e;
        const int a = polygon[s], b = polygon[e];
        GluedPart part;
        part.index = pos[b] - pos[a];
        std::vector<int> ext;
        for (int m = pos[a]; m <= pos[b]; ++m) ext.push_back(t.exterior[m]);
        for (std::size_t m = e - 1; m > s; --m) ext.push_back(polygon[m]);
        if (ext.size() == 2) {
            part.triangulation = Triangulation::edge();
        } else {
            // faces reachable across shared edges from the boundary edge a, ext[1]
            std::set<int> seen;
            std::vector<int> stack = edge_faces[{std::min(ext[0], ext[1]), std::max(ext[0], ext[1])}];
            while (!stack.empty()) {
                int f = stack.back();
                stack.pop_back();
                if (!seen.insert(f).second) continue;
                for (int k = 0; k < 3; ++k) {
                    int x = others[f][k], y = others[f][(k + 1) % 3];
                    for (int g : edge_faces[{std::min(x, y), std::max(x, y)}]) stack.push_back(g);
                }
            }
            std::map<int, int> relabel;
            for (int x : ext) relabel.emplace(x, static_cast<int>(relabel.size()));
            std::set<int> interior;
            for (int f : seen)
                for (int x : others[f])
                    if (!relabel.count(x)) interior.insert(x);
            for (int x : interior) relabel.emplace(x, static_cast<int>(relabel.size()));
            Triangulation tp;
            tp.vertex_count = static_cast<int>(relabel.size());
            tp.exterior.clear();
            for (int x : ext) tp.exterior.push_back(relabel[x]);
            for (int f : seen) tp.triangles.push_back({relabel[others[f][0]], relabel[others[f][1]], relabel[others[f][2]]});
            std::sort(tp.triangles.begin(), tp.triangles.end());
            part.triangulation = tp;
        }
        out.push_back(part);
        s = e;
    }
    return out;
}

Triangulation omega(const ChordDiagram& c) {
    if (!is_connected(c)) throw DiagramError("omega needs a connected diagram");
    if (contains_any_top_cycle(c)) throw DiagramError("omega needs a top-cycle-free diagram");
    if (c.size() == 1) return Triangulation::edge();
    std::vector<GluedPart> glued;
    for (const auto& p : alpha(c)) glued.push_back({omega(p.diagram), static_cast<int>(p.block.size())});
    return join(glued);
}

}  // namespace chord
