#include "chord/bijections.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "chord/structure.hpp"

namespace chord {

ChordDiagram psi(const ChordDiagram& t) {
    if (!is_one_terminal(t)) throw DiagramError("psi needs a 1-terminal diagram");
    const int terminal = t.chord_at(t.points() - 1);
    std::vector<int> out;
    std::vector<int> group;
    auto flush = [&] {
        if (group.empty()) return;
        for (std::size_t i = 1; i < group.size(); ++i) out.push_back(group[i]);
        out.push_back(group[0]);
        group.clear();
    };
    for (int p = 0; p < t.points(); ++p) {
        if (t.is_source(p)) flush();
        group.push_back(t.chord_at(p));
    }
    flush();
    out.erase(std::remove(out.begin(), out.end(), terminal), out.end());
    return ChordDiagram::from_sequence(out);
}

ChordDiagram chi(const ChordDiagram& c) {
    std::vector<int> seq = label_sequence(c);
    std::vector<bool> source(c.points());
    for (int p = 0; p < c.points(); ++p) source[p] = c.is_source(p);
    seq.push_back(c.size());
    seq.push_back(c.size());
    source.push_back(true);
    source.push_back(false);
    std::vector<int> out, sinks;
    for (std::size_t p = 0; p < seq.size(); ++p) {
        if (!source[p]) {
            sinks.push_back(seq[p]);
            continue;
        }
        out.push_back(seq[p]);
        out.insert(out.end(), sinks.begin(), sinks.end());
        sinks.clear();
    }
    out.insert(out.end(), sinks.begin(), sinks.end());
    return ChordDiagram::from_sequence(out);
}

namespace {

std::vector<int> points_of(const ChordDiagram& c, Mask m) {
    std::vector<int> pts;
    for (int p = 0; p < c.points(); ++p)
        if ((m >> c.chord_at(p)) & 1) pts.push_back(p);
    return pts;
}

}  // namespace

Parts alpha(const ChordDiagram& c) {
    if (!is_connected(c) || c.size() < 2) throw DiagramError("alpha needs a connected diagram with at least 2 chords");
    const auto io = intersection_order(c);
    int t1 = 1;
    while (c.right_neighbors(io.chord[t1 - 1]) != 0) ++t1;
    const int d = io.chord[t1 - 1];
    Mask head = 0;
    for (int l = 0; l < t1; ++l) head |= bit(io.chord[l]);
    const auto rest = indecomposable_blocks(c, c.all() & ~head);
    const int ds = c.chord(d).source, dk = c.chord(d).sink;

    // traced subdiagrams live in the head as a 1-terminal diagram
    const auto head_list = mask_to_list(head);
    const ChordDiagram hd = induced_subdiagram(c, head);
    auto traced = [&](int x) {
        int r = static_cast<int>(std::find(head_list.begin(), head_list.end(), x) - head_list.begin());
        Mask out = 0;
        for (int y : mask_to_list(traced_subdiagram(hd, r))) out |= bit(head_list[y]);
        return out;
    };

    // group neighbors of d by the nested component they attach to
    std::map<int, Mask> by_component;  // component index, or -1 - neighbor for none
    for (int e : mask_to_list(c.left_neighbors(d))) {
        int key = -1 - e;
        for (std::size_t b = 0; b < rest.size(); ++b) {
            const auto& blk = rest[b];
            if (blk.first > ds && blk.last < dk && (c.neighbors(e) & blk.chords)) key = static_cast<int>(b);
        }
        by_component[key] |= traced(e);
    }

    struct Raw {
        Mask chords;
        int key;
    };
    std::vector<Raw> raw;
    Mask claimed = 0;
    for (auto& [key, dl] : by_component) {
        Mask cl = dl;
        for (const auto& blk : rest) {
            bool hit = false;
            for (int x : mask_to_list(dl)) hit = hit || (c.neighbors(x) & blk.chords);
            if (hit) cl |= blk.chords;
        }
        if (cl & claimed) throw std::logic_error("alpha: overlapping parts");
        claimed |= cl;
        int rightmost = -1;
        for (int p : points_of(c, cl))
            if (p > ds && p < dk) rightmost = std::max(rightmost, p);
        raw.push_back({cl, rightmost});
    }
    if ((claimed | bit(d)) != c.all()) throw std::logic_error("alpha: parts do not cover the diagram");
    std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) { return a.key > b.key; });

    Parts parts;
    for (const auto& r : raw) {
        Part part;
        part.diagram = induced_subdiagram(c, r.chords);
        for (int x : mask_to_list(r.chords & head)) part.block.push_back(io.label[x]);
        std::sort(part.block.begin(), part.block.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

void validate_parts(const Parts& parts) {
    if (parts.empty()) throw DiagramError("no parts");
    std::vector<int> all;
    for (const auto& p : parts) {
        if (!is_connected(p.diagram)) throw DiagramError("part is not a connected nonempty diagram");
        if (p.block.empty()) throw DiagramError("empty block");
        if (!std::is_sorted(p.block.begin(), p.block.end())) throw DiagramError("block not ascending");
        if (static_cast<int>(p.block.size()) > first_terminal(p.diagram))
            throw DiagramError("block larger than the part's first terminal index");
        all.insert(all.end(), p.block.begin(), p.block.end());
    }
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] != static_cast<int>(i) + 1) throw DiagramError("blocks do not partition 1..j");
}

ChordDiagram beta(const Parts& parts) {
    validate_parts(parts);
    const int k = static_cast<int>(parts.size());
    std::vector<std::vector<std::vector<int>>> groups(k);  // per part: points of each head group
    std::vector<std::vector<int>> tails(k);
    std::vector<int> offset(k, 0);
    int total = 0;
    for (int l = 0; l < k; ++l) {
        const auto& c = parts[l].diagram;
        offset[l] = total;
        total += c.size();
        const int i = static_cast<int>(parts[l].block.size());
        const auto io = intersection_order(c);
        Mask used = 0;
        for (int r = 0; r < i; ++r) used |= bit(io.chord[r]);
        int tail_start;
        if (i == first_terminal(c)) {
            tail_start = c.points() - 1;
        } else {
            auto blocks = indecomposable_blocks(c, c.all() & ~used);
            tail_start = blocks.back().first;
        }
        std::vector<int> starts;
        for (int x : mask_to_list(used)) starts.push_back(c.chord(x).source);
        std::sort(starts.begin(), starts.end());
        for (std::size_t r = 0; r < starts.size(); ++r) {
            int end = r + 1 < starts.size() ? starts[r + 1] : tail_start;
            std::vector<int> g;
            for (int p = starts[r]; p < end; ++p) g.push_back(p);
            groups[l].push_back(g);
        }
        for (int p = tail_start; p < c.points(); ++p) tails[l].push_back(p);
    }
    std::map<int, std::pair<int, int>> owner;  // position -> (part, rank)
    for (int l = 0; l < k; ++l)
        for (std::size_t r = 0; r < parts[l].block.size(); ++r) owner[parts[l].block[r]] = {l, static_cast<int>(r)};
    std::vector<int> seq;
    auto emit = [&](int l, int p) { seq.push_back(offset[l] + parts[l].diagram.chord_at(p)); };
    for (auto& [pos, who] : owner)
        for (int p : groups[who.first][who.second]) emit(who.first, p);
    seq.push_back(total);
    for (int l = k - 1; l >= 0; --l)
        for (int p : tails[l]) emit(l, p);
    seq.push_back(total);
    return ChordDiagram::from_sequence(seq);
}

RootShare root_share_decompose(const ChordDiagram& c) {
    if (!is_connected(c) || c.size() < 2) throw DiagramError("root-share needs a connected diagram with at least 2 chords");
    const auto comps = component_masks(c, c.all() & ~bit(0));
    const Mask outer = comps.front();
    const Mask root_side = c.all() & ~outer;
    int index = 0;
    for (int p = 1; p < c.points(); ++p) {
        if ((root_side >> c.chord_at(p)) & 1) break;
        ++index;
    }
    return {induced_subdiagram(c, root_side), induced_subdiagram(c, outer), index};
}

ChordDiagram root_share_compose(const ChordDiagram& root_side, const ChordDiagram& outer, int index) {
    if (!is_connected(root_side) || !is_connected(outer)) throw DiagramError("root-share parts must be connected");
    if (index < 1 || index > outer.points() - 1) throw DiagramError("root-share index out of range");
    const int shift = root_side.size();
    std::vector<int> seq{root_side.chord_at(0)};
    for (int p = 0; p < index; ++p) seq.push_back(shift + outer.chord_at(p));
    for (int p = 1; p < root_side.points(); ++p) seq.push_back(root_side.chord_at(p));
    for (int p = index; p < outer.points(); ++p) seq.push_back(shift + outer.chord_at(p));
    return ChordDiagram::from_sequence(seq);
}

}  // namespace chord
