#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace chord {

// Bit sets over chord indices. Diagrams are limited to 64 chords.
using Mask = std::uint64_t;
inline constexpr int kMaxChords = 64;

inline Mask bit(int i) { return Mask{1} << i; }
inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline int lowest(Mask m) { return __builtin_ctzll(m); }

class DiagramError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Chord {
    int source;  // 0-based point
    int sink;
    friend bool operator==(const Chord&, const Chord&) = default;
};

// Perfect matching on points 0..2n-1. Chord i is the i-th chord by source.
class ChordDiagram {
public:
    ChordDiagram() = default;

    // 1-based pairs, any orientation, any order.
    static ChordDiagram from_pairs(const std::vector<std::pair<int, int>>& pairs);
    // 0-based partner array; validated.
    static ChordDiagram from_partner(std::vector<std::uint8_t> partner);
    // Each chord label appears exactly twice; labels are arbitrary ints.
    static ChordDiagram from_sequence(const std::vector<int>& labels);

    int size() const { return static_cast<int>(chords_.size()); }
    int points() const { return static_cast<int>(partner_.size()); }
    bool empty() const { return chords_.empty(); }

    int partner(int p) const { return partner_[p]; }
    int chord_at(int p) const { return chord_at_[p]; }
    bool is_source(int p) const { return partner_[p] > p; }
    const Chord& chord(int i) const { return chords_[i]; }
    const std::vector<Chord>& chords() const { return chords_; }
    const std::vector<std::uint8_t>& partner_array() const { return partner_; }

    Mask all() const { return size() == 64 ? ~Mask{0} : bit(size()) - 1; }

    // right[i]: chords j > i crossing i. left[i]: chords j < i crossing i.
    Mask right_neighbors(int i) const { return right_[i]; }
    Mask left_neighbors(int i) const { return left_[i]; }
    Mask neighbors(int i) const { return right_[i] | left_[i]; }

    bool crosses(int a, int b) const { return (neighbors(a) >> b) & 1; }
    // a nests over b
    bool nests_over(int a, int b) const {
        return chords_[a].source < chords_[b].source && chords_[b].sink < chords_[a].sink;
    }

    friend bool operator==(const ChordDiagram& a, const ChordDiagram& b) {
        return a.partner_ == b.partner_;
    }
    friend auto operator<=>(const ChordDiagram& a, const ChordDiagram& b) {
        return a.partner_ <=> b.partner_;
    }

private:
    void build();

    std::vector<std::uint8_t> partner_;
    std::vector<std::uint8_t> chord_at_;
    std::vector<Chord> chords_;
    std::vector<Mask> right_;
    std::vector<Mask> left_;
};

struct DirectedIntersectionGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> arcs;  // (a, b) with a < b
};

int crossings(const ChordDiagram& c);
int nestings(const ChordDiagram& c);
int disjoint_pairs(const ChordDiagram& c);
DirectedIntersectionGraph intersection_graph(const ChordDiagram& c);

ChordDiagram concatenate(const ChordDiagram& a, const ChordDiagram& b);
ChordDiagram induced_subdiagram(const ChordDiagram& c, Mask chords);
ChordDiagram induced_subdiagram(const ChordDiagram& c, const std::vector<int>& chords);
// Chords of c as a mask, listed in standard order.
std::vector<int> mask_to_list(Mask m);
Mask list_to_mask(const std::vector<int>& v);

std::string to_text(const ChordDiagram& c);
ChordDiagram parse_text(std::string_view s);

nlohmann::json to_json(const ChordDiagram& c);
ChordDiagram diagram_from_json(const nlohmann::json& j);

// Endpoint sequence: chord index at each point.
std::vector<int> label_sequence(const ChordDiagram& c);

}  // namespace chord
