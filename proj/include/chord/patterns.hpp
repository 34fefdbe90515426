#pragma once

#include <string>
#include <vector>

#include "chord/diagram.hpp"

namespace chord {

ChordDiagram complete_diagram(int k);
ChordDiagram nesting_diagram(int k);

// Every size-m diagram whose intersection graph is an induced m-cycle.
std::vector<ChordDiagram> cycle_realizations(int m);
ChordDiagram top_cycle(int m);
ChordDiagram bottom_cycle(int m);

// Vertex sets of the induced cycles (length >= 3) of the intersection graph.
std::vector<Mask> induced_cycles(const ChordDiagram& c);
// For an induced cycle on `cycle`: is its realization a top / bottom cycle.
bool is_top_realization(const ChordDiagram& c, Mask cycle);
bool is_bottom_realization(const ChordDiagram& c, Mask cycle);

bool contains_pattern(const ChordDiagram& c, const ChordDiagram& p);
bool contains_any_top_cycle(const ChordDiagram& c);
bool contains_any_bottom_cycle(const ChordDiagram& c);

// sigma is a permutation of 1..k in one-line notation.
ChordDiagram permutation_diagram(const std::vector<int>& sigma);
bool is_permutation_diagram(const ChordDiagram& c);
bool is_shifted_permutation_diagram(const ChordDiagram& c);

struct PatternClass {
    enum class Kind {
        All,
        TopCycleFree,
        BottomCycleFree,
        TriangleFree,
        Tree,
        Chordal,
        Bipartite,
        CompleteFree,
        NestingFree,
        Noncrossing,
        Nonnesting,
        PermFree,
    };
    Kind kind = Kind::All;
    int k = 0;
    std::vector<int> perm;

    std::string name() const;
    static PatternClass parse(const std::string& name);
    // Every forbidden pattern of size <= max_size.
    std::vector<ChordDiagram> forbidden(int max_size) const;
    // True when every forbidden pattern is connected.
    bool connected_patterns() const;
};

bool in_class(const ChordDiagram& c, const PatternClass& cls);

// Names accepted by PatternClass::parse for the built-in classes.
std::vector<std::string> builtin_class_names();

}  // namespace chord
