#pragma once

#include <vector>

#include "chord/diagram.hpp"

namespace chord {

// Connected components of the intersection graph restricted to `within`,
// ordered by leftmost endpoint.
std::vector<Mask> component_masks(const ChordDiagram& c, Mask within);
// Maximal concatenation factors of the subdiagram on `within`.
struct Block {
    Mask chords;
    int first;  // first point
    int last;   // last point
};
std::vector<Block> indecomposable_blocks(const ChordDiagram& c, Mask within);

std::vector<std::vector<int>> connected_components(const ChordDiagram& c);
std::vector<std::vector<int>> indecomposable_components(const ChordDiagram& c);

bool is_connected(const ChordDiagram& c);
bool is_indecomposable(const ChordDiagram& c);

int vertex_connectivity(const ChordDiagram& c);
int edge_connectivity(const ChordDiagram& c);

struct IntersectionOrder {
    std::vector<int> label;  // chord -> 1..n
    std::vector<int> chord;  // label-1 -> chord
};
IntersectionOrder intersection_order(const ChordDiagram& c);

struct TerminalProfile {
    std::vector<int> t;  // intersection-order labels of terminal chords, ascending
    int k = 0;
    std::vector<int> gaps;  // t[j] - t[j-1], j >= 1
};
TerminalProfile terminal_profile(const ChordDiagram& c);
int first_terminal(const ChordDiagram& c);  // t1

bool is_k_terminal(const ChordDiagram& c, int k);
int terminality(const ChordDiagram& c);
bool is_one_terminal(const ChordDiagram& c);
bool is_k_terminal_minimal(const ChordDiagram& c, int k);

// First t1 chords of a connected diagram, by intersection order.
Mask head_chords(const ChordDiagram& c);

struct SourceSinkGroup {
    int chord = -1;
    int source = -1;
    std::vector<int> sink_chords;     // chords whose sinks form the run, left to right
    std::vector<Mask> attached;       // components of C minus the head attached at those sinks
    std::vector<int> points;          // every point covered, ascending
};
// One entry per head chord, in standard order.
std::vector<SourceSinkGroup> source_sink_groups(const ChordDiagram& c);

Mask traced_subdiagram(const ChordDiagram& d, int chord);

int valency(const ChordDiagram& c, int chord);

bool exists_nonnesting_induced_path(const ChordDiagram& c, int a, int b);

}  // namespace chord
