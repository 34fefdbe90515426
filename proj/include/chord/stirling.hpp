#pragma once

#include <string>
#include <vector>

#include "chord/diagram.hpp"

namespace chord {

using StirlingWord = std::vector<int>;

bool is_stirling(const StirlingWord& w);
std::string word_to_text(const StirlingWord& w);
StirlingWord parse_word(const std::string& s);

StirlingWord zeta(const ChordDiagram& c);
ChordDiagram zeta_inverse(const StirlingWord& w);

// Vertex v carries label v; vertex 0 is the root.
struct IncreasingOrderedTree {
    std::vector<std::vector<int>> children{{}};
    int size() const { return static_cast<int>(children.size()); }
    friend bool operator==(const IncreasingOrderedTree&, const IncreasingOrderedTree&) = default;
};

void validate_tree(const IncreasingOrderedTree& t);
std::string tree_to_text(const IncreasingOrderedTree& t);  // e.g. 0(1(2) 3)

StirlingWord eta(const IncreasingOrderedTree& t);
IncreasingOrderedTree eta_inverse(const StirlingWord& w);

IncreasingOrderedTree theta(const ChordDiagram& c);
ChordDiagram theta_inverse(const IncreasingOrderedTree& t);

// Word -> tree -> 1-terminal diagram -> diagram.
ChordDiagram stirling_via_trees(const StirlingWord& w);

// All increasing ordered trees with n vertices.
std::vector<IncreasingOrderedTree> all_trees(int n);
// All Stirling words over 1..n.
std::vector<StirlingWord> all_stirling_words(int n);

}  // namespace chord
