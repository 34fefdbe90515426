#pragma once

#include <vector>

#include "chord/diagram.hpp"

namespace chord {

ChordDiagram psi(const ChordDiagram& t);
ChordDiagram chi(const ChordDiagram& c);

struct Part {
    ChordDiagram diagram;
    std::vector<int> block;  // 1-based positions in [1, j], ascending
    friend bool operator==(const Part&, const Part&) = default;
};
using Parts = std::vector<Part>;

Parts alpha(const ChordDiagram& c);
ChordDiagram beta(const Parts& parts);
// Throws DiagramError when parts violate the decomposition invariants.
void validate_parts(const Parts& parts);

struct RootShare {
    ChordDiagram root_side;   // contains the root
    ChordDiagram outer;       // outermost component after removing the root
    int index = 0;            // gap of `outer`, 1..2|outer|-1
};
RootShare root_share_decompose(const ChordDiagram& c);
ChordDiagram root_share_compose(const ChordDiagram& root_side, const ChordDiagram& outer, int index);

}  // namespace chord
