#pragma once

#include "chord/diagram.hpp"

namespace fx {
using chord::ChordDiagram;
using chord::parse_text;

inline const ChordDiagram Ca = parse_text("(1,2)");
inline const ChordDiagram Cb = parse_text("(1,3)(2,4)");
inline const ChordDiagram Cc = parse_text("(1,2)(3,4)");
inline const ChordDiagram Cd = parse_text("(1,4)(2,6)(3,5)");
inline const ChordDiagram Ce = parse_text("(1,5)(2,4)(3,6)");
inline const ChordDiagram Cf = parse_text("(1,3)(2,5)(4,6)");
inline const ChordDiagram K3 = parse_text("(1,4)(2,5)(3,6)");
inline const ChordDiagram Cg = parse_text("(1,3)(2,7)(4,6)(5,8)");
inline const ChordDiagram N2 = parse_text("(1,4)(2,3)");
}  // namespace fx
