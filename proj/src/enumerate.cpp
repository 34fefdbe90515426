#include "chord/enumerate.hpp"

namespace chord {

std::vector<ChordDiagram> all_diagrams(int n) {
    std::vector<ChordDiagram> out;
    for_each_diagram(n, [&](const ChordDiagram& c) { out.push_back(c); });
    return out;
}

int default_jobs() {
    unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 1 : static_cast<int>(h);
}

}  // namespace chord
