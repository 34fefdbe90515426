#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "chord/diagram.hpp"

namespace chord {

// Triangulated disk, or a single edge. Exterior vertices are listed
// counterclockwise from the root's first vertex; the root edge joins
// exterior.front() and exterior.back(). Triangles are counterclockwise.
struct Triangulation {
    int vertex_count = 2;
    std::vector<int> exterior{0, 1};
    std::vector<std::array<int, 3>> triangles;

    static Triangulation edge() { return {}; }
    bool is_edge() const { return triangles.empty(); }
    int exterior_count() const { return static_cast<int>(exterior.size()); }
    int interior_count() const { return vertex_count - exterior_count(); }

    // Counterclockwise neighbor order per vertex; for exterior vertices the
    // outer face sits between the last and first entries.
    std::vector<std::vector<int>> rotation() const;
};

std::string canonical_code(const Triangulation& t);
nlohmann::json to_json(const Triangulation& t);

struct GluedPart {
    Triangulation triangulation;
    int index = 1;  // i_l: exterior vertex where the next factor attaches
};

Triangulation join(const std::vector<GluedPart>& parts);
std::vector<GluedPart> gamma(const Triangulation& t);

Triangulation omega(const ChordDiagram& c);

}  // namespace chord
