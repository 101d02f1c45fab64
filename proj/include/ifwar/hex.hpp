#pragma once

#include <array>
#include <utility>
#include <vector>

namespace ifwar {

/// Axial hex coordinate (pointy-top). File storage and user-facing cell
/// numbering use odd-r offset coordinates (col, row); conversions below.
struct Hex {
    int q = 0;
    int r = 0;
    friend bool operator==(const Hex&, const Hex&) = default;
};

Hex hex_from_offset(int col, int row);
std::pair<int, int> hex_to_offset(Hex h);  // (col, row)

int hex_distance(Hex a, Hex b);

/// Direction indices 0..5: E, NE, NW, W, SW, SE.
Hex hex_neighbor(Hex h, int direction);
std::array<Hex, 6> hex_neighbors(Hex h);

/// Hexes strictly between a and b on the straight segment (endpoints
/// excluded). Symmetric: the set for (a,b) equals the set for (b,a).
std::vector<Hex> hex_line_between(Hex a, Hex b);

}  // namespace ifwar
