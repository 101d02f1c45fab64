#include "ifwar/hex.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace ifwar {

namespace {

constexpr std::array<Hex, 6> kDirections = {{
    {1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1},
}};

Hex cube_round(double q, double r) {
    const double s = -q - r;
    double rq = std::round(q);
    double rr = std::round(r);
    double rs = std::round(s);
    const double dq = std::abs(rq - q);
    const double dr = std::abs(rr - r);
    const double ds = std::abs(rs - s);
    if (dq > dr && dq > ds) {
        rq = -rr - rs;
    } else if (dr > ds) {
        rr = -rq - rs;
    }
    return {static_cast<int>(rq), static_cast<int>(rr)};
}

}  // namespace

Hex hex_from_offset(int col, int row) {
    return {col - (row - (row & 1)) / 2, row};
}

std::pair<int, int> hex_to_offset(Hex h) {
    return {h.q + (h.r - (h.r & 1)) / 2, h.r};
}

int hex_distance(Hex a, Hex b) {
    const int dq = a.q - b.q;
    const int dr = a.r - b.r;
    const int ds = -dq - dr;
    return (std::abs(dq) + std::abs(dr) + std::abs(ds)) / 2;
}

Hex hex_neighbor(Hex h, int direction) {
    if (direction < 0 || direction > 5) {
        throw std::invalid_argument("hex direction must be in 0..5");
    }
    return {h.q + kDirections[direction].q, h.r + kDirections[direction].r};
}

std::array<Hex, 6> hex_neighbors(Hex h) {
    std::array<Hex, 6> out;
    for (int d = 0; d < 6; ++d) out[d] = hex_neighbor(h, d);
    return out;
}

std::vector<Hex> hex_line_between(Hex a, Hex b) {
    const int n = hex_distance(a, b);
    std::vector<Hex> out;
    if (n <= 1) return out;
    out.reserve(static_cast<std::size_t>(n - 1));
    // Same epsilon nudge on both endpoints keeps the sampled points, and
    // therefore the rounded cells, identical when a and b are swapped.
    const double aq = a.q + 1e-6, ar = a.r - 2e-6;
    const double bq = b.q + 1e-6, br = b.r - 2e-6;
    for (int i = 1; i < n; ++i) {
        const double t = static_cast<double>(i) / n;
        out.push_back(cube_round(aq + (bq - aq) * t, ar + (br - ar) * t));
    }
    return out;
}

}  // namespace ifwar
