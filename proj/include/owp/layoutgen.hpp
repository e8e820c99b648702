#pragma once

#include "owp/geometry.hpp"

#include <cstdint>

namespace owp {

struct LayoutGenConfig {
    int n = 100;              // target boundary edge count
    double size = 30.0;       // bounding square side [m]
    int n_seed_points = 0;    // 0 = 10 * n
    std::uint64_t seed = 0;
    std::string name;         // default: "gen-<seed>-n<n>"
};

// Random simple polygon by inward denting of a Delaunay triangulation:
// remove boundary triangles until exactly n boundary edges remain,
// rejecting removals that would disconnect the mesh or pinch the boundary.
Layout gen_layout(const LayoutGenConfig& cfg);

} // namespace owp
