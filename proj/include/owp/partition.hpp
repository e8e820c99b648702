#pragma once

#include "owp/geometry.hpp"

namespace owp {

struct Triangle {
    Point a, b, c; // CCW
    int id = -1;

    double area() const { return orient_area(a, b, c); }
    double largest_side() const;
    Point centroid() const { return {(a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0}; }
};

struct Partition {
    std::vector<Triangle> triangles;
    double R_used = std::numeric_limits<double>::infinity();

    double total_area() const;
};

// Ear-clipping triangulation; exactly n-2 triangles, lowest-index ear first.
Partition triangulate(const Layout& l);

// Def.-4 refinement: bisect the largest side of any oversized triangle at
// its midpoint, splitting the neighbor across that side as well so the
// mesh stays conforming; stops when every side is <= R.
Partition hyper_triangulate(const Layout& l, double R);

enum class RangeMode { Access, Connectivity };

// R = r satisfies all three constraints (sqrt(3)r, r, 2r) at once.
double default_R(double r, RangeMode mode = RangeMode::Access);

} // namespace owp
