#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace owp {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double dist(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Signed area of the triangle (a,b,c); > 0 for counter-clockwise.
double orient_area(Point a, Point b, Point c);

// Distance from p to the closed segment [a,b].
double point_segment_distance(Point p, Point a, Point b);

struct GeomConfig {
    double eps_geom = 1e-9;   // coincidence tolerance [m]
    double eps_area = 1e-6;   // empty-region threshold [m^2]
    int circle_segments = 64; // inscribed k-gon approximating the range disk
    // Connection-region sampling: 0 = auto (min(r/10, shortest edge / 4)),
    // capped so that at most cr_max_samples sample points are used.
    double cr_sample_pitch = 0.0;
    int cr_max_samples = 192;
    double cr_range_hint = 0.0; // planning range r used by the auto pitch
};

class Layout {
public:
    Layout() = default;
    Layout(std::string name, std::vector<Point> vertices);

    const std::string& name() const { return name_; }
    const std::vector<Point>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    double area() const;
    double shortest_edge() const;
    void bbox(Point& lo, Point& hi) const;
    double diameter() const; // bounding-box diagonal

private:
    void validate() const;
    std::string name_;
    std::vector<Point> verts_;
};

// A planar area stored as pairwise interior-disjoint simple polygons
// (CCW rings, no holes; boolean results with holes are fractured).
struct Region {
    std::vector<std::vector<Point>> polys;

    bool empty() const { return polys.empty(); }
    double area() const;
    void bbox(Point& lo, Point& hi) const;

    static Region from_ring(std::vector<Point> ring);
};

enum class PointLocation { Inside, Boundary, Outside };

// Location of p relative to a closed simple ring; distance to the
// boundary below eps counts as Boundary.
PointLocation locate_point(Point p, const std::vector<Point>& ring, double eps);

PointLocation locate_point(Point p, const Layout& l, double eps);

bool region_contains(const Region& r, Point p, double eps);

// Closed-set test: true iff the segment PQ lies entirely in closure(L).
// Grazing contact with the boundary counts as inside.
bool segment_inside(Point p, Point q, const Layout& l, const GeomConfig& cfg = {});

// Range-unconstrained visibility polygon of X (angular sweep, star-shaped).
Region visibility_polygon(Point x, const Layout& l, const GeomConfig& cfg = {});

// Visibility polygon clipped to the inscribed circle_segments-gon of the
// radius-r disk around X (conservative: result is a subset of the true area).
Region visibility_area_point(Point x, const Layout& l, double r,
                             const GeomConfig& cfg = {});

enum class BoolOp { Intersect, Union, Difference };

Region region_boolean(BoolOp op, const Region& a, const Region& b,
                      const GeomConfig& cfg = {});

// Union of many regions in one scanline pass.
Region region_union_all(const std::vector<Region>& parts, const GeomConfig& cfg = {});

// Union of visibility polygons over a sample set of A (vertices plus an
// interior grid); under-approximates the true connection region.
Region connection_region(const Region& a, const Layout& l,
                         const GeomConfig& cfg = {});

// Representative interior point: centroid of the largest polygon when it
// falls inside the region, else a grid-refined pole of inaccessibility.
Point representative_point(const Region& r, const GeomConfig& cfg = {});

Point polygon_centroid(const std::vector<Point>& ring);

double ring_area(const std::vector<Point>& ring);

} // namespace owp
