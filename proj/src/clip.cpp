// Region booleans on top of Boost.Polygon's integer scanline, with
// snap-rounding at 1e-6 m resolution.
#include "owp/geometry.hpp"

#include <boost/polygon/polygon.hpp>

namespace {
// kept outside namespace owp: owp's Point operators would otherwise
// shadow the polygon-set operators during unqualified lookup
using namespace boost::polygon::operators;
using ClipSet = boost::polygon::polygon_set_data<int>;

ClipSet clip_apply(int op, const ClipSet& a, const ClipSet& b) {
    switch (op) {
    case 0: return a & b;
    case 1: return a | b;
    default: return a - b;
    }
}

} // namespace

namespace owp {
namespace {

namespace bp = boost::polygon;
using BPoint = bp::point_data<int>;
using BPoly = bp::polygon_data<int>;
using BPolyH = bp::polygon_with_holes_data<int>;
using BSet = bp::polygon_set_data<int>;

constexpr double kScale = 1e6;
constexpr double kMaxCoord = 2000.0; // int32 headroom at kScale

int to_fixed(double v) {
    if (!std::isfinite(v) || std::abs(v) > kMaxCoord)
        throw std::invalid_argument("coordinate outside clipping range");
    return (int)std::llround(v * kScale);
}

BSet to_set(const Region& r) {
    BSet s;
    std::vector<BPoint> pts;
    for (const auto& ring : r.polys) {
        pts.clear();
        pts.reserve(ring.size());
        for (const Point& p : ring) pts.emplace_back(to_fixed(p.x), to_fixed(p.y));
        BPoly poly;
        bp::set_points(poly, pts.begin(), pts.end());
        s.insert(poly);
    }
    return s;
}

std::vector<Point> from_bpoly(const BPoly& poly) {
    std::vector<Point> ring;
    ring.reserve(poly.size());
    for (auto it = poly.begin(); it != poly.end(); ++it)
        ring.push_back({it->x() / kScale, it->y() / kScale});
    // drop closing duplicate if present
    if (ring.size() > 1 && dist(ring.front(), ring.back()) < 1e-12) ring.pop_back();
    if (ring_area(ring) < 0.0) std::reverse(ring.begin(), ring.end());
    return ring;
}

Region from_set(const BSet& s, const GeomConfig& cfg) {
    std::vector<BPolyH> out;
    s.get(out);
    bool holes = false;
    for (const auto& p : out)
        if (p.begin_holes() != p.end_holes()) {
            holes = true;
            break;
        }
    Region r;
    if (!holes) {
        for (const auto& p : out) {
            std::vector<Point> ring;
            ring.reserve(p.size());
            for (auto it = p.begin(); it != p.end(); ++it)
                ring.push_back({it->x() / kScale, it->y() / kScale});
            if (ring.size() > 1 && dist(ring.front(), ring.back()) < 1e-12) ring.pop_back();
            if (ring.size() < 3) continue;
            if (ring_area(ring) < 0.0) std::reverse(ring.begin(), ring.end());
            if (ring_area(ring) < cfg.eps_area) continue; // sliver
            r.polys.push_back(std::move(ring));
        }
    } else {
        // fracture holes into disjoint hole-free pieces
        std::vector<BPoly> traps;
        bp::get_trapezoids(traps, s);
        for (const auto& t : traps) {
            auto ring = from_bpoly(t);
            if (ring.size() < 3) continue;
            if (ring_area(ring) < cfg.eps_area) continue;
            r.polys.push_back(std::move(ring));
        }
    }
    if (r.area() < cfg.eps_area) return {};
    return r;
}

} // namespace

Region region_boolean(BoolOp op, const Region& a, const Region& b, const GeomConfig& cfg) {
    if (op == BoolOp::Intersect && (a.empty() || b.empty())) return {};
    if (a.empty()) return op == BoolOp::Union ? b : Region{};
    if (b.empty()) return a;

    // cheap bounding-box rejection for intersections
    if (op == BoolOp::Intersect) {
        Point alo, ahi, blo, bhi;
        a.bbox(alo, ahi);
        b.bbox(blo, bhi);
        if (alo.x > bhi.x || blo.x > ahi.x || alo.y > bhi.y || blo.y > ahi.y) return {};
    }

    BSet sa = to_set(a);
    BSet sb = to_set(b);
    const int code = op == BoolOp::Intersect ? 0 : op == BoolOp::Union ? 1 : 2;
    return from_set(clip_apply(code, sa, sb), cfg);
}

// Scanline union over batches of inputs; one pass is far cheaper than
// folding region_boolean(Union, ...) pairwise, but very large batches of
// mutually overlapping polygons can blow up the intersection validation,
// so the inputs are cleaned every kUnionBatch parts and the cleaned
// intermediates merged the same way.
Region region_union_all(const std::vector<Region>& parts, const GeomConfig& cfg) {
    constexpr std::size_t kUnionBatch = 48;

    std::vector<Region> level;
    level.reserve(parts.size());
    for (const Region& r : parts)
        if (!r.empty()) level.push_back(r);
    if (level.empty()) return {};

    while (level.size() > 1) {
        std::vector<Region> next;
        next.reserve(level.size() / kUnionBatch + 1);
        for (std::size_t i = 0; i < level.size(); i += kUnionBatch) {
            BSet s;
            for (std::size_t j = i; j < std::min(i + kUnionBatch, level.size()); ++j) {
                const BSet one = to_set(level[j]);
                s.insert(one);
            }
            next.push_back(from_set(s, cfg));
        }
        level.swap(next);
    }
    return level.front();
}

} // namespace owp
