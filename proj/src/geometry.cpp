#include "owp/geometry.hpp"

#include <algorithm>
#include <limits>

namespace owp {

double orient_area(Point a, Point b, Point c) {
    return 0.5 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

double point_segment_distance(Point p, Point a, Point b) {
    const double l2 = dot(b - a, b - a);
    if (l2 <= 0.0) return dist(p, a);
    double t = dot(p - a, b - a) / l2;
    t = std::clamp(t, 0.0, 1.0);
    return dist(p, a + t * (b - a));
}

double ring_area(const std::vector<Point>& ring) {
    double s = 0.0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = ring[i];
        const Point& q = ring[(i + 1) % n];
        s += p.x * q.y - q.x * p.y;
    }
    return 0.5 * s;
}

Point polygon_centroid(const std::vector<Point>& ring) {
    double a = 0.0, cx = 0.0, cy = 0.0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = ring[i];
        const Point& q = ring[(i + 1) % n];
        const double w = p.x * q.y - q.x * p.y;
        a += w;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    if (std::abs(a) < 1e-300) return ring.empty() ? Point{} : ring.front();
    return {cx / (3.0 * a), cy / (3.0 * a)};
}

// ---------------------------------------------------------------- Layout

namespace {

bool segments_properly_cross(Point a, Point b, Point c, Point d, double eps) {
    const double d1 = orient_area(c, d, a);
    const double d2 = orient_area(c, d, b);
    const double d3 = orient_area(a, b, c);
    const double d4 = orient_area(a, b, d);
    // scale-aware strictness
    const double s1 = dist(c, d) * eps, s2 = dist(a, b) * eps;
    return ((d1 > s1 && d2 < -s1) || (d1 < -s1 && d2 > s1)) &&
           ((d3 > s2 && d4 < -s2) || (d3 < -s2 && d4 > s2));
}

} // namespace

Layout::Layout(std::string name, std::vector<Point> vertices)
    : name_(std::move(name)), verts_(std::move(vertices)) {
    validate();
}

void Layout::validate() const {
    const double eps = 1e-9;
    if (verts_.size() < 3)
        throw std::invalid_argument("layout '" + name_ + "': fewer than 3 vertices");
    for (const Point& p : verts_) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y) ||
            std::abs(p.x) > 1e6 || std::abs(p.y) > 1e6)
            throw std::invalid_argument("layout '" + name_ + "': coordinate out of bounds");
    }
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (dist(verts_[i], verts_[(i + 1) % n]) < eps)
            throw std::invalid_argument("layout '" + name_ + "': repeated consecutive vertex");
    }
    if (ring_area(verts_) <= 0.0)
        throw std::invalid_argument("layout '" + name_ + "': vertices not counter-clockwise");
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = verts_[i], b = verts_[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
            const Point c = verts_[j], d = verts_[(j + 1) % n];
            if (segments_properly_cross(a, b, c, d, eps))
                throw std::invalid_argument("layout '" + name_ + "': self-intersecting boundary");
        }
    }
}

double Layout::area() const { return ring_area(verts_); }

double Layout::shortest_edge() const {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i)
        best = std::min(best, dist(verts_[i], verts_[(i + 1) % n]));
    return best;
}

void Layout::bbox(Point& lo, Point& hi) const {
    lo = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    hi = {-lo.x, -lo.y};
    for (const Point& p : verts_) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
}

double Layout::diameter() const {
    Point lo, hi;
    bbox(lo, hi);
    return dist(lo, hi);
}

// ---------------------------------------------------------------- Region

double Region::area() const {
    double s = 0.0;
    for (const auto& ring : polys) s += ring_area(ring);
    return s;
}

void Region::bbox(Point& lo, Point& hi) const {
    lo = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    hi = {-lo.x, -lo.y};
    for (const auto& ring : polys)
        for (const Point& p : ring) {
            lo.x = std::min(lo.x, p.x);
            lo.y = std::min(lo.y, p.y);
            hi.x = std::max(hi.x, p.x);
            hi.y = std::max(hi.y, p.y);
        }
}

Region Region::from_ring(std::vector<Point> ring) {
    if (ring_area(ring) < 0.0) std::reverse(ring.begin(), ring.end());
    Region r;
    r.polys.push_back(std::move(ring));
    return r;
}

// ------------------------------------------------------- point location

PointLocation locate_point(Point p, const std::vector<Point>& ring, double eps) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i)
        if (point_segment_distance(p, ring[i], ring[(i + 1) % n]) <= eps)
            return PointLocation::Boundary;
    // crossing number with a horizontal ray
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point a = ring[i], b = ring[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double xc = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (p.x < xc) inside = !inside;
        }
    }
    return inside ? PointLocation::Inside : PointLocation::Outside;
}

PointLocation locate_point(Point p, const Layout& l, double eps) {
    return locate_point(p, l.vertices(), eps);
}

bool region_contains(const Region& r, Point p, double eps) {
    for (const auto& ring : r.polys)
        if (locate_point(p, ring, eps) != PointLocation::Outside) return true;
    return false;
}

// -------------------------------------------------------- segment_inside

bool segment_inside(Point p, Point q, const Layout& l, const GeomConfig& cfg) {
    const double eps = cfg.eps_geom;
    if (locate_point(p, l, eps) == PointLocation::Outside) return false;
    if (locate_point(q, l, eps) == PointLocation::Outside) return false;
    const double len = dist(p, q);
    if (len <= eps) return true;

    // Parameters along PQ of every contact with the boundary, then test
    // the midpoint of each gap. Handles proper crossings, vertex grazing
    // and collinear overlap uniformly.
    const auto& v = l.vertices();
    const std::size_t n = v.size();
    std::vector<double> ts{0.0, 1.0};
    const Point d = q - p;
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = v[i], b = v[(i + 1) % n];
        const Point e = b - a;
        const double den = cross(d, e);
        if (std::abs(den) > eps * len * dist(a, b)) {
            const double t = cross(a - p, e) / den;
            const double u = cross(a - p, d) / den;
            if (t > -eps && t < 1.0 + eps && u > -eps && u < 1.0 + eps)
                ts.push_back(std::clamp(t, 0.0, 1.0));
        }
        // vertex within eps of PQ (covers collinear overlap endpoints)
        if (point_segment_distance(a, p, q) <= eps) {
            const double t = std::clamp(dot(a - p, d) / (len * len), 0.0, 1.0);
            ts.push_back(t);
        }
    }
    std::sort(ts.begin(), ts.end());
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        if (ts[i + 1] - ts[i] < 1e-12) continue;
        const Point mid = p + (0.5 * (ts[i] + ts[i + 1])) * d;
        if (locate_point(mid, l, eps) == PointLocation::Outside) return false;
    }
    return true;
}

// ---------------------------------------------------- visibility sweep

namespace {

// Smallest positive ray parameter at which x + t*dir meets the boundary.
double first_hit(Point x, Point dir, const std::vector<Point>& v, double eps) {
    const std::size_t n = v.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = v[i], b = v[(i + 1) % n];
        const Point e = b - a;
        const double den = cross(dir, e);
        const double elen = dist(a, b);
        if (std::abs(den) <= 1e-14 * elen) continue; // parallel
        const double t = cross(a - x, e) / den;
        const double u = cross(a - x, dir) / den;
        if (t > eps && u >= -eps / elen && u <= 1.0 + eps / elen)
            best = std::min(best, t);
    }
    return best;
}

// Origins for the sweep. Interior x is used as-is. A boundary x is
// replaced by nudged interior points: a single nudge is wrong at reflex
// vertices (the interior cone exceeds pi and no one direction covers it),
// so valid nudge directions are collected and up to three of them, spread
// across the cone, are returned; the callers union the per-origin sweeps.
std::vector<Point> interior_origins(Point x, const Layout& l, double eps) {
    // tolerate snap-rounding drift: vertices of clipped regions can land
    // a micrometer off the boundary and still denote boundary points
    if (locate_point(x, l, std::max(eps, 2e-6)) == PointLocation::Outside)
        throw std::domain_error("visibility origin outside layout");
    const auto& v = l.vertices();
    const std::size_t n = v.size();
    double bd = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
        bd = std::min(bd, point_segment_distance(x, v[i], v[(i + 1) % n]));
    if (bd > 10 * eps) return {x};

    // uniform probe directions miss interior cones narrower than their
    // 2*pi/256 spacing (needle vertices reach ~0.02 rad), so aim extra
    // probes along the incident edges and their bisector at any vertex
    // coincident with x
    std::vector<double> extra_angles;
    for (std::size_t i = 0; i < n; ++i) {
        if (dist(x, v[i]) > 10 * eps) continue;
        const Point p = v[(i + n - 1) % n];
        const Point q = v[(i + 1) % n];
        const double a1 = std::atan2(p.y - v[i].y, p.x - v[i].x);
        const double a2 = std::atan2(q.y - v[i].y, q.x - v[i].x);
        const double mid = (a1 + a2) / 2.0;
        extra_angles.insert(extra_angles.end(), {mid, mid + M_PI, a1, a2});
    }
    Point fallback{};
    double fallback_cd = 0.0;
    for (double rad : {1e-7, 1e-6, 1e-5}) {
        std::vector<int> valid;
        std::vector<Point> cand(256);
        for (int k = 0; k < 256; ++k) {
            const double a = 2.0 * M_PI * (k + 0.37) / 256.0;
            const Point c{x.x + rad * std::cos(a), x.y + rad * std::sin(a)};
            double cd = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < n; ++i)
                cd = std::min(cd, point_segment_distance(c, v[i], v[(i + 1) % n]));
            if (locate_point(c, l, 0.0) != PointLocation::Inside) continue;
            if (cd > fallback_cd) {
                fallback_cd = cd;
                fallback = c;
            }
            // clearance floor keeps the sweep numerically sane even inside
            // very narrow wedges (sharp spikes reach ~1 degree half-angle)
            if (cd > std::max(rad * 0.02, 5e-9)) {
                cand[k] = c;
                valid.push_back(k);
            }
        }
        if (valid.empty()) {
            for (double a : extra_angles) {
                const Point c{x.x + rad * std::cos(a), x.y + rad * std::sin(a)};
                if (locate_point(c, l, 0.0) != PointLocation::Inside) continue;
                double cd = std::numeric_limits<double>::infinity();
                for (std::size_t i = 0; i < n; ++i)
                    cd = std::min(cd, point_segment_distance(c, v[i], v[(i + 1) % n]));
                if (cd > fallback_cd) {
                    fallback_cd = cd;
                    fallback = c;
                }
                if (cd > std::max(rad * 0.02, 5e-9)) return {c};
            }
            continue;
        }
        std::vector<Point> out{cand[valid.front()]};
        for (int offset : {85, 171}) { // about 120 and 240 degrees away
            const int want = (valid.front() + offset) % 256;
            int best = valid.front();
            int gap = 256;
            for (int k : valid) {
                int d = std::abs(k - want);
                d = std::min(d, 256 - d);
                if (d < gap) {
                    gap = d;
                    best = k;
                }
            }
            bool dup = gap >= 43;
            for (const Point& c : out)
                if (dist(cand[best], c) < 1e-12) dup = true;
            if (!dup) out.push_back(cand[best]);
        }
        return out;
    }
    // needle-sharp corner: no direction met the clearance floor, so use
    // the best interior point seen (visibility of a sub-micron sliver tip
    // is negligible at the eps_area scale anyway)
    if (fallback_cd > 3e-9) return {fallback};
    throw std::domain_error("visibility origin has no interior neighborhood");
}

} // namespace

namespace {

Region sweep_from(Point o, const Layout& l, const GeomConfig& cfg) {
    const auto& v = l.vertices();
    const double delta = 1e-7; // angular offset straddling silhouette vertices

    std::vector<std::pair<double, Point>> hits;
    hits.reserve(3 * v.size());
    for (const Point& vert : v) {
        const double base = std::atan2(vert.y - o.y, vert.x - o.x);
        for (double ang : {base - delta, base, base + delta}) {
            const Point dir{std::cos(ang), std::sin(ang)};
            const double t = first_hit(o, dir, v, cfg.eps_geom);
            if (!std::isfinite(t)) continue;
            hits.emplace_back(ang, o + t * dir);
        }
    }
    std::sort(hits.begin(), hits.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Point> ring;
    ring.reserve(hits.size());
    for (const auto& [ang, p] : hits) {
        if (!ring.empty() && dist(ring.back(), p) < 1e-12) continue;
        ring.push_back(p);
    }
    while (ring.size() > 2 && dist(ring.front(), ring.back()) < 1e-12) ring.pop_back();
    if (ring.size() < 3) return {};
    if (ring_area(ring) < 0.0) std::reverse(ring.begin(), ring.end());
    if (ring_area(ring) < cfg.eps_area) return {};
    Region out;
    out.polys.push_back(std::move(ring));
    return out;
}

} // namespace

Region visibility_polygon(Point x, const Layout& l, const GeomConfig& cfg) {
    const std::vector<Point> origins = interior_origins(x, l, cfg.eps_geom);
    Region out = sweep_from(origins.front(), l, cfg);
    for (std::size_t i = 1; i < origins.size(); ++i)
        out = region_boolean(BoolOp::Union, out, sweep_from(origins[i], l, cfg), cfg);
    return out;
}

Region visibility_area_point(Point x, const Layout& l, double r, const GeomConfig& cfg) {
    if (r <= 0.0) throw std::domain_error("visibility range must be positive");
    Region star = visibility_polygon(x, l, cfg);
    if (star.empty()) return star;

    Point lo, hi;
    l.bbox(lo, hi);
    const double reach = std::max({dist(x, lo), dist(x, hi),
                                   dist(x, {lo.x, hi.y}), dist(x, {hi.x, lo.y})});
    const double k = cfg.circle_segments;
    if (r * std::cos(M_PI / k) >= reach) return star; // disk inactive

    std::vector<Point> disk;
    disk.reserve(cfg.circle_segments);
    for (int i = 0; i < cfg.circle_segments; ++i) {
        const double a = 2.0 * M_PI * i / k;
        disk.push_back({x.x + r * std::cos(a), x.y + r * std::sin(a)});
    }
    return region_boolean(BoolOp::Intersect, star, Region::from_ring(std::move(disk)), cfg);
}

// ------------------------------------------------------ connection region

Region connection_region(const Region& a, const Layout& l, const GeomConfig& cfg) {
    if (a.empty()) return {};

    std::vector<Point> samples;
    for (const auto& ring : a.polys)
        for (const Point& p : ring) samples.push_back(p);

    double pitch = cfg.cr_sample_pitch;
    if (pitch <= 0.0) {
        const double r = cfg.cr_range_hint > 0.0 ? cfg.cr_range_hint : l.diameter();
        pitch = std::min(r / 10.0, l.shortest_edge() / 4.0);
    }
    Point lo, hi;
    a.bbox(lo, hi);
    auto grid_count = [&](double h) {
        return (std::floor((hi.x - lo.x) / h) + 1) * (std::floor((hi.y - lo.y) / h) + 1);
    };
    while (grid_count(pitch) > cfg.cr_max_samples) pitch *= 1.5;
    for (double gx = lo.x; gx <= hi.x + 1e-12; gx += pitch)
        for (double gy = lo.y; gy <= hi.y + 1e-12; gy += pitch)
            if (region_contains(a, {gx, gy}, cfg.eps_geom)) samples.push_back({gx, gy});

    if ((int)samples.size() > cfg.cr_max_samples) {
        // deterministic thinning, keeps every k-th sample
        const std::size_t step = samples.size() / (std::size_t)cfg.cr_max_samples + 1;
        std::vector<Point> thin;
        for (std::size_t i = 0; i < samples.size(); i += step) thin.push_back(samples[i]);
        samples.swap(thin);
    }

    std::vector<Region> parts;
    parts.reserve(samples.size());
    for (const Point& s : samples) {
        // clipped-region vertices can drift off the layout; skipping them
        // only shrinks the result, which is the safe direction here
        if (locate_point(s, l, 2e-6) == PointLocation::Outside) continue;
        try {
            parts.push_back(visibility_polygon(s, l, cfg));
        } catch (const std::domain_error&) {
        }
    }
    return region_union_all(parts, cfg);
}

// ------------------------------------------------- representative point

namespace {

double region_boundary_distance(const Region& r, Point p) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& ring : r.polys) {
        const std::size_t n = ring.size();
        for (std::size_t i = 0; i < n; ++i)
            best = std::min(best, point_segment_distance(p, ring[i], ring[(i + 1) % n]));
    }
    return best;
}

} // namespace

Point representative_point(const Region& r, const GeomConfig& cfg) {
    if (r.empty()) throw std::domain_error("representative point of an empty region");
    const std::vector<Point>* largest = nullptr;
    double best_area = -1.0;
    for (const auto& ring : r.polys) {
        const double a = ring_area(ring);
        if (a > best_area) {
            best_area = a;
            largest = &ring;
        }
    }
    const Point c = polygon_centroid(*largest);
    if (locate_point(c, *largest, cfg.eps_geom) == PointLocation::Inside &&
        region_boundary_distance(r, c) > 10 * cfg.eps_geom)
        return c;

    // pole of inaccessibility by grid refinement over the largest polygon
    Point lo{largest->front()}, hi{largest->front()};
    for (const Point& p : *largest) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    Point best = c;
    double best_d = -std::numeric_limits<double>::infinity();
    double cx = 0.5 * (lo.x + hi.x), cy = 0.5 * (lo.y + hi.y);
    double hx = 0.5 * (hi.x - lo.x), hy = 0.5 * (hi.y - lo.y);
    const int grid = 8;
    for (int level = 0; level < 5; ++level) {
        for (int i = 0; i <= grid; ++i)
            for (int j = 0; j <= grid; ++j) {
                const Point p{cx - hx + 2.0 * hx * i / grid, cy - hy + 2.0 * hy * j / grid};
                if (locate_point(p, *largest, cfg.eps_geom) != PointLocation::Inside) continue;
                const double d = region_boundary_distance(r, p);
                if (d > best_d) {
                    best_d = d;
                    best = p;
                }
            }
        cx = best.x;
        cy = best.y;
        hx = 2.0 * hx / grid;
        hy = 2.0 * hy / grid;
    }
    if (best_d <= 0.0) throw std::runtime_error("degenerate region: no interior point found");
    return best;
}

} // namespace owp
