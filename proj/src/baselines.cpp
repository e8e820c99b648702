#include "owp/baselines.hpp"

#include <algorithm>
#include <map>

namespace owp {

namespace {

std::vector<Point> lattice_points(const Layout& l, double r, double ox, double oy,
                                  double rot) {
    // triangular lattice of hexagon centers, circumradius r
    const double sx = std::sqrt(3.0) * r; // in-row spacing
    const double sy = 1.5 * r;            // row spacing
    Point lo, hi;
    l.bbox(lo, hi);
    const Point c{0.5 * (lo.x + hi.x), 0.5 * (lo.y + hi.y)};
    const double radius = 0.5 * dist(lo, hi) + sx;
    const double cr = std::cos(rot), sr = std::sin(rot);
    std::vector<Point> pts;
    const int ny = (int)std::ceil(radius / sy) + 1;
    const int nx = (int)std::ceil(radius / sx) + 1;
    for (int j = -ny; j <= ny; ++j)
        for (int i = -nx; i <= nx; ++i) {
            const double lx = i * sx + (j & 1 ? 0.5 * sx : 0.0) + ox;
            const double ly = j * sy + oy;
            const Point p{c.x + lx * cr - ly * sr, c.y + lx * sr + ly * cr};
            if (locate_point(p, l, 1e-9) != PointLocation::Outside) pts.push_back(p);
        }
    return pts;
}

double outage_of(const std::vector<Point>& aps, const Layout& l, double r,
                 const GeomConfig& cfg, Region* outage_out) {
    std::vector<Region> vis;
    for (const Point& ap : aps) vis.push_back(visibility_area_point(ap, l, r, cfg));
    const Region covered = region_union_all(vis, cfg);
    Region outage =
        region_boolean(BoolOp::Difference, Region::from_ring(l.vertices()), covered, cfg);
    const double area = outage.area();
    if (outage_out) *outage_out = std::move(outage);
    return area;
}

} // namespace

HexResult hex_deploy(const Layout& l, double r, const HexSearchConfig& hcfg,
                     const GeomConfig& cfg) {
    if (r <= 0.0) throw std::domain_error("hex_deploy: range must be positive");
    const int steps = std::max(hcfg.offset_steps, 4);
    const double sx = std::sqrt(3.0) * r;
    const double sy = 1.5 * r;

    std::vector<Point> best_aps;
    double best_outage = std::numeric_limits<double>::infinity();
    // lexicographic (rotation, offset) argmin keeps the search deterministic
    for (double rot : hcfg.rotations) {
        for (int a = 0; a < steps; ++a)
            for (int b = 0; b < steps; ++b) {
                const double ox = sx * a / steps;
                const double oy = sy * b / steps;
                std::vector<Point> aps = lattice_points(l, r, ox, oy, rot);
                const double outage = outage_of(aps, l, r, cfg, nullptr);
                if (outage < best_outage - 1e-12) {
                    best_outage = outage;
                    best_aps = std::move(aps);
                }
            }
    }

    HexResult res;
    res.dep.method = "hex";
    res.dep.r = r;
    res.dep.aps = std::move(best_aps);
    res.dep.source.assign(res.dep.aps.size(), -1);
    res.cov = verify_coverage(res.dep, l, r, cfg);
    return res;
}

Deployment hexplus_deploy(const Layout& l, double r, const HexSearchConfig& hcfg,
                          const GeomConfig& cfg) {
    HexResult hex = hex_deploy(l, r, hcfg, cfg);
    Deployment d = hex.dep;
    d.method = "hexplus";
    Region outage = hex.cov.outage_region;

    double pitch = hcfg.candidate_pitch > 0.0 ? hcfg.candidate_pitch : r / 4.0;
    std::map<std::pair<long long, long long>, Region> vis_cache;

    int halvings = 0;
    while (outage.area() > kEpsCoverage) {
        Point lo, hi;
        outage.bbox(lo, hi);
        lo.x -= r;
        lo.y -= r;
        hi.x += r;
        hi.y += r;
        Point llo, lhi;
        l.bbox(llo, lhi);
        lo.x = std::max(lo.x, llo.x);
        lo.y = std::max(lo.y, llo.y);
        hi.x = std::min(hi.x, lhi.x);
        hi.y = std::min(hi.y, lhi.y);

        Point best_cand;
        double best_gain = 0.0;
        for (double gx = lo.x; gx <= hi.x + 1e-12; gx += pitch)
            for (double gy = lo.y; gy <= hi.y + 1e-12; gy += pitch) {
                const Point cand{gx, gy};
                if (locate_point(cand, l, cfg.eps_geom) == PointLocation::Outside) continue;
                const std::pair<long long, long long> key{std::llround(gx * 1e9),
                                                          std::llround(gy * 1e9)};
                auto it = vis_cache.find(key);
                if (it == vis_cache.end())
                    it = vis_cache.emplace(key, visibility_area_point(cand, l, r, cfg)).first;
                const double gain =
                    region_boolean(BoolOp::Intersect, outage, it->second, cfg).area();
                if (gain > best_gain + 1e-12) {
                    best_gain = gain;
                    best_cand = cand;
                }
            }
        if (best_gain <= cfg.eps_area) {
            if (++halvings > 4)
                throw std::runtime_error("hexplus_deploy: no candidate reduces the outage");
            pitch *= 0.5;
            continue;
        }
        d.aps.push_back(best_cand);
        d.source.push_back(-1);
        const std::pair<long long, long long> key{std::llround(best_cand.x * 1e9),
                                                  std::llround(best_cand.y * 1e9)};
        outage = region_boolean(BoolOp::Difference, outage, vis_cache.at(key), cfg);
    }
    return d;
}

} // namespace owp
