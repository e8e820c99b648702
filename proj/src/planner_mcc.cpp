#include "owp/planner_mcc.hpp"

#include <algorithm>
#include <numeric>

namespace owp {

std::vector<Clique> mcc(const PVGraph& g) {
    const int m = (int)g.tris.size();
    for (int i = 0; i < m; ++i)
        if (g.empty_vis[i])
            throw std::runtime_error("mcc: triangle " + std::to_string(i) +
                                     " has an empty visibility area (shrink R)");

    std::vector<char> remaining(m, 1);
    int left = m;
    std::vector<Clique> cliques;
    while (left > 0) {
        // ascending remaining-degree order, ties by triangle id
        std::vector<int> order;
        order.reserve(left);
        for (int i = 0; i < m; ++i)
            if (remaining[i]) order.push_back(i);
        std::vector<int> deg(m, 0);
        for (int i : order)
            for (int j : order)
                if (g.adj[i][j]) ++deg[i];
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return deg[a] != deg[b] ? deg[a] < deg[b] : a < b; });

        Clique c;
        for (int cand : order) {
            bool clique = true;
            for (int mem : c.members)
                if (!g.adj[cand][mem]) {
                    clique = false;
                    break;
                }
            if (!clique) continue;
            const Region next_vis =
                c.members.empty() ? g.vis[cand]
                                  : region_boolean(BoolOp::Intersect, c.vis, g.vis[cand], g.cfg);
            if (next_vis.area() <= g.cfg.eps_area) continue;
            c.members.push_back(cand);
            c.vis = next_vis;
        }
        for (int mem : c.members) {
            remaining[mem] = 0;
            --left;
        }
        cliques.push_back(std::move(c));
    }
    return cliques;
}

Deployment place_aps(const std::vector<Clique>& cliques, const Layout& l, double r,
                     const GeomConfig& cfg) {
    Deployment d;
    d.method = "mcc";
    d.r = r;
    for (std::size_t j = 0; j < cliques.size(); ++j) {
        if (cliques[j].vis.empty())
            throw std::runtime_error("place_aps: clique " + std::to_string(j) +
                                     " has empty visibility");
        const Point ap = representative_point(cliques[j].vis, cfg);
        if (locate_point(ap, l, cfg.eps_geom) == PointLocation::Outside)
            throw std::runtime_error("place_aps: representative point escaped the layout");
        d.aps.push_back(ap);
        d.source.push_back((int)j);
    }
    return d;
}

CoverageReport verify_coverage(const Deployment& d, const Layout& l, double r,
                               const GeomConfig& cfg, double eps_cov) {
    std::vector<Region> vis;
    for (const Point& ap : d.aps) vis.push_back(visibility_area_point(ap, l, r, cfg));
    const Region covered = region_union_all(vis, cfg);
    const Region layout_region = Region::from_ring(l.vertices());
    CoverageReport rep;
    rep.outage_region = region_boolean(BoolOp::Difference, layout_region, covered, cfg);
    rep.outage_area = rep.outage_region.area();
    rep.outage_fraction = rep.outage_area / l.area();
    rep.covered = rep.outage_area <= eps_cov;
    return rep;
}

} // namespace owp
