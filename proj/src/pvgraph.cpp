#include "owp/pvgraph.hpp"

#include <sstream>

namespace owp {

const Region& VisibilityCache::at(Point p) {
    const std::pair<long long, long long> key{std::llround(p.x * 1e9),
                                              std::llround(p.y * 1e9)};
    auto it = cache_.find(key);
    if (it == cache_.end()) {
        auto region = std::make_unique<Region>(visibility_area_point(p, *layout_, r_, cfg_));
        it = cache_.emplace(key, std::move(region)).first;
    }
    return *it->second;
}

Region visibility_area_polygon(const Triangle& p, const Layout& l, double r,
                               VisibilityCache& cache) {
    const GeomConfig& cfg = cache.config();
    Region v = region_boolean(BoolOp::Intersect, cache.at(p.a), cache.at(p.b), cfg);
    if (v.empty()) return v;
    (void)l;
    return region_boolean(BoolOp::Intersect, v, cache.at(p.c), cfg);
}

int PVGraph::degree(int i) const {
    int d = 0;
    for (char a : adj[i]) d += a != 0;
    return d;
}

bool PVGraph::any_empty() const {
    for (char e : empty_vis)
        if (e) return true;
    return false;
}

PVGraph build_pv_graph(const Partition& part, const Layout& l, double r,
                       const GeomConfig& cfg) {
    PVGraph g;
    g.layout = &l;
    g.r = r;
    g.cfg = cfg;
    g.tris = part.triangles;
    const std::size_t m = g.tris.size();

    VisibilityCache cache(l, r, cfg);
    g.vis.reserve(m);
    g.empty_vis.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        g.vis.push_back(visibility_area_polygon(g.tris[i], l, r, cache));
        if (g.vis[i].empty()) g.empty_vis[i] = 1;
    }

    std::vector<std::pair<Point, Point>> boxes(m);
    for (std::size_t i = 0; i < m; ++i)
        if (!g.vis[i].empty()) g.vis[i].bbox(boxes[i].first, boxes[i].second);

    g.adj.assign(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        if (g.empty_vis[i]) continue;
        for (std::size_t j = i + 1; j < m; ++j) {
            if (g.empty_vis[j]) continue;
            const auto& [alo, ahi] = boxes[i];
            const auto& [blo, bhi] = boxes[j];
            if (alo.x > bhi.x || blo.x > ahi.x || alo.y > bhi.y || blo.y > ahi.y)
                continue;
            const Region inter = region_boolean(BoolOp::Intersect, g.vis[i], g.vis[j], cfg);
            if (inter.area() > cfg.eps_area) g.adj[i][j] = g.adj[j][i] = 1;
        }
    }
    return g;
}

Region clique_visibility(const std::vector<int>& members, const PVGraph& g) {
    if (members.empty()) return {};
    Region acc;
    bool first = true;
    for (int id : members) {
        if (id < 0 || id >= (int)g.vis.size())
            throw std::domain_error("clique_visibility: unknown triangle id");
        if (first) {
            acc = g.vis[id];
            first = false;
        } else {
            acc = region_boolean(BoolOp::Intersect, acc, g.vis[id], g.cfg);
        }
        if (acc.empty()) break;
    }
    return acc;
}

std::string pv_graph_adjacency_text(const PVGraph& g) {
    std::ostringstream os;
    for (std::size_t i = 0; i < g.adj.size(); ++i) {
        os << i;
        for (std::size_t j = 0; j < g.adj.size(); ++j)
            if (g.adj[i][j]) os << ' ' << j;
        os << '\n';
    }
    return os.str();
}

} // namespace owp
