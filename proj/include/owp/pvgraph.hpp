#pragma once

#include "owp/partition.hpp"

#include <map>
#include <memory>

namespace owp {

// Shared cache of vertex visibility areas, keyed by quantized position.
// Hyper-triangulation vertices are heavily shared between triangles.
class VisibilityCache {
public:
    VisibilityCache(const Layout& l, double r, GeomConfig cfg)
        : layout_(&l), r_(r), cfg_(cfg) {}

    const Region& at(Point p);
    const GeomConfig& config() const { return cfg_; }

private:
    const Layout* layout_;
    double r_;
    GeomConfig cfg_;
    std::map<std::pair<long long, long long>, std::unique_ptr<Region>> cache_;
};

// V(p): intersection of the three vertex visibility areas.
Region visibility_area_polygon(const Triangle& p, const Layout& l, double r,
                               VisibilityCache& cache);

struct PVGraph {
    const Layout* layout = nullptr;
    double r = 0.0;
    GeomConfig cfg;
    std::vector<Triangle> tris;
    std::vector<Region> vis;            // V(p_i)
    std::vector<std::vector<char>> adj; // symmetric, irreflexive
    std::vector<char> empty_vis;        // flagged nodes with V(p_i) == empty

    int degree(int i) const;
    bool any_empty() const;
};

PVGraph build_pv_graph(const Partition& part, const Layout& l, double r,
                       const GeomConfig& cfg = {});

Region clique_visibility(const std::vector<int>& members, const PVGraph& g);

// Adjacency-list text dump (one line per node: id, neighbor ids).
std::string pv_graph_adjacency_text(const PVGraph& g);

} // namespace owp
