#include "owp/planner_ctc.hpp"

#include <algorithm>
#include <deque>

namespace owp {

std::vector<int> ConnectivityTree::neighbors(int i) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges) {
        if (a == i) out.push_back(b);
        if (b == i) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Region node_connection_region(const ConnectivityTree::Node& n, const Layout& l,
                              const GeomConfig& cfg) {
    if (n.collapsed) return visibility_polygon(n.point, l, cfg);
    return connection_region(n.pda, l, cfg);
}

void pda_update(ConnectivityTree& t, int root, const Layout& l, const GeomConfig& cfg) {
    if (root < 0 || root >= t.size()) throw std::domain_error("pda_update: bad root");
    // BFS from the root covers every root-to-leaf path prefix exactly once
    std::vector<char> seen(t.nodes.size(), 0);
    std::deque<int> q{root};
    seen[root] = 1;
    while (!q.empty()) {
        const int cur = q.front();
        q.pop_front();
        Region cr;
        bool cr_ready = false;
        for (int nb : t.neighbors(cur)) {
            if (seen[nb]) continue;
            seen[nb] = 1;
            if (!t.nodes[nb].collapsed) {
                if (!cr_ready) {
                    cr = node_connection_region(t.nodes[cur], l, cfg);
                    cr_ready = true;
                }
                Region updated = region_boolean(BoolOp::Intersect, t.nodes[nb].pda, cr, cfg);
                if (updated.empty())
                    throw std::runtime_error("pda_update: PDA became empty (construction bug)");
                t.nodes[nb].pda = std::move(updated);
            }
            q.push_back(nb);
        }
    }
}

namespace {

// First maximal clique of Algorithm 1 (one MCC pass).
std::vector<int> first_mcc_clique(const PVGraph& g, const std::vector<char>& remaining,
                                  Region* vis_out) {
    const int m = (int)g.tris.size();
    std::vector<int> order;
    for (int i = 0; i < m; ++i)
        if (remaining[i]) order.push_back(i);
    std::vector<int> deg(m, 0);
    for (int i : order)
        for (int j : order)
            if (g.adj[i][j]) ++deg[i];
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return deg[a] != deg[b] ? deg[a] < deg[b] : a < b; });
    std::vector<int> c;
    Region vis;
    for (int cand : order) {
        bool clique = true;
        for (int mem : c)
            if (!g.adj[cand][mem]) {
                clique = false;
                break;
            }
        if (!clique) continue;
        Region next = c.empty() ? g.vis[cand]
                                : region_boolean(BoolOp::Intersect, vis, g.vis[cand], g.cfg);
        if (next.area() <= g.cfg.eps_area) continue;
        c.push_back(cand);
        vis = std::move(next);
    }
    if (vis_out) *vis_out = std::move(vis);
    return c;
}

} // namespace

ConnectivityTree ctc(const PVGraph& g, const Layout& l, double r, const GeomConfig& cfg) {
    const int m = (int)g.tris.size();
    for (int i = 0; i < m; ++i)
        if (g.empty_vis[i])
            throw std::runtime_error("ctc: triangle " + std::to_string(i) +
                                     " has an empty visibility area (shrink R)");

    std::vector<char> remaining(m, 1);
    int left = m;

    ConnectivityTree t;
    Region first_vis;
    const std::vector<int> first = first_mcc_clique(g, remaining, &first_vis);
    t.nodes.push_back({std::move(first_vis), false, {}});
    for (int mem : first) {
        remaining[mem] = 0;
        --left;
    }

    while (left > 0) {
        std::vector<int> order;
        for (int i = 0; i < m; ++i)
            if (remaining[i]) order.push_back(i);
        std::vector<int> deg(m, 0);
        for (int i : order)
            for (int j : order)
                if (g.adj[i][j]) ++deg[i];
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return deg[a] != deg[b] ? deg[a] < deg[b] : a < b; });

        // per-iteration cache of PDA connection regions
        std::vector<Region> cr(t.nodes.size());
        for (int j = 0; j < t.size(); ++j)
            cr[j] = node_connection_region(t.nodes[j], l, cfg);

        // line 7: lowest sorted index whose visibility meets any CR
        int k = -1;
        for (std::size_t oi = 0; oi < order.size() && k < 0; ++oi)
            for (int j = 0; j < t.size(); ++j)
                if (region_boolean(BoolOp::Intersect, g.vis[order[oi]], cr[j], cfg).area() >
                    cfg.eps_area) {
                    k = (int)oi;
                    break;
                }
        if (k < 0) {
            std::string ids;
            for (int i : order) ids += (ids.empty() ? "" : ",") + std::to_string(i);
            throw DisconnectedAreaError("disconnected service area: unreachable triangles {" +
                                        ids + "}");
        }

        // line 8: attachment PDA maximizing the reachable-node count
        const Region& vk = g.vis[order[k]];
        int best_j = -1;
        int best_count = -1;
        for (int j = 0; j < t.size(); ++j) {
            const Region vk_cr = region_boolean(BoolOp::Intersect, vk, cr[j], cfg);
            if (vk_cr.area() <= cfg.eps_area) continue;
            int count = 0;
            for (int i : order)
                if (region_boolean(BoolOp::Intersect, vk_cr, g.vis[i], cfg).area() >
                    cfg.eps_area)
                    ++count;
            if (count > best_count) {
                best_count = count;
                best_j = j;
            }
        }
        if (best_j < 0) best_j = 0; // cannot happen after line-7 success

        // lines 14-17: grow the largest guarded clique connected to A_C
        std::vector<int> c;
        Region cvis; // CR(A_C) ∩ V(c)
        for (int cand : order) {
            bool clique = true;
            for (int mem : c)
                if (!g.adj[cand][mem]) {
                    clique = false;
                    break;
                }
            if (!clique) continue;
            Region next = c.empty()
                              ? region_boolean(BoolOp::Intersect, cr[best_j], g.vis[cand], cfg)
                              : region_boolean(BoolOp::Intersect, cvis, g.vis[cand], cfg);
            if (next.area() <= cfg.eps_area) continue;
            c.push_back(cand);
            cvis = std::move(next);
        }
        if (c.empty())
            throw std::runtime_error("ctc: clique growth failed despite reachable node");

        t.nodes.push_back({std::move(cvis), false, {}});
        const int new_id = t.size() - 1;
        t.edges.emplace_back(new_id, best_j);
        pda_update(t, new_id, l, cfg);

        for (int mem : c) {
            remaining[mem] = 0;
            --left;
        }
    }
    return t;
}

Deployment deploy_from_tree(ConnectivityTree t, const Layout& l, double r,
                            const GeomConfig& cfg) {
    Deployment d;
    d.method = "ctc";
    d.r = r;
    d.aps.resize(t.nodes.size());
    d.source.resize(t.nodes.size());
    for (int i = 0; i < t.size(); ++i) { // tree-discovery order
        const Point x = representative_point(t.nodes[i].pda, cfg);
        t.nodes[i].collapsed = true;
        t.nodes[i].point = x;
        d.aps[i] = x;
        d.source[i] = i;
        pda_update(t, i, l, cfg);
    }
    return d;
}

ConnectivityReport verify_backhaul(const Deployment& d, const Layout& l,
                                   const GeomConfig& cfg) {
    const int n = (int)d.aps.size();
    if (n == 0) throw std::domain_error("verify_backhaul: empty deployment");
    ConnectivityReport rep;
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (segment_inside(d.aps[i], d.aps[j], l, cfg)) {
                rep.backhaul_edges.emplace_back(i, j);
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    std::vector<char> seen(n, 0);
    std::deque<int> q{0};
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        const int cur = q.front();
        q.pop_front();
        for (int nb : adj[cur])
            if (!seen[nb]) {
                seen[nb] = 1;
                ++reached;
                q.push_back(nb);
            }
    }
    rep.connected = reached == n;
    return rep;
}

} // namespace owp
