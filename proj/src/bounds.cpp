#include "owp/bounds.hpp"

#include <algorithm>
#include <functional>

namespace owp {

// -------------------------------------------------- maximum independent set

namespace {

// Branch and bound for the maximum clique of the complement graph.
struct CliqueSolver {
    int n;
    std::vector<std::vector<char>> comp; // complement adjacency
    std::vector<int> best;

    void expand(std::vector<int>& cur, std::vector<int>& cand) {
        if (cur.size() + cand.size() <= best.size()) return;
        if (cand.empty()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        while (!cand.empty()) {
            if (cur.size() + cand.size() <= best.size()) return;
            const int v = cand.back();
            cand.pop_back();
            cur.push_back(v);
            std::vector<int> next;
            for (int u : cand)
                if (comp[v][u]) next.push_back(u);
            expand(cur, next);
            cur.pop_back();
        }
    }
};

} // namespace

MisResult max_independent_set(const PVGraph& g, int budget) {
    const int n = (int)g.tris.size();
    MisResult res;
    if (n == 0) {
        res.exact = true;
        return res;
    }
    if (n <= budget) {
        CliqueSolver s;
        s.n = n;
        s.comp.assign(n, std::vector<char>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && !g.adj[i][j]) s.comp[i][j] = 1;
        // candidates ordered by ascending complement degree so that the
        // back() pick (highest degree) is explored first
        std::vector<int> cand(n);
        for (int i = 0; i < n; ++i) cand[i] = i;
        std::vector<int> cdeg(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) cdeg[i] += s.comp[i][j];
        std::stable_sort(cand.begin(), cand.end(),
                         [&](int a, int b) { return cdeg[a] != cdeg[b] ? cdeg[a] < cdeg[b] : a > b; });
        std::vector<int> cur;
        s.expand(cur, cand);
        res.ids = s.best;
        std::sort(res.ids.begin(), res.ids.end());
        res.exact = true;
        return res;
    }
    // greedy min-degree-first independent set
    std::vector<char> alive(n, 1);
    std::vector<int> deg(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) deg[i] += g.adj[i][j];
    for (;;) {
        int pick = -1;
        for (int i = 0; i < n; ++i)
            if (alive[i] && (pick < 0 || deg[i] < deg[pick])) pick = i;
        if (pick < 0) break;
        res.ids.push_back(pick);
        alive[pick] = 0;
        for (int j = 0; j < n; ++j)
            if (alive[j] && g.adj[pick][j]) {
                alive[j] = 0;
                for (int k = 0; k < n; ++k)
                    if (g.adj[j][k]) --deg[k];
            }
    }
    std::sort(res.ids.begin(), res.ids.end());
    res.exact = false;
    return res;
}

// -------------------------------------------------------- hidden point sets

namespace {

std::vector<Point> candidate_points(const Triangle& t) {
    std::vector<Point> out{t.centroid()};
    // 5x5 barycentric grid, strictly interior
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            const double l1 = i / 7.0;
            const double l2 = j / 7.0 * (1.0 - l1);
            const double l3 = 1.0 - l1 - l2;
            if (l3 < 0.05) continue;
            out.push_back({l1 * t.a.x + l2 * t.b.x + l3 * t.c.x,
                           l1 * t.a.y + l2 * t.b.y + l3 * t.c.y});
        }
    return out;
}

bool regions_disjoint(const Region& a, const Region& b, const GeomConfig& cfg) {
    return region_boolean(BoolOp::Intersect, a, b, cfg).area() <= cfg.eps_area;
}

} // namespace

std::optional<HiddenSetCertificate> find_hidden_points(const std::vector<int>& ids,
                                                       const PVGraph& g) {
    const Layout& l = *g.layout;
    const GeomConfig& cfg = g.cfg;
    std::vector<std::vector<Point>> cands;
    std::vector<std::vector<Region>> vis;
    for (int id : ids) {
        cands.push_back(candidate_points(g.tris[id]));
        std::vector<Region> vs;
        for (const Point& p : cands.back())
            vs.push_back(visibility_area_point(p, l, g.r, cfg));
        vis.push_back(std::move(vs));
    }

    std::vector<int> chosen(ids.size(), -1);
    long long checks = 0;
    const long long check_budget = 20000;
    std::function<bool(std::size_t)> dfs = [&](std::size_t depth) -> bool {
        if (depth == ids.size()) return true;
        for (std::size_t c = 0; c < cands[depth].size(); ++c) {
            bool ok = true;
            for (std::size_t prev = 0; prev < depth && ok; ++prev) {
                if (++checks > check_budget) return false;
                if (!regions_disjoint(vis[depth][c], vis[prev][chosen[prev]], cfg)) ok = false;
            }
            if (!ok) continue;
            chosen[depth] = (int)c;
            if (dfs(depth + 1)) return true;
            if (checks > check_budget) return false;
        }
        chosen[depth] = -1;
        return false;
    };
    if (!dfs(0)) return std::nullopt;

    HiddenSetCertificate cert;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        cert.points.push_back(cands[i][chosen[i]]);
        cert.node_ids.push_back(ids[i]);
    }
    return cert;
}

HiddenSetCertificate find_hidden_subset(const std::vector<int>& ids, const PVGraph& g) {
    const Layout& l = *g.layout;
    const GeomConfig& cfg = g.cfg;
    HiddenSetCertificate cert;
    std::vector<Region> chosen_vis;
    for (int id : ids) {
        for (const Point& p : candidate_points(g.tris[id])) {
            const Region v = visibility_area_point(p, l, g.r, cfg);
            bool ok = !v.empty();
            for (const Region& prev : chosen_vis)
                if (ok && !regions_disjoint(v, prev, cfg)) ok = false;
            if (!ok) continue;
            cert.points.push_back(p);
            cert.node_ids.push_back(id);
            chosen_vis.push_back(v);
            break;
        }
    }
    return cert;
}

bool verify_hidden_set(const std::vector<Point>& points, const Layout& l, double r,
                       const GeomConfig& cfg) {
    std::vector<Region> vis;
    for (const Point& p : points) {
        if (locate_point(p, l, cfg.eps_geom) == PointLocation::Outside)
            throw std::domain_error("hidden-set point outside layout");
        vis.push_back(visibility_area_point(p, l, r, cfg));
    }
    for (std::size_t i = 0; i < vis.size(); ++i)
        for (std::size_t j = i + 1; j < vis.size(); ++j)
            if (!regions_disjoint(vis[i], vis[j], cfg)) return false;
    return true;
}

// ----------------------------------------------- connectivity certificates

namespace {

std::pair<bool, std::pair<int, int>> composites_disjoint(
    const ConnectivityCertificate& cert, const Layout& l, double r, GeomConfig cfg) {
    std::vector<Region> comp;
    for (std::size_t i = 0; i < cert.points.size(); ++i) {
        Region reg = visibility_area_point(cert.points[i], l, r, cfg);
        for (int k = 0; k < cert.b[i]; ++k) reg = connection_region(reg, l, cfg);
        comp.push_back(std::move(reg));
    }
    for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t j = i + 1; j < comp.size(); ++j)
            if (region_boolean(BoolOp::Intersect, comp[i], comp[j], cfg).area() >
                cfg.eps_area)
                return {false, {(int)i, (int)j}};
    return {true, {-1, -1}};
}

} // namespace

CertCheck verify_connectivity_certificate(const ConnectivityCertificate& cert,
                                          const Layout& l, double r,
                                          const GeomConfig& cfg) {
    if (cert.points.size() != cert.b.size())
        throw std::invalid_argument("certificate size mismatch");
    for (int bi : cert.b)
        if (bi < 0) throw std::invalid_argument("certificate b_i must be non-negative");

    CertCheck out;
    auto [ok, pair] = composites_disjoint(cert, l, r, cfg);
    if (!ok) {
        out.overlap = pair;
        return out;
    }
    // refined re-verification at halved pitch (larger CR under-approximation)
    GeomConfig fine = cfg;
    double pitch = cfg.cr_sample_pitch;
    if (pitch <= 0.0) {
        const double hint = cfg.cr_range_hint > 0.0 ? cfg.cr_range_hint : r;
        pitch = std::min(hint / 10.0, l.shortest_edge() / 4.0);
    }
    fine.cr_sample_pitch = pitch / 2.0;
    fine.cr_max_samples = cfg.cr_max_samples * 2;
    auto [ok2, pair2] = composites_disjoint(cert, l, r, fine);
    if (!ok2) {
        out.overlap = pair2;
        return out;
    }
    out.accepted = true;
    out.bound = (int)cert.points.size();
    for (int bi : cert.b) out.bound += bi;
    return out;
}

} // namespace owp
