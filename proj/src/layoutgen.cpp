#include "owp/layoutgen.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

namespace owp {

namespace {

struct Tri {
    int v[3];
    bool alive = true;
};

// Bowyer-Watson Delaunay triangulation with a super-triangle.
std::vector<Tri> delaunay(const std::vector<Point>& pts_in, std::vector<Point>& verts) {
    verts = pts_in;
    const int n = (int)verts.size();
    double span = 0.0;
    Point c{0, 0};
    for (const Point& p : verts) {
        c.x += p.x / n;
        c.y += p.y / n;
    }
    for (const Point& p : verts) span = std::max(span, dist(p, c));
    span = std::max(span, 1.0) * 20.0;
    verts.push_back({c.x - span, c.y - span});
    verts.push_back({c.x + span, c.y - span});
    verts.push_back({c.x, c.y + span});

    std::vector<Tri> tris;
    tris.push_back({{n, n + 1, n + 2}, true});

    auto in_circumcircle = [&](const Tri& t, Point p) {
        const Point a = verts[t.v[0]], b = verts[t.v[1]], d = verts[t.v[2]];
        const double ax = a.x - p.x, ay = a.y - p.y;
        const double bx = b.x - p.x, by = b.y - p.y;
        const double cx = d.x - p.x, cy = d.y - p.y;
        const double det = (ax * ax + ay * ay) * (bx * cy - cx * by) -
                           (bx * bx + by * by) * (ax * cy - cx * ay) +
                           (cx * cx + cy * cy) * (ax * by - bx * ay);
        return det > 0.0; // assumes CCW triangle
    };

    for (int pi = 0; pi < n; ++pi) {
        const Point p = verts[pi];
        std::vector<int> bad;
        for (int ti = 0; ti < (int)tris.size(); ++ti)
            if (tris[ti].alive && in_circumcircle(tris[ti], p)) bad.push_back(ti);
        // boundary of the cavity: edges used by exactly one bad triangle
        std::map<std::pair<int, int>, int> edge_count;
        std::map<std::pair<int, int>, std::pair<int, int>> oriented;
        for (int ti : bad) {
            const Tri& t = tris[ti];
            for (int k = 0; k < 3; ++k) {
                const int u = t.v[k], v = t.v[(k + 1) % 3];
                const auto key = std::minmax(u, v);
                ++edge_count[{key.first, key.second}];
                oriented[{key.first, key.second}] = {u, v};
            }
            tris[ti].alive = false;
        }
        for (const auto& [key, cnt] : edge_count) {
            if (cnt != 1) continue;
            const auto [u, v] = oriented.at(key);
            Tri t{{u, v, pi}, true};
            if (orient_area(verts[t.v[0]], verts[t.v[1]], verts[t.v[2]]) < 0.0)
                std::swap(t.v[1], t.v[2]);
            tris.push_back(t);
        }
    }
    // drop triangles touching the super-triangle
    std::vector<Tri> out;
    for (const Tri& t : tris) {
        if (!t.alive) continue;
        if (t.v[0] >= n || t.v[1] >= n || t.v[2] >= n) continue;
        out.push_back(t);
    }
    return out;
}

struct DentMesh {
    std::vector<Point> verts;
    std::vector<Tri> tris;

    std::map<std::pair<int, int>, std::vector<int>> edge_tris() const {
        std::map<std::pair<int, int>, std::vector<int>> m;
        for (int ti = 0; ti < (int)tris.size(); ++ti) {
            if (!tris[ti].alive) continue;
            for (int k = 0; k < 3; ++k) {
                const auto key = std::minmax(tris[ti].v[k], tris[ti].v[(k + 1) % 3]);
                m[{key.first, key.second}].push_back(ti);
            }
        }
        return m;
    }

    int alive_count() const {
        int c = 0;
        for (const Tri& t : tris) c += t.alive;
        return c;
    }

    bool connected_without(int skip) const {
        std::vector<int> alive;
        for (int ti = 0; ti < (int)tris.size(); ++ti)
            if (tris[ti].alive && ti != skip) alive.push_back(ti);
        if (alive.empty()) return false;
        std::map<std::pair<int, int>, std::vector<int>> m;
        for (int ti : alive)
            for (int k = 0; k < 3; ++k) {
                const auto key = std::minmax(tris[ti].v[k], tris[ti].v[(k + 1) % 3]);
                m[{key.first, key.second}].push_back(ti);
            }
        std::map<int, char> seen;
        std::deque<int> q{alive[0]};
        seen[alive[0]] = 1;
        int reached = 1;
        while (!q.empty()) {
            const int cur = q.front();
            q.pop_front();
            for (int k = 0; k < 3; ++k) {
                const auto key = std::minmax(tris[cur].v[k], tris[cur].v[(k + 1) % 3]);
                for (int nb : m.at({key.first, key.second}))
                    if (nb != cur && !seen[nb]) {
                        seen[nb] = 1;
                        ++reached;
                        q.push_back(nb);
                    }
            }
        }
        return reached == (int)alive.size();
    }
};

} // namespace

Layout gen_layout(const LayoutGenConfig& cfg) {
    if (cfg.n < 4) throw std::invalid_argument("gen_layout: n must be >= 4");
    const int n_seed = cfg.n_seed_points > 0 ? cfg.n_seed_points : 10 * cfg.n;

    for (int attempt = 0; attempt < 50; ++attempt) {
        const std::uint64_t seed = cfg.seed + 0x9e3779b97f4a7c15ULL * (std::uint64_t)attempt;
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> uni(0.0, cfg.size);

        std::vector<Point> pts;
        pts.reserve(n_seed);
        for (int i = 0; i < n_seed; ++i) {
            const double x = uni(rng), y = uni(rng);
            pts.push_back({x, y});
        }
        DentMesh mesh;
        mesh.tris = delaunay(pts, mesh.verts);
        if (mesh.tris.empty()) continue;

        bool stalled = false;
        for (int step = 0;; ++step) {
            if (step > 2000) {
                stalled = true;
                break;
            }
            auto edges = mesh.edge_tris();
            std::vector<std::pair<int, int>> boundary;
            std::vector<char> bvert(mesh.verts.size(), 0);
            for (const auto& [key, tl] : edges)
                if (tl.size() == 1) {
                    boundary.push_back(key);
                    bvert[key.first] = bvert[key.second] = 1;
                }
            const int bcount = (int)boundary.size();
            if (bcount == cfg.n) break;

            // boundary-edge count per alive triangle
            std::vector<int> bedges(mesh.tris.size(), 0);
            for (const auto& [key, tl] : edges)
                if (tl.size() == 1) ++bedges[tl[0]];

            // prefer the move in the right direction; fall back to the
            // opposite one to escape meshes with no usable ear
            const int want = bcount < cfg.n ? 1 : 2;
            std::vector<int> pool, alt;
            for (int ti = 0; ti < (int)mesh.tris.size(); ++ti) {
                if (!mesh.tris[ti].alive) continue;
                if (bedges[ti] == want) pool.push_back(ti);
                if (bedges[ti] == 3 - want) alt.push_back(ti);
            }
            bool removed = false;
            if (pool.empty()) std::swap(pool, alt);
            for (int draw = 0; draw < 1000 && !removed && !pool.empty(); ++draw) {
                if (draw == 500 && !alt.empty()) std::swap(pool, alt);
                const int ti = pool[rng() % pool.size()];
                const Tri& t = mesh.tris[ti];
                if (mesh.alive_count() <= 2) break;
                if (bedges[ti] == 1) {
                    // growing: the vertex opposite the boundary edge joins
                    // the boundary; reject if it is already there (pinch)
                    int opp = -1;
                    for (int k = 0; k < 3; ++k) {
                        const auto key = std::minmax(t.v[k], t.v[(k + 1) % 3]);
                        if (edges.at({key.first, key.second}).size() == 1)
                            opp = t.v[(k + 2) % 3];
                    }
                    if (opp < 0 || bvert[opp]) continue;
                    if (!mesh.connected_without(ti)) continue;
                } else {
                    if (!mesh.connected_without(ti)) continue;
                }
                mesh.tris[ti].alive = false;
                removed = true;
            }
            if (!removed) {
                stalled = true;
                break;
            }
        }
        if (stalled) continue;

        // walk the boundary cycle following triangle orientation (CCW)
        auto edges = mesh.edge_tris();
        std::map<int, int> next;
        int start = -1;
        std::size_t bcnt = 0;
        for (int ti = 0; ti < (int)mesh.tris.size(); ++ti) {
            if (!mesh.tris[ti].alive) continue;
            for (int k = 0; k < 3; ++k) {
                const int u = mesh.tris[ti].v[k], v = mesh.tris[ti].v[(k + 1) % 3];
                const auto key = std::minmax(u, v);
                if (edges.at({key.first, key.second}).size() == 1) {
                    next[u] = v;
                    start = u;
                    ++bcnt;
                }
            }
        }
        if (start < 0 || next.size() != bcnt) continue;
        std::vector<Point> ring;
        int cur = start;
        do {
            ring.push_back(mesh.verts[cur]);
            auto it = next.find(cur);
            if (it == next.end()) break;
            cur = it->second;
        } while (cur != start && ring.size() <= bcnt);
        if ((int)ring.size() != cfg.n) continue;

        try {
            std::string name = cfg.name.empty()
                                   ? "gen-" + std::to_string(cfg.seed) + "-n" +
                                         std::to_string(cfg.n)
                                   : cfg.name;
            return Layout(std::move(name), std::move(ring));
        } catch (const std::invalid_argument&) {
            continue; // rare numeric degeneracy; redraw with derived seed
        }
    }
    throw std::runtime_error("gen_layout: failed to produce a valid layout");
}

} // namespace owp
