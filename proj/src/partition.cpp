#include "owp/partition.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace owp {

double Triangle::largest_side() const {
    return std::max({dist(a, b), dist(b, c), dist(c, a)});
}

double Partition::total_area() const {
    double s = 0.0;
    for (const auto& t : triangles) s += t.area();
    return s;
}

double default_R(double r, RangeMode) {
    if (r <= 0.0) throw std::domain_error("range must be positive");
    return r;
}

// ------------------------------------------------------------ ear clipping

namespace {

bool point_in_triangle_closed(Point p, Point a, Point b, Point c, double eps) {
    const double s = std::max({dist(a, b), dist(b, c), dist(c, a)});
    const double tol = eps * s;
    return orient_area(a, b, p) >= -tol && orient_area(b, c, p) >= -tol &&
           orient_area(c, a, p) >= -tol;
}

} // namespace

Partition triangulate(const Layout& l) {
    const double eps = 1e-9;
    std::vector<Point> poly = l.vertices();
    Partition part;
    int next_id = 0;
    while (poly.size() > 3) {
        const std::size_t n = poly.size();
        bool clipped = false;
        for (std::size_t i = 0; i < n && !clipped; ++i) {
            const Point prev = poly[(i + n - 1) % n];
            const Point cur = poly[i];
            const Point next = poly[(i + 1) % n];
            const double a = orient_area(prev, cur, next);
            if (a <= eps) continue; // reflex or degenerate corner
            bool blocked = false;
            for (std::size_t j = 0; j < n && !blocked; ++j) {
                if (j == i || j == (i + n - 1) % n || j == (i + 1) % n) continue;
                if (point_in_triangle_closed(poly[j], prev, cur, next, eps)) blocked = true;
            }
            if (blocked) continue;
            part.triangles.push_back({prev, cur, next, next_id++});
            poly.erase(poly.begin() + (long)i);
            clipped = true;
        }
        if (!clipped)
            throw std::invalid_argument("triangulation failed: degenerate layout '" +
                                        l.name() + "'");
    }
    if (orient_area(poly[0], poly[1], poly[2]) > eps)
        part.triangles.push_back({poly[0], poly[1], poly[2], next_id++});
    else
        throw std::invalid_argument("triangulation failed: degenerate final triangle");
    return part;
}

// ------------------------------------------------------ hyper triangulation

namespace {

struct MeshTri {
    int v[3]; // vertex ids, CCW
    bool alive = true;
};

struct Mesh {
    std::vector<Point> verts;
    std::vector<MeshTri> tris;
    std::map<std::pair<long long, long long>, int> vert_index;

    int add_vertex(Point p) {
        const std::pair<long long, long long> key{std::llround(p.x * 1e9),
                                                  std::llround(p.y * 1e9)};
        auto it = vert_index.find(key);
        if (it != vert_index.end()) return it->second;
        verts.push_back(p);
        vert_index.emplace(key, (int)verts.size() - 1);
        return (int)verts.size() - 1;
    }
};

// side k of a triangle = edge opposite to vertex k
std::pair<int, int> side_of(const MeshTri& t, int k) {
    return {t.v[(k + 1) % 3], t.v[(k + 2) % 3]};
}

// Index (0..2) of the longest side; ties broken by lexicographic
// (x, y) order of the sorted edge endpoints.
int longest_side(const Mesh& m, const MeshTri& t) {
    int best = -1;
    double best_len = -1.0;
    std::pair<Point, Point> best_key;
    for (int k = 0; k < 3; ++k) {
        auto [i, j] = side_of(t, k);
        Point a = m.verts[i], b = m.verts[j];
        if (b.x < a.x || (b.x == a.x && b.y < a.y)) std::swap(a, b);
        const double len = dist(a, b);
        auto lex_less = [](const std::pair<Point, Point>& p, const std::pair<Point, Point>& q) {
            if (p.first.x != q.first.x) return p.first.x < q.first.x;
            if (p.first.y != q.first.y) return p.first.y < q.first.y;
            if (p.second.x != q.second.x) return p.second.x < q.second.x;
            return p.second.y < q.second.y;
        };
        if (len > best_len + 1e-12 ||
            (std::abs(len - best_len) <= 1e-12 && lex_less({a, b}, best_key))) {
            best = k;
            best_len = len;
            best_key = {a, b};
        }
    }
    return best;
}

int find_neighbor(const Mesh& m, int self, int va, int vb) {
    for (int ti = 0; ti < (int)m.tris.size(); ++ti) {
        if (ti == self || !m.tris[ti].alive) continue;
        const MeshTri& t = m.tris[ti];
        for (int k = 0; k < 3; ++k) {
            auto [i, j] = side_of(t, k);
            if ((i == va && j == vb) || (i == vb && j == va)) return ti;
        }
    }
    return -1;
}

// Split triangle ti on side (va, vb) using midpoint vertex vm.
void split_triangle(Mesh& m, int ti, int va, int vb, int vm, std::deque<int>& queue,
                    double R) {
    MeshTri t = m.tris[ti];
    m.tris[ti].alive = false;
    int opp = -1;
    for (int k = 0; k < 3; ++k)
        if (t.v[k] != va && t.v[k] != vb) opp = t.v[k];
    auto push = [&](int a, int b, int c) {
        if (orient_area(m.verts[a], m.verts[b], m.verts[c]) < 0.0) std::swap(b, c);
        m.tris.push_back({{a, b, c}, true});
        const int id = (int)m.tris.size() - 1;
        const MeshTri& nt = m.tris[id];
        const double ls = std::max({dist(m.verts[nt.v[0]], m.verts[nt.v[1]]),
                                    dist(m.verts[nt.v[1]], m.verts[nt.v[2]]),
                                    dist(m.verts[nt.v[2]], m.verts[nt.v[0]])});
        if (ls > R * (1.0 + 1e-12)) queue.push_back(id);
    };
    push(opp, va, vm);
    push(opp, vm, vb);
}

} // namespace

Partition hyper_triangulate(const Layout& l, double R) {
    if (R <= 0.0) throw std::domain_error("hyper triangulation parameter R must be positive");
    const Partition base = triangulate(l);

    Mesh m;
    std::deque<int> queue;
    for (const Triangle& t : base.triangles) {
        const int a = m.add_vertex(t.a), b = m.add_vertex(t.b), c = m.add_vertex(t.c);
        m.tris.push_back({{a, b, c}, true});
        if (t.largest_side() > R * (1.0 + 1e-12)) queue.push_back((int)m.tris.size() - 1);
    }

    std::size_t guard = 0;
    const std::size_t guard_max = 200000 + 1000 * base.triangles.size();
    while (!queue.empty()) {
        if (++guard > guard_max)
            throw std::runtime_error("hyper triangulation did not terminate");
        const int ti = queue.front();
        queue.pop_front();
        if (!m.tris[ti].alive) continue;
        const MeshTri t = m.tris[ti];
        const int k = longest_side(m, t);
        auto [va, vb] = side_of(t, k);
        if (dist(m.verts[va], m.verts[vb]) <= R * (1.0 + 1e-12)) continue;
        const Point mid{0.5 * (m.verts[va].x + m.verts[vb].x),
                        0.5 * (m.verts[va].y + m.verts[vb].y)};
        const int vm = m.add_vertex(mid);
        const int nb = find_neighbor(m, ti, va, vb);
        split_triangle(m, ti, va, vb, vm, queue, R);
        if (nb >= 0) split_triangle(m, nb, va, vb, vm, queue, R);
    }

    Partition out;
    out.R_used = R;
    int id = 0;
    for (const MeshTri& t : m.tris) {
        if (!t.alive) continue;
        out.triangles.push_back({m.verts[t.v[0]], m.verts[t.v[1]], m.verts[t.v[2]], id++});
    }
    return out;
}

} // namespace owp
