#include "owp/io.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

namespace owp {

namespace {

json points_to_json(const std::vector<Point>& pts) {
    json a = json::array();
    for (const Point& p : pts) a.push_back({p.x, p.y});
    return a;
}

std::vector<Point> points_from_json(const json& a) {
    std::vector<Point> pts;
    for (const auto& v : a) pts.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
    return pts;
}

} // namespace

json layout_to_json(const Layout& l) {
    return {{"name", l.name()}, {"vertices", points_to_json(l.vertices())}};
}

Layout layout_from_json(const json& j, std::string* warning) {
    std::vector<Point> pts = points_from_json(j.at("vertices"));
    if (pts.size() >= 3) {
        double a2 = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Point& p = pts[i];
            const Point& q = pts[(i + 1) % pts.size()];
            a2 += p.x * q.y - q.x * p.y;
        }
        if (a2 < 0.0) {
            std::reverse(pts.begin(), pts.end());
            if (warning) *warning = "clockwise vertex order reversed to counter-clockwise";
        }
    }
    return Layout(j.value("name", std::string("layout")), std::move(pts));
}

Layout load_layout(const std::filesystem::path& path, std::string* warning) {
    return layout_from_json(load_json(path), warning);
}

void save_layout(const Layout& l, const std::filesystem::path& path) {
    save_json(layout_to_json(l), path);
}

json region_to_json(const Region& r) {
    json a = json::array();
    for (const auto& poly : r.polys) a.push_back(points_to_json(poly));
    return {{"area", r.area()}, {"polygons", a}};
}

json deployment_to_json(const Deployment& d, const CoverageReport* cov,
                        const ConnectivityReport* bh) {
    json j = {{"method", d.method},
              {"r", d.r},
              {"aps", points_to_json(d.aps)},
              {"source", d.source}};
    if (cov) {
        j["coverage"] = {{"covered", cov->covered},
                         {"outage_area", cov->outage_area},
                         {"outage_fraction", cov->outage_fraction}};
    }
    if (bh) {
        json edges = json::array();
        for (const auto& [a, b] : bh->backhaul_edges) edges.push_back({a, b});
        j["backhaul"] = {{"connected", bh->connected}, {"edges", edges}};
    }
    return j;
}

Deployment deployment_from_json(const json& j) {
    Deployment d;
    d.method = j.value("method", std::string("manual"));
    d.r = j.value("r", 0.0);
    d.aps = points_from_json(j.at("aps"));
    if (j.contains("source"))
        d.source = j.at("source").get<std::vector<int>>();
    else
        d.source.assign(d.aps.size(), -1);
    return d;
}

json partition_to_json(const Partition& p) {
    json tris = json::array();
    for (const Triangle& t : p.triangles)
        tris.push_back({{"id", t.id}, {"vertices", points_to_json({t.a, t.b, t.c})}});
    return {{"R", p.R_used}, {"count", (int)p.triangles.size()}, {"triangles", tris}};
}

json hidden_certificate_to_json(const HiddenSetCertificate& cert, const CertCheck& check) {
    return {{"kind", "hidden-set"},
            {"points", points_to_json(cert.points)},
            {"node_ids", cert.node_ids},
            {"accepted", check.accepted},
            {"bound", check.bound}};
}

json metrics_to_json(const Metrics& m, const ChannelParams& p, const PowerScheme& scheme,
                     int n_users, std::uint64_t seed) {
    return {{"R_min", m.R_min},
            {"R_mean", m.R_mean},
            {"E_avg", m.E_avg},
            {"U_E", m.U_E},
            {"outage_fraction", m.outage_fraction},
            {"n_users", n_users},
            {"seed", seed},
            {"power",
             {{"scheme", scheme.kind == PowerScheme::Kind::PerLed ? "per-led" : "total"},
              {"watts", scheme.watts}}},
            {"params",
             {{"B", p.B},
              {"theta_max", p.theta_max},
              {"A_pd", p.A_pd},
              {"h", p.h_led_pd},
              {"NEP", p.NEP},
              {"R_eff", p.R_eff},
              {"G_tia", p.G_tia},
              {"mu_led", p.mu_led},
              {"r", p.r}}}};
}

void write_cdf_csv(const std::vector<double>& sorted_samples,
                   const std::filesystem::path& path) {
    std::ostringstream out;
    out.precision(12);
    out << "value,cumulative_probability\n";
    const std::size_t n = sorted_samples.size();
    for (std::size_t i = 0; i < n; ++i)
        out << sorted_samples[i] << ',' << (double)(i + 1) / (double)n << '\n';
    write_text(path, out.str());
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path.string());
    f << text;
}

json load_json(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open: " + path.string());
    return json::parse(f);
}

void save_json(const json& j, const std::filesystem::path& path) {
    write_text(path, j.dump(2) + "\n");
}

void write_manifest(const std::filesystem::path& primary_output,
                    const std::string& command_line, const json& config) {
    const auto now = std::chrono::system_clock::now();
    json m = {{"command", command_line},
              {"config", config},
              {"timestamp",
               std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch())
                   .count()}};
    std::filesystem::path p = primary_output;
    p += ".manifest.json";
    save_json(m, p);
}

// ---- rendering -----------------------------------------------------------

namespace {

struct SvgMapper {
    double minx, miny, scale, h_px;
    SvgMapper(const Layout& l, double width_px) {
        Point lo, hi;
        l.bbox(lo, hi);
        const double pad = 0.05 * std::max(hi.x - lo.x, hi.y - lo.y);
        minx = lo.x - pad;
        miny = lo.y - pad;
        const double w = hi.x - lo.x + 2 * pad, h = hi.y - lo.y + 2 * pad;
        scale = width_px / w;
        h_px = h * scale;
    }
    double x(double v) const { return (v - minx) * scale; }
    double y(double v) const { return h_px - (v - miny) * scale; } // y up
};

std::string path_of(const std::vector<Point>& ring, const SvgMapper& m) {
    std::ostringstream s;
    s.precision(6);
    for (std::size_t i = 0; i < ring.size(); ++i)
        s << (i ? " L " : "M ") << m.x(ring[i].x) << ' ' << m.y(ring[i].y);
    s << " Z";
    return s.str();
}

} // namespace

std::string render_svg(const Layout& l, const RenderOptions& opt) {
    SvgMapper m(l, opt.width_px);
    std::ostringstream s;
    s.precision(6);
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width_px
      << "\" height=\"" << m.h_px << "\" viewBox=\"0 0 " << opt.width_px << ' '
      << m.h_px << "\">\n";
    s << "<path d=\"" << path_of(l.vertices(), m)
      << "\" fill=\"#f4f4f4\" stroke=\"#222\" stroke-width=\"2\"/>\n";
    if (opt.show_partition && opt.partition) {
        for (const Triangle& t : opt.partition->triangles)
            s << "<path d=\"" << path_of({t.a, t.b, t.c}, m)
              << "\" fill=\"none\" stroke=\"#9ab\" stroke-width=\"0.6\"/>\n";
    }
    if (opt.coverage) {
        for (const auto& poly : opt.coverage->outage_region.polys)
            s << "<path d=\"" << path_of(poly, m)
              << "\" fill=\"#e66\" fill-opacity=\"0.5\" stroke=\"none\"/>\n";
    }
    if (opt.deployment) {
        const auto& aps = opt.deployment->aps;
        if (opt.backhaul) {
            for (const auto& [a, b] : opt.backhaul->backhaul_edges)
                s << "<line x1=\"" << m.x(aps[a].x) << "\" y1=\"" << m.y(aps[a].y)
                  << "\" x2=\"" << m.x(aps[b].x) << "\" y2=\"" << m.y(aps[b].y)
                  << "\" stroke=\"#2a7\" stroke-width=\"1.2\"/>\n";
        }
        for (const Point& p : aps)
            s << "<circle cx=\"" << m.x(p.x) << "\" cy=\"" << m.y(p.y)
              << "\" r=\"4\" fill=\"#06c\"/>\n";
    }
    s << "</svg>\n";
    return s.str();
}

} // namespace owp
