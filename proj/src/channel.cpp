#include "owp/channel.hpp"

#include <algorithm>

namespace owp {

double channel_gain(Point led, Point pd, const ChannelParams& p) {
    const double horiz = dist(led, pd);
    if (horiz > p.r) return 0.0; // psi > Psi = atan(r/h)
    const double h = p.h_led_pd;
    const double d = std::sqrt(horiz * horiz + h * h);
    const double cosang = h / d;
    const double m = p.lambert_m();
    return (m + 1.0) * p.A_pd / (2.0 * M_PI * d * d) * std::pow(cosang, m) * cosang;
}

double received_strength(Point led, double p_led, Point pd, const Layout& l,
                         const ChannelParams& p, const GeomConfig& cfg) {
    if (dist(led, pd) > p.r) return 0.0;
    if (!segment_inside(led, pd, l, cfg)) return 0.0;
    const double i = p_led * channel_gain(led, pd, p) * p.R_eff;
    const double v = i * p.G_tia;
    return v * v;
}

double data_rate(Point pd, const Deployment& d, const Layout& l, const ChannelParams& p,
                 const PowerScheme& scheme, const GeomConfig& cfg) {
    const double p_ap = scheme.per_ap(d.aps.size());
    double serve = 0.0;
    double total = 0.0;
    for (const Point& ap : d.aps) {
        const double lam = received_strength(ap, p_ap, pd, l, p, cfg);
        total += lam;
        if (lam > serve) serve = lam; // strict > keeps lowest-index ties
    }
    if (serve <= 0.0) return 0.0;
    return p.B * std::log2(1.0 + serve / (total - serve + p.sigma2()));
}

double illumination(Point pd, const Deployment& d, const Layout& l,
                    const ChannelParams& p, const PowerScheme& scheme,
                    const GeomConfig& cfg) {
    const double p_ap = scheme.per_ap(d.aps.size());
    double sum = 0.0;
    for (const Point& ap : d.aps) {
        if (dist(ap, pd) > p.r) continue;
        if (!segment_inside(ap, pd, l, cfg)) continue;
        sum += p_ap * channel_gain(ap, pd, p);
    }
    return p.mu_led * sum / p.A_pd;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double u01(std::uint64_t& state) {
    state = splitmix64(state);
    return (state >> 11) * 0x1.0p-53;
}

double quantile(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) return 0.0;
    const std::size_t idx =
        (std::size_t)std::floor(q * (double)(sorted.size() - 1) + 0.5);
    return sorted[std::min(idx, sorted.size() - 1)];
}

} // namespace

Metrics simulate(const Layout& l, const Deployment& d, const ChannelParams& p,
                 const PowerScheme& scheme, int n_users, std::uint64_t seed,
                 const GeomConfig& cfg) {
    if (n_users < 1) throw std::domain_error("simulate: n_users must be >= 1");
    Point lo, hi;
    l.bbox(lo, hi);

    Metrics m;
    m.rate_cdf.reserve(n_users);
    m.illum_cdf.reserve(n_users);
    int outage = 0;
    for (int i = 0; i < n_users; ++i) {
        std::uint64_t state = splitmix64(seed ^ (0x5851f42d4c957f2dULL * (std::uint64_t)(i + 1)));
        Point u;
        do {
            u.x = lo.x + (hi.x - lo.x) * u01(state);
            u.y = lo.y + (hi.y - lo.y) * u01(state);
        } while (locate_point(u, l, cfg.eps_geom) != PointLocation::Inside);
        const double rate = data_rate(u, d, l, p, scheme, cfg);
        m.rate_cdf.push_back(rate);
        m.illum_cdf.push_back(illumination(u, d, l, p, scheme, cfg));
        if (rate <= 0.0) ++outage;
    }
    std::sort(m.rate_cdf.begin(), m.rate_cdf.end());
    std::sort(m.illum_cdf.begin(), m.illum_cdf.end());
    m.R_min = quantile(m.rate_cdf, 0.05);
    m.R_mean = 0.0;
    for (double v : m.rate_cdf) m.R_mean += v;
    m.R_mean /= (double)n_users;
    m.E_avg = 0.0;
    for (double v : m.illum_cdf) m.E_avg += v;
    m.E_avg /= (double)n_users;
    m.U_E = m.E_avg > 0.0 ? quantile(m.illum_cdf, 0.10) / m.E_avg : 0.0;
    m.outage_fraction = (double)outage / (double)n_users;
    return m;
}

} // namespace owp
