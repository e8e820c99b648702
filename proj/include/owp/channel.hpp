#pragma once

#include "owp/planner_mcc.hpp"

namespace owp {

// Table-I defaults; the spectral integrals are collapsed into the scalar
// effective responsivity R_eff and luminous efficacy mu_led.
struct ChannelParams {
    double B = 10e6;            // modulation bandwidth [Hz]
    double theta_max = M_PI / 3; // LED semi-angle at half power [rad]
    double A_pd = 75.44e-6;     // PD active area [m^2]
    double h_led_pd = 2.5;      // vertical LED-PD distance [m]
    double NEP = 3.17e-10;      // noise equivalent power [W/sqrt(Hz)]
    double R_eff = 0.5;         // effective responsivity [A/W]
    double G_tia = 1.0;         // TIA gain [V/A]
    double mu_led = 300.0;      // luminous efficacy [lm/W]
    double r = 3.0;             // planning cell range [m], r = h*tan(Psi)

    double lambert_m() const { return -1.0 / std::log2(std::cos(theta_max)); }
    double sigma2() const {
        const double v = R_eff * NEP * std::sqrt(B) * G_tia;
        return v * v;
    }
};

struct PowerScheme {
    enum class Kind { PerLed, Total };
    Kind kind = Kind::PerLed;
    double watts = 40.0;

    double per_ap(std::size_t ap_count) const {
        return kind == Kind::PerLed ? watts : watts / (double)ap_count;
    }
};

struct Metrics {
    double R_min = 0.0;  // 5th-percentile rate [bit/s]
    double R_mean = 0.0; // mean rate [bit/s]
    double E_avg = 0.0;  // mean illuminance [lux]
    double U_E = 0.0;    // E_0.1 / E_avg
    double outage_fraction = 0.0;
    std::vector<double> rate_cdf;  // sorted samples
    std::vector<double> illum_cdf; // sorted samples
};

// Lambertian DC gain; LED points down, PD faces up (phi == psi), zero
// beyond the field of view (horizontal offset > r).
double channel_gain(Point led, Point pd, const ChannelParams& p);

// (P * H * R_eff * G_tia)^2, zero when a wall blocks the floor-projected
// LoS segment or the PD is out of range.
double received_strength(Point led, double p_led, Point pd, const Layout& l,
                         const ChannelParams& p, const GeomConfig& cfg = {});

// Serving AP = strongest received strength (ties by index); the rest of
// the visible APs are interference.
double data_rate(Point pd, const Deployment& d, const Layout& l,
                 const ChannelParams& p, const PowerScheme& scheme,
                 const GeomConfig& cfg = {});

double illumination(Point pd, const Deployment& d, const Layout& l,
                    const ChannelParams& p, const PowerScheme& scheme,
                    const GeomConfig& cfg = {});

// Monte-Carlo over uniform user positions; per-point counter-based RNG
// streams keyed on (seed, index), so results do not depend on scheduling.
Metrics simulate(const Layout& l, const Deployment& d, const ChannelParams& p,
                 const PowerScheme& scheme, int n_users, std::uint64_t seed,
                 const GeomConfig& cfg = {});

} // namespace owp
