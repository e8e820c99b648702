#pragma once

#include "owp/pvgraph.hpp"

namespace owp {

struct Clique {
    std::vector<int> members; // triangle ids, pairwise adjacent
    Region vis;               // V(c) = intersection of member visibilities
};

struct Deployment {
    std::vector<Point> aps;
    std::vector<int> source; // clique / PDA index per AP (-1 for baselines)
    std::string method;      // mcc | ctc | hex | hexplus | manual
    double r = 0.0;
};

struct CoverageReport {
    bool covered = false;
    double outage_area = 0.0;
    double outage_fraction = 0.0;
    Region outage_region;
};

inline constexpr double kEpsCoverage = 1e-4; // [m^2]

// Algorithm 1: greedy maximal-clique clustering guarded by non-empty
// common visibility. Output cliques partition the node set.
std::vector<Clique> mcc(const PVGraph& g);

Deployment place_aps(const std::vector<Clique>& cliques, const Layout& l, double r,
                     const GeomConfig& cfg = {});

// Outage = layout minus the union of the AP visibility areas.
// Planner-independent; works on any deployment.
CoverageReport verify_coverage(const Deployment& d, const Layout& l, double r,
                               const GeomConfig& cfg = {},
                               double eps_cov = kEpsCoverage);

} // namespace owp
