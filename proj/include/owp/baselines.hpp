#pragma once

#include "owp/planner_mcc.hpp"

namespace owp {

struct HexSearchConfig {
    int offset_steps = 6;                // grid over one lattice fundamental domain
    std::vector<double> rotations{0.0};  // lattice rotations to try [rad]
    double candidate_pitch = 0.0;        // Hex+ candidate grid, 0 = r/4
};

struct HexResult {
    Deployment dep;
    CoverageReport cov;
};

// Hexagonal lattice with cell circumradius r (AP spacing sqrt(3)*r);
// offsets grid-searched to minimize the exact outage area. APs outside
// the layout are discarded.
HexResult hex_deploy(const Layout& l, double r, const HexSearchConfig& hcfg = {},
                     const GeomConfig& cfg = {});

// Hex plus greedy gap-filling: repeatedly add the candidate AP covering
// the largest remaining outage area until outage <= eps_cov.
Deployment hexplus_deploy(const Layout& l, double r, const HexSearchConfig& hcfg = {},
                          const GeomConfig& cfg = {});

} // namespace owp
