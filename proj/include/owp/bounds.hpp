#pragma once

#include "owp/pvgraph.hpp"

#include <optional>

namespace owp {

struct HiddenSetCertificate {
    std::vector<Point> points;
    std::vector<int> node_ids; // provenance triangles
    int s() const { return (int)points.size(); }
};

struct ConnectivityCertificate {
    std::vector<Point> points;
    std::vector<int> b; // non-negative CR composition counts
};

struct MisResult {
    std::vector<int> ids;
    bool exact = false; // false when the greedy fallback was used
};

struct CertCheck {
    bool accepted = false;
    int bound = 0;
    std::pair<int, int> overlap{-1, -1}; // first overlapping pair on rejection
};

// Exact maximum independent set (branch and bound on the complement-graph
// clique) up to `budget` nodes, greedy min-degree heuristic beyond that.
MisResult max_independent_set(const PVGraph& g, int budget = 120);

// Search points inside the given (independent) triangles whose visibility
// areas are pairwise disjoint; centroid first, then a 5x5 barycentric
// grid, with bounded backtracking.
std::optional<HiddenSetCertificate> find_hidden_points(const std::vector<int>& ids,
                                                       const PVGraph& g);

// Greedy fallback when the full independent set admits no hidden-point
// assignment: keeps every triangle whose first workable candidate stays
// disjoint from the points accepted so far. Result may be smaller than
// |ids| but is always a sound certificate.
HiddenSetCertificate find_hidden_subset(const std::vector<int>& ids, const PVGraph& g);

bool verify_hidden_set(const std::vector<Point>& points, const Layout& l, double r,
                       const GeomConfig& cfg = {});

// Remark-2 checker: accepts iff the CR^{b_i}(V(U_i)) composites are
// pairwise disjoint, re-verified at halved sampling pitch.
CertCheck verify_connectivity_certificate(const ConnectivityCertificate& cert,
                                          const Layout& l, double r,
                                          const GeomConfig& cfg = {});

} // namespace owp
