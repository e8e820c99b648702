#pragma once

#include "owp/planner_mcc.hpp"

namespace owp {

struct ConnectivityTree {
    struct Node {
        Region pda;
        bool collapsed = false; // PDA replaced by a deployed AP position
        Point point;            // valid when collapsed
    };
    std::vector<Node> nodes;
    std::vector<std::pair<int, int>> edges;

    std::vector<int> neighbors(int i) const;
    int size() const { return (int)nodes.size(); }
};

struct ConnectivityReport {
    bool connected = false;
    std::vector<std::pair<int, int>> backhaul_edges; // AP index pairs with LoS
};

// Connection region of a tree node: exact visibility polygon for a
// collapsed (point) node, sampled union otherwise.
Region node_connection_region(const ConnectivityTree::Node& n, const Layout& l,
                              const GeomConfig& cfg);

// Algorithm 2: along every root-to-leaf path, replace each PDA by its
// intersection with the connection region of its predecessor.
void pda_update(ConnectivityTree& t, int root, const Layout& l,
                const GeomConfig& cfg = {});

// Algorithm 3: builds the PDAs and the tree jointly.
ConnectivityTree ctc(const PVGraph& g, const Layout& l, double r,
                     const GeomConfig& cfg = {});

// Section-V deployment: place one AP per PDA in discovery order,
// collapsing each PDA to the chosen point and re-running pda_update.
Deployment deploy_from_tree(ConnectivityTree t, const Layout& l, double r,
                            const GeomConfig& cfg = {});

// LoS graph on the APs (no range cap) and its connectivity.
ConnectivityReport verify_backhaul(const Deployment& d, const Layout& l,
                                   const GeomConfig& cfg = {});

struct DisconnectedAreaError : std::runtime_error {
    explicit DisconnectedAreaError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace owp
