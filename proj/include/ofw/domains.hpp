#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ofw/atoms.hpp"

namespace ofw {

struct Simplex {
    Index n = 0;
};

struct Ball {
    Index n = 0;
    double radius = 1.0;
};

// DAG with nodes numbered in topological order (every edge goes from a
// lower to a higher node id). The domain is the convex hull of the 0/1
// edge-indicator vectors of s->t paths.
struct FlowPolytope {
    Index nodes = 0;
    std::vector<std::pair<int, int>> edges;
    int source = 0;
    int sink = 0;

    Index num_edges() const { return static_cast<Index>(edges.size()); }
};

// Convex hull of indicator vectors of subsets of size <= rank.
struct UniformMatroid {
    Index n = 0;
    Index rank = 0;
};

struct TraceNormBall {
    Index m = 0;
    Index n = 0;
    double tau = 1.0;
};

using DomainSpec = std::variant<Simplex, Ball, FlowPolytope, UniformMatroid, TraceNormBall>;

// Throws ConfigError / InfeasibleError on malformed specs (non-topological
// edges, no s->t path, non-positive radius/tau, rank out of range).
void validate_domain(const DomainSpec& domain);

// Euclidean diameter (Frobenius for matrix domains).
double domain_diameter(const DomainSpec& domain);

// Length of the coordinate representation an LMO input/output uses:
// n for simplex/ball/matroid, edge count for flow, m*n for trace ball.
Index domain_dim(const DomainSpec& domain);

// Longest s->t path in edge count; used by the flow diameter.
Index flow_longest_path(const FlowPolytope& g);

// Text format: first line "nodes <m> edges <k> s <s> t <t>", then k lines
// "u v" in topological order.
FlowPolytope parse_flow_graph(std::istream& in);
FlowPolytope load_flow_graph(const std::string& path);

}  // namespace ofw
