#include "ofw/domains.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace ofw {
namespace {

void validate_flow(const FlowPolytope& g) {
    if (g.nodes < 2) throw ConfigError("flow polytope: need at least 2 nodes");
    if (g.source < 0 || g.source >= g.nodes || g.sink < 0 || g.sink >= g.nodes ||
        g.source == g.sink)
        throw ConfigError("flow polytope: bad source/sink");
    for (const auto& [u, v] : g.edges) {
        if (u < 0 || u >= g.nodes || v < 0 || v >= g.nodes)
            throw ConfigError("flow polytope: edge endpoint out of range");
        if (u >= v)
            throw ConfigError("flow polytope: edges must go forward in topological order");
    }
    // Reachability s -> t along forward edges.
    std::vector<char> reach(static_cast<std::size_t>(g.nodes), 0);
    reach[static_cast<std::size_t>(g.source)] = 1;
    for (const auto& [u, v] : g.edges)
        if (reach[static_cast<std::size_t>(u)]) reach[static_cast<std::size_t>(v)] = 1;
    if (!reach[static_cast<std::size_t>(g.sink)])
        throw InfeasibleError("flow polytope: no s->t path");
}

}  // namespace

void validate_domain(const DomainSpec& domain) {
    std::visit(
        [](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Simplex>) {
                if (d.n < 1) throw ConfigError("simplex: n must be >= 1");
            } else if constexpr (std::is_same_v<T, Ball>) {
                if (d.n < 1) throw ConfigError("ball: n must be >= 1");
                if (!(d.radius > 0.0)) throw ConfigError("ball: radius must be > 0");
            } else if constexpr (std::is_same_v<T, FlowPolytope>) {
                validate_flow(d);
            } else if constexpr (std::is_same_v<T, UniformMatroid>) {
                if (d.n < 1 || d.rank < 1 || d.rank > d.n)
                    throw ConfigError("uniform matroid: need 1 <= rank <= n");
            } else if constexpr (std::is_same_v<T, TraceNormBall>) {
                if (d.m < 1 || d.n < 1) throw ConfigError("trace ball: bad shape");
                if (!(d.tau > 0.0)) throw ConfigError("trace ball: tau must be > 0");
            }
        },
        domain);
}

Index flow_longest_path(const FlowPolytope& g) {
    const Index kNeg = std::numeric_limits<Index>::min();
    std::vector<Index> len(static_cast<std::size_t>(g.nodes), kNeg);
    len[static_cast<std::size_t>(g.source)] = 0;
    for (const auto& [u, v] : g.edges) {
        if (len[static_cast<std::size_t>(u)] == kNeg) continue;
        len[static_cast<std::size_t>(v)] =
            std::max(len[static_cast<std::size_t>(v)], len[static_cast<std::size_t>(u)] + 1);
    }
    if (len[static_cast<std::size_t>(g.sink)] == kNeg)
        throw InfeasibleError("flow polytope: no s->t path");
    return len[static_cast<std::size_t>(g.sink)];
}

double domain_diameter(const DomainSpec& domain) {
    return std::visit(
        [](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Simplex>) {
                return std::sqrt(2.0);
            } else if constexpr (std::is_same_v<T, Ball>) {
                return 2.0 * d.radius;
            } else if constexpr (std::is_same_v<T, FlowPolytope>) {
                return std::sqrt(2.0 * static_cast<double>(flow_longest_path(d)));
            } else if constexpr (std::is_same_v<T, UniformMatroid>) {
                return std::sqrt(2.0 * static_cast<double>(d.rank));
            } else {
                return 2.0 * d.tau;
            }
        },
        domain);
}

Index domain_dim(const DomainSpec& domain) {
    return std::visit(
        [](const auto& d) -> Index {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Simplex>) {
                return d.n;
            } else if constexpr (std::is_same_v<T, Ball>) {
                return d.n;
            } else if constexpr (std::is_same_v<T, FlowPolytope>) {
                return d.num_edges();
            } else if constexpr (std::is_same_v<T, UniformMatroid>) {
                return d.n;
            } else {
                return d.m * d.n;
            }
        },
        domain);
}

FlowPolytope parse_flow_graph(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw InputError("flow graph: empty input");
    std::istringstream hs(header);
    std::string kw_nodes, kw_edges, kw_s, kw_t;
    FlowPolytope g;
    Index nedges = 0;
    if (!(hs >> kw_nodes >> g.nodes >> kw_edges >> nedges >> kw_s >> g.source >> kw_t >>
          g.sink) ||
        kw_nodes != "nodes" || kw_edges != "edges" || kw_s != "s" || kw_t != "t")
        throw InputError("flow graph: bad header, expected 'nodes N edges K s S t T'");
    g.edges.reserve(static_cast<std::size_t>(nedges));
    for (Index e = 0; e < nedges; ++e) {
        int u = 0, v = 0;
        if (!(in >> u >> v))
            throw InputError("flow graph: missing edge line " + std::to_string(e + 1));
        g.edges.emplace_back(u, v);
    }
    validate_flow(g);
    return g;
}

FlowPolytope load_flow_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open flow graph file: " + path);
    return parse_flow_graph(f);
}

}  // namespace ofw
