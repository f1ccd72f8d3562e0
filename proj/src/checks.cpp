#include "ofw/checks.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include "ofw/engine.hpp"
#include "ofw/streams.hpp"

namespace ofw {
namespace {

// --- Brute-force oracles. These enumerate; they share no code with the
// --- LMO implementations they certify.

double brute_simplex_min(const VectorXd& c) {
    double best = c[0];
    for (Index i = 1; i < c.size(); ++i) best = std::min(best, c[i]);
    return best;
}

void enumerate_paths(const FlowPolytope& g, int node, double cost_so_far,
                     const VectorXd& cost, std::vector<Index>& edge_stack, double& best) {
    if (node == g.sink) {
        best = std::min(best, cost_so_far);
        return;
    }
    for (Index e = 0; e < g.num_edges(); ++e) {
        if (g.edges[static_cast<std::size_t>(e)].first != node) continue;
        edge_stack.push_back(e);
        enumerate_paths(g, g.edges[static_cast<std::size_t>(e)].second,
                        cost_so_far + cost[e], cost, edge_stack, best);
        edge_stack.pop_back();
    }
}

double brute_flow_min(const FlowPolytope& g, const VectorXd& cost) {
    double best = std::numeric_limits<double>::infinity();
    std::vector<Index> stack;
    enumerate_paths(g, g.source, 0.0, cost, stack, best);
    return best;
}

double brute_matroid_min(Index n, Index k, const VectorXd& c) {
    // All subsets of size <= k via bitmasks; n <= 12 keeps this cheap.
    double best = 0.0;  // empty set
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        if (static_cast<Index>(__builtin_popcountl(mask)) > k) continue;
        double val = 0.0;
        for (Index i = 0; i < n; ++i)
            if (mask & (1ul << i)) val += c[i];
        best = std::min(best, val);
    }
    return best;
}

FlowPolytope random_dag(int nodes, std::mt19937_64& rng) {
    std::bernoulli_distribution edge_coin(0.45);
    FlowPolytope g;
    g.nodes = nodes;
    g.source = 0;
    g.sink = nodes - 1;
    for (int u = 0; u < nodes; ++u)
        for (int v = u + 1; v < nodes; ++v)
            if (edge_coin(rng)) g.edges.emplace_back(u, v);
    // Guarantee feasibility with the chain 0 -> 1 -> ... -> sink.
    for (int u = 0; u + 1 < nodes; ++u) {
        bool have = false;
        for (const auto& [a, b] : g.edges)
            if (a == u && b == u + 1) have = true;
        if (!have) g.edges.emplace_back(u, u + 1);
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

CheckResult make_result(const std::string& name, bool pass, const std::string& detail) {
    return CheckResult{name, pass, pass ? "" : detail};
}

CheckResult check_simplex(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int rep = 0; rep < 200; ++rep) {
        const Index n = 2 + static_cast<Index>(rng() % 9);  // 2..10
        VectorXd c(n);
        for (Index i = 0; i < n; ++i) c[i] = gauss(rng);
        const double got = c.dot(lmo_simplex(c).vec());
        const double want = brute_simplex_min(c);
        if (std::abs(got - want) > 1e-12)
            return make_result("lmo_simplex vs vertex enumeration", false,
                               "objective mismatch " + std::to_string(got - want));
    }
    return make_result("lmo_simplex vs vertex enumeration", true, "");
}

CheckResult check_flow(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int rep = 0; rep < 200; ++rep) {
        const int nodes = 4 + static_cast<int>(rng() % 5);  // 4..8
        FlowPolytope g = random_dag(nodes, rng);
        VectorXd c(g.num_edges());
        for (Index i = 0; i < c.size(); ++i) c[i] = gauss(rng);
        const double got = c.dot(lmo_flow_dag(g, c).vec());
        const double want = brute_flow_min(g, c);
        if (std::abs(got - want) > 1e-12)
            return make_result("lmo_flow_dag vs path enumeration", false,
                               "path cost mismatch " + std::to_string(got - want));
    }
    return make_result("lmo_flow_dag vs path enumeration", true, "");
}

CheckResult check_matroid(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int rep = 0; rep < 200; ++rep) {
        const Index n = 4 + static_cast<Index>(rng() % 9);  // 4..12
        const Index k = 1 + static_cast<Index>(rng() % 4);  // 1..4
        VectorXd c(n);
        for (Index i = 0; i < n; ++i) c[i] = gauss(rng);
        const double got = c.dot(lmo_uniform_matroid(n, k, c).vec());
        const double want = brute_matroid_min(n, k, c);
        if (std::abs(got - want) > 1e-12)
            return make_result("lmo_uniform_matroid vs subset enumeration", false,
                               "objective mismatch " + std::to_string(got - want));
    }
    return make_result("lmo_uniform_matroid vs subset enumeration", true, "");
}

CheckResult check_trace_ball(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const TraceNormBall spec{20, 30, 7.0};
    for (int rep = 0; rep < 50; ++rep) {
        MatrixXd G(spec.m, spec.n);
        for (Index i = 0; i < G.size(); ++i) G.data()[i] = gauss(rng);
        DenseMap map(G);
        TopPair p = power_iteration_top_pair(map, 1e-5, 1000, rng());
        if (!p.converged)
            return make_result("lmo_trace_ball vs dense SVD", false,
                               "power iteration did not converge at tol 1e-5");
        BoundaryAtom atom = BoundaryAtom::RankOne(-spec.tau, p.u, p.v);
        const auto& f = atom.factor();
        const double got = f.scale * f.left.dot(G * f.right);  // <G, X>
        const double sigma_max = Eigen::BDCSVD<MatrixXd>(G).singularValues()[0];
        const double want = -spec.tau * sigma_max;
        if (std::abs(got - want) > 1e-4 * std::abs(want))
            return make_result("lmo_trace_ball vs dense SVD", false,
                               "objective " + std::to_string(got) + " vs " +
                                   std::to_string(want));
    }
    return make_result("lmo_trace_ball vs dense SVD", true, "");
}

CheckResult check_smooth_gap(std::uint64_t seed) {
    const DomainSpec domain = Ball{5, 1.0};
    StreamSpec spec;
    spec.family = StreamFamily::Quadratic;
    spec.horizon = 10000;
    spec.seed = seed;
    spec.target_radius = 0.5;
    VectorXd center = VectorXd::Zero(5);
    center[0] = 0.3;
    spec.center = center;
    GeneratedStream gen = gen_stream(spec, domain);
    RunConfig rc;
    rc.T = spec.horizon;
    rc.seed = seed;
    rc.meta = gen.meta;
    OfwResult res = run_ofw(domain, gen.events, Setting::StochSmooth, rc);
    const double C = res.schedule.C;
    for (const auto& rec : res.trace.records) {
        if (!rec.delta_t)
            return make_result("smooth stochastic gap schedule", false,
                               "missing delta_t at t=" + std::to_string(rec.t));
        const double bound = C / std::sqrt(static_cast<double>(rec.t)) + 1e-9;
        if (*rec.delta_t > bound) {
            std::ostringstream msg;
            msg << "delta_" << rec.t << " = " << *rec.delta_t << " > " << bound;
            return make_result("smooth stochastic gap schedule", false, msg.str());
        }
    }
    return make_result("smooth stochastic gap schedule", true, "");
}

CheckResult check_adversarial_regret(const DomainSpec& domain, AdvPattern pattern,
                                     const std::string& label, std::uint64_t seed) {
    StreamSpec spec;
    spec.family = StreamFamily::LinearAdversarial;
    spec.horizon = 4096;
    spec.seed = seed;
    spec.pattern = pattern;
    spec.grad_norm = 1.0;
    GeneratedStream gen = gen_stream(spec, domain);
    RunConfig rc;
    rc.T = spec.horizon;
    rc.seed = seed;
    rc.meta = gen.meta;
    OfwResult res = run_ofw(domain, gen.events, Setting::Adversarial, rc);
    double total_loss = 0.0;
    for (const auto& rec : res.trace.records) total_loss += rec.loss;
    Comparator comp = best_in_hindsight(domain, gen.events);
    const double regret = total_loss - comp.value * spec.horizon;
    const double L = gen.meta.L, D = domain_diameter(domain);
    const double bound = 57.0 * L * D * std::pow(static_cast<double>(spec.horizon), 0.75);
    std::ostringstream msg;
    msg << "regret " << regret << " vs bound " << bound;
    return make_result("adversarial regret bound (" + label + ")", regret <= bound, msg.str());
}

}  // namespace

std::vector<CheckResult> lmo_equivalence_checks(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<CheckResult> out;
    out.push_back(check_simplex(rng));
    out.push_back(check_flow(rng));
    out.push_back(check_matroid(rng));
    out.push_back(check_trace_ball(rng));
    return out;
}

std::vector<CheckResult> bound_checks(std::uint64_t seed) {
    std::vector<CheckResult> out;
    out.push_back(check_smooth_gap(seed));
    const std::vector<std::pair<DomainSpec, std::string>> domains = {
        {Simplex{10}, "simplex10"}, {Ball{20, 1.0}, "ball20"}};
    const std::vector<std::pair<AdvPattern, std::string>> patterns = {
        {AdvPattern::Alternating, "alternating"},
        {AdvPattern::RandomSign, "random_sign"},
        {AdvPattern::Drifting, "drifting"}};
    int k = 0;
    for (const auto& [domain, dname] : domains)
        for (const auto& [pat, pname] : patterns)
            out.push_back(check_adversarial_regret(domain, pat, dname + "/" + pname,
                                                   seed + static_cast<std::uint64_t>(k++)));
    return out;
}

bool report_checks(std::ostream& out, const std::vector<CheckResult>& results) {
    bool all = true;
    for (const auto& r : results) {
        if (r.pass) {
            out << "PASS " << r.name << "\n";
        } else {
            out << "FAIL " << r.name << ": " << r.detail << "\n";
            all = false;
        }
    }
    return all;
}

}  // namespace ofw
