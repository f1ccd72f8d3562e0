#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ofw/ogd.hpp"
#include "ofw/streams.hpp"

using namespace ofw;

namespace {

VectorXd make_vec(std::initializer_list<double> vals) {
    VectorXd v(static_cast<Index>(vals.size()));
    Index i = 0;
    for (double x : vals) v[i++] = x;
    return v;
}

}  // namespace

TEST_CASE("ogd_round: ball examples") {
    const DomainSpec ball = Ball{2, 1.0};
    CHECK(ogd_round(ball, make_vec({1, 0}), make_vec({1, 0}), 0.5)
              .isApprox(make_vec({0.5, 0})));
    CHECK(ogd_round(ball, make_vec({1, 0}), make_vec({-2, 0}), 1.0)
              .isApprox(make_vec({1, 0})));  // (3,0) clamped to the boundary
    CHECK_THROWS_AS(ogd_round(ball, make_vec({1, 0}), make_vec({1, 0}), 0.0), ParamError);
}

TEST_CASE("ogd_round: simplex example") {
    const DomainSpec simplex = Simplex{3};
    const VectorXd x = VectorXd::Constant(3, 1.0 / 3.0);
    const VectorXd got = ogd_round(simplex, x, make_vec({1, 0, 0}), 0.5);
    const VectorXd want = project_simplex(make_vec({-1.0 / 6, 1.0 / 3, 1.0 / 3}));
    CHECK(got.isApprox(want, 1e-12));
    CHECK(std::abs(got.sum() - 1.0) <= 1e-9);
}

TEST_CASE("ogd_round: no projection oracle for flow or matroid domains") {
    FlowPolytope g;
    g.nodes = 2;
    g.edges = {{0, 1}};
    g.source = 0;
    g.sink = 1;
    CHECK_THROWS_AS(ogd_round(DomainSpec{g}, make_vec({0}), make_vec({1}), 0.1), ConfigError);
}

TEST_CASE("run_ogd: T = 1 takes one projected step") {
    StreamSpec spec;
    spec.family = StreamFamily::Quadratic;
    spec.horizon = 1;
    const DomainSpec domain = Ball{3, 1.0};
    GeneratedStream gen = gen_stream(spec, domain);
    OgdConfig cfg;
    cfg.T = 1;
    cfg.meta = gen.meta;
    OgdResult res = run_ogd(domain, gen.events, cfg);
    REQUIRE(res.trace.records.size() == 1);
    // x1 = 0 on the ball, eta_1 = D / L
    const double eta1 = domain_diameter(domain) / gen.meta.L;
    const VectorXd want =
        project_ball(-eta1 * cost_subgradient(gen.events[0], VectorXd::Zero(3)), 1.0);
    CHECK(res.final_point.isApprox(want, 1e-12));
}

TEST_CASE("run_ogd: feasibility after every round") {
    StreamSpec spec;
    spec.family = StreamFamily::LinearAdversarial;
    spec.pattern = AdvPattern::RandomSign;
    spec.horizon = 300;
    spec.seed = 2;

    const DomainSpec simplex = Simplex{5};
    GeneratedStream gs = gen_stream(spec, simplex);
    OgdConfig cfg;
    cfg.T = 300;
    cfg.meta = gs.meta;
    cfg.record_iterates = true;
    OgdResult rs = run_ogd(simplex, gs.events, cfg);
    for (const auto& x : rs.iterates) {
        CHECK(std::abs(x.sum() - 1.0) <= 1e-8);
        CHECK(x.minCoeff() >= -1e-8);
    }

    const DomainSpec ball = Ball{5, 2.0};
    GeneratedStream gb = gen_stream(spec, ball);
    cfg.meta = gb.meta;
    OgdResult rb = run_ogd(ball, gb.events, cfg);
    for (const auto& x : rb.iterates) CHECK(x.norm() <= 2.0 + 1e-8);
}

TEST_CASE("run_ogd: determinism given seed and stream") {
    StreamSpec spec;
    spec.family = StreamFamily::Quadratic;
    spec.horizon = 100;
    spec.seed = 9;
    const DomainSpec domain = Ball{4, 1.0};
    GeneratedStream gen = gen_stream(spec, domain);
    OgdConfig cfg;
    cfg.T = 100;
    cfg.meta = gen.meta;
    OgdResult a = run_ogd(domain, gen.events, cfg);
    OgdResult b = run_ogd(domain, gen.events, cfg);
    CHECK(a.final_point == b.final_point);
    for (std::size_t t = 0; t < a.trace.records.size(); ++t)
        CHECK(a.trace.records[t].loss == b.trace.records[t].loss);
}

TEST_CASE("run_ogd: average regret slope near -1/2 on a smooth stochastic stream") {
    StreamSpec spec;
    spec.family = StreamFamily::Quadratic;
    spec.horizon = 10000;
    spec.seed = 4;
    spec.target_radius = 0.5;
    const DomainSpec domain = Ball{4, 1.0};
    GeneratedStream gen = gen_stream(spec, domain);
    OgdConfig cfg;
    cfg.T = 10000;
    cfg.meta = gen.meta;
    cfg.record_iterates = true;
    OgdResult res = run_ogd(domain, gen.events, cfg);

    const double fmin = gen.fstar(fstar_argmin(gen, domain));
    std::vector<double> avg_regret;
    double acc = 0.0;
    for (std::size_t t = 0; t < res.iterates.size(); ++t) {
        acc += gen.fstar(res.iterates[t]) - fmin;
        avg_regret.push_back(acc / static_cast<double>(t + 1));
    }
    const double slope = loglog_slope(avg_regret, 1000, 10000);
    CHECK(std::abs(slope - (-0.5)) <= 0.1);
}
