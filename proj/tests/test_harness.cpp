#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "ofw/engine.hpp"
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

TEST_CASE("gen_stream: two-point quadratic targets") {
    StreamSpec spec;
    spec.family = StreamFamily::Quadratic;
    spec.horizon = 4;
    spec.seed = 2;
    spec.two_point = make_vec({1, 0});
    GeneratedStream gen = gen_stream(spec, Ball{2, 1.0});
    REQUIRE(gen.events.size() == 4);
    VectorXd ybar = VectorXd::Zero(2);
    for (const auto& e : gen.events) {
        const VectorXd& y = std::get<QuadraticCost>(e).target;
        CHECK(std::abs(std::abs(y[0]) - 1.0) <= 1e-15);  // y = +/- e1
        CHECK(y[1] == 0.0);
        ybar += y / 4.0;
    }
    // mean of four +/-1 draws lies on the half-integer grid
    CHECK(std::abs(ybar[0] * 2.0 - std::round(ybar[0] * 2.0)) <= 1e-12);
    CHECK(gen.target_var == doctest::Approx(1.0));
}

TEST_CASE("gen_stream: deterministic given seed") {
    StreamSpec spec;
    spec.family = StreamFamily::Quadratic;
    spec.horizon = 50;
    spec.seed = 77;
    const DomainSpec domain = Ball{3, 1.0};
    GeneratedStream a = gen_stream(spec, domain);
    GeneratedStream b = gen_stream(spec, domain);
    for (std::size_t t = 0; t < a.events.size(); ++t)
        CHECK(std::get<QuadraticCost>(a.events[t]).target ==
              std::get<QuadraticCost>(b.events[t]).target);
}

TEST_CASE("gen_stream: alternating linear pattern on Simplex(2)") {
    StreamSpec spec;
    spec.family = StreamFamily::LinearAdversarial;
    spec.pattern = AdvPattern::Alternating;
    spec.horizon = 10;
    const DomainSpec domain = Simplex{2};
    GeneratedStream gen = gen_stream(spec, domain);
    VectorXd cum = VectorXd::Zero(2);
    for (int t = 0; t < 10; ++t) {
        const VectorXd& g = std::get<LinearCost>(gen.events[static_cast<std::size_t>(t)]).grad;
        CHECK(g[t % 2] == doctest::Approx(1.0));
        CHECK(g[(t + 1) % 2] == doctest::Approx(0.0));
        cum += g;
    }
    // best fixed vertex pays T/2
    CHECK(std::min(cum[0], cum[1]) == doctest::Approx(5.0));
}

TEST_CASE("gen_stream: declared Lipschitz constant covers adversarial gradients") {
    for (AdvPattern p :
         {AdvPattern::Alternating, AdvPattern::RandomSign, AdvPattern::Drifting}) {
        StreamSpec spec;
        spec.family = StreamFamily::LinearAdversarial;
        spec.pattern = p;
        spec.horizon = 64;
        spec.grad_norm = 2.5;
        GeneratedStream gen = gen_stream(spec, Ball{4, 1.0});
        for (const auto& e : gen.events)
            CHECK(std::get<LinearCost>(e).grad.norm() <= gen.meta.L + 1e-12);
    }
}

TEST_CASE("gen_stream: matrix entries come from the planted matrix") {
    StreamSpec spec;
    spec.family = StreamFamily::MatrixEntry;
    spec.horizon = 500;
    spec.seed = 6;
    spec.rank = 1;
    GeneratedStream gen = gen_stream(spec, TraceNormBall{8, 9, 5.0});
    for (const auto& e : gen.events) {
        const auto& mc = std::get<MatrixEntryCost>(e);
        CHECK(mc.rating == doctest::Approx(gen.planted(mc.row, mc.col)));
    }
    CHECK(gen.planted_trace > 0.0);
}

TEST_CASE("best_in_hindsight: quadratic closed form on the ball") {
    std::vector<CostEvent> events = {QuadraticCost{make_vec({2, 0})},
                                     QuadraticCost{make_vec({2, 0})}};
    Comparator c = best_in_hindsight(Ball{2, 1.0}, events);
    CHECK(c.x.isApprox(make_vec({1, 0})));
}

TEST_CASE("best_in_hindsight: linear closed form on the simplex") {
    std::vector<CostEvent> events = {LinearCost{make_vec({3, -1, 2})}};
    Comparator c = best_in_hindsight(Simplex{3}, events);
    CHECK(c.x.isApprox(make_vec({0, 1, 0})));
    CHECK(c.value == doctest::Approx(-1.0));
}

TEST_CASE("best_in_hindsight: absolute costs vs grid-search oracle") {
    // 1D domain [-1, 1]; targets {-1, 0, 1}; minimizer is the median 0
    // with F value 2/3.
    std::vector<CostEvent> events = {AbsoluteCost{make_vec({-1})},
                                     AbsoluteCost{make_vec({0})},
                                     AbsoluteCost{make_vec({1})}};
    const DomainSpec domain = Ball{1, 1.0};
    Comparator c = best_in_hindsight(domain, events, 20000);

    double grid_min = std::numeric_limits<double>::infinity();
    for (int k = -10000; k <= 10000; ++k) {
        const double x = k * 1e-4;
        double F = 0.0;
        for (const auto& e : events) F += cost_value(e, make_vec({x}));
        grid_min = std::min(grid_min, F / 3.0);
    }
    CHECK(grid_min == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
    CHECK(std::abs(c.value - grid_min) <= 1e-4);
    CHECK(c.value - c.gap <= grid_min + 1e-9);
}

TEST_CASE("fstar and fstar_argmin closed forms") {
    StreamSpec spec;
    spec.family = StreamFamily::Absolute;
    spec.horizon = 10;
    spec.abs_level = 0.5;
    spec.abs_bias = 0.7;
    const DomainSpec domain = Ball{2, 2.0};
    GeneratedStream gen = gen_stream(spec, domain);
    // unconstrained median (0.5, 0.5) is inside Ball(2, 2)
    const VectorXd xstar = fstar_argmin(gen, domain);
    CHECK(xstar.isApprox(make_vec({0.5, 0.5})));
    // f* at the median: each coordinate pays 2 (1 - p) c = 0.3
    CHECK(gen.fstar(xstar) == doctest::Approx(0.6));
    // any perturbation is worse
    CHECK(gen.fstar(make_vec({0.4, 0.5})) >= gen.fstar(xstar));
    CHECK(gen.fstar(make_vec({0.6, 0.5})) >= gen.fstar(xstar));
}

TEST_CASE("regret_of: zero when losses match the comparator") {
    std::vector<double> losses = {1.0, 2.0, 3.0};
    std::vector<double> series = regret_of(losses, losses);
    for (double r : series) CHECK(r == doctest::Approx(0.0));
    CHECK_THROWS_AS(regret_of(losses, {1.0}), InputError);
}

TEST_CASE("regret_of_prefix: alternating stream with constant play e1") {
    // losses 1,0,1,0,...; prefix best total = floor(t/2); final regret 0
    const int T = 10;
    std::vector<double> losses, prefix_min;
    for (int t = 1; t <= T; ++t) {
        losses.push_back(t % 2 == 1 ? 1.0 : 0.0);
        prefix_min.push_back(std::floor(t / 2.0));
    }
    std::vector<double> series = regret_of_prefix(losses, prefix_min);
    CHECK(series.back() == doctest::Approx(0.0));
    CHECK(series[0] == doctest::Approx(1.0));  // odd prefixes lead by one round
}

TEST_CASE("regret recomputation oracle on a stochastic quadratic run") {
    StreamSpec spec;
    spec.family = StreamFamily::Quadratic;
    spec.horizon = 200;
    spec.seed = 12;
    const DomainSpec domain = Ball{3, 1.0};
    GeneratedStream gen = gen_stream(spec, domain);
    RunConfig rc;
    rc.T = 200;
    rc.seed = 12;
    rc.meta = gen.meta;
    rc.record_iterates = true;
    OfwResult res = run_ofw(domain, gen.events, Setting::StochSmooth, rc);

    const VectorXd xstar = fstar_argmin(gen, domain);
    const VectorXd ey = *gen.mean_target;
    double acc = 0.0;
    for (const auto& x_t : res.iterates) {
        // direct recomputation: f*(x) - f*(x*) = |x - E y|^2 - |x* - E y|^2
        const double direct = (x_t - ey).squaredNorm() - (xstar - ey).squaredNorm();
        const double via_fstar = gen.fstar(x_t) - gen.fstar(xstar);
        CHECK(std::abs(direct - via_fstar) <= 1e-12);
        acc += via_fstar;
        CHECK(via_fstar >= -1e-12);  // comparator is the exact minimizer
    }
    CHECK(acc >= 0.0);
}

TEST_CASE("per-round gap is nonnegative for the closed-form quadratic family") {
    StreamSpec spec;
    spec.family = StreamFamily::Quadratic;
    spec.horizon = 300;
    spec.seed = 8;
    const DomainSpec domain = Ball{4, 1.0};
    GeneratedStream gen = gen_stream(spec, domain);
    RunConfig rc;
    rc.T = 300;
    rc.seed = 8;
    rc.meta = gen.meta;
    OfwResult res = run_ofw(domain, gen.events, Setting::StochSmooth, rc);
    for (const auto& rec : res.trace.records) {
        REQUIRE(rec.delta_t.has_value());
        CHECK(*rec.delta_t >= -1e-12);
    }
}

TEST_CASE("loglog_slope: recovers a known power law") {
    std::vector<double> series;
    for (int t = 1; t <= 1000; ++t) series.push_back(std::pow(t, 0.75));
    CHECK(loglog_slope(series, 10, 1000) == doctest::Approx(0.75).epsilon(1e-6));
    CHECK_THROWS_AS(loglog_slope(series, 500, 100), ParamError);
}

TEST_CASE("pattern_from_name") {
    CHECK(pattern_from_name("alternating") == AdvPattern::Alternating);
    CHECK(pattern_from_name("random_sign") == AdvPattern::RandomSign);
    CHECK(pattern_from_name("drifting") == AdvPattern::Drifting);
    CHECK_THROWS_AS(pattern_from_name("bogus"), ConfigError);
}
