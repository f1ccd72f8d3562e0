#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/SVD>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "ofw/cf_bench.hpp"

using namespace ofw;

TEST_CASE("parse_ratings: plain rows") {
    std::istringstream in("1,2,5.0\n2,1,3.0\n");
    RatingData data = parse_ratings(in);
    CHECK(data.m == 2);
    CHECK(data.n == 2);
    REQUIRE(data.records.size() == 2);
    CHECK(data.records[0].user == 0);  // 0-based internally
    CHECK(data.records[0].item == 1);
    CHECK(data.records[0].rating == doctest::Approx(5.0));
    CHECK(data.records[1].user == 1);
    CHECK(data.records[1].item == 0);
    CHECK(data.records[1].rating == doctest::Approx(3.0));
}

TEST_CASE("parse_ratings: header row skipped") {
    std::istringstream in("user,item,rating\n3,4,2.5\n");
    RatingData data = parse_ratings(in);
    REQUIRE(data.records.size() == 1);
    CHECK(data.m == 3);
    CHECK(data.n == 4);
    CHECK(data.records[0].rating == doctest::Approx(2.5));
}

TEST_CASE("parse_ratings: malformed input rejected with a line number") {
    std::istringstream bad("1,2,5.0\n1,not_a_number\n");
    try {
        parse_ratings(bad);
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("2") != std::string::npos);
    }

    std::istringstream zero("0,1,2.0\n");
    CHECK_THROWS_AS(parse_ratings(zero), InputError);
}

TEST_CASE("parse_ratings: round-trip of 1000 random records") {
    std::mt19937_64 rng(15);
    std::uniform_int_distribution<int> user(1, 40), item(1, 60);
    std::uniform_real_distribution<double> rating(-5.0, 5.0);
    const std::string path = "cf_roundtrip_test.csv";
    std::vector<RatingRecord> originals;
    {
        std::ofstream out(path);
        out << "user,item,rating\n";
        out.precision(17);
        for (int k = 0; k < 1000; ++k) {
            RatingRecord r{user(rng) - 1, item(rng) - 1, rating(rng)};
            originals.push_back(r);
            out << (r.user + 1) << "," << (r.item + 1) << "," << r.rating << "\n";
        }
    }
    RatingData data = load_ratings(path);
    std::remove(path.c_str());
    REQUIRE(data.records.size() == originals.size());
    for (std::size_t k = 0; k < originals.size(); ++k) {
        CHECK(data.records[k].user == originals[k].user);
        CHECK(data.records[k].item == originals[k].item);
        CHECK(data.records[k].rating == originals[k].rating);
    }
}

TEST_CASE("events_from_ratings: clipping and bounds") {
    RatingData data;
    data.m = 3;
    data.n = 3;
    data.records = {{0, 1, 2.0}, {2, 2, -1.0}};
    std::vector<CostEvent> events = events_from_ratings(data, 2);
    REQUIRE(events.size() == 2);
    const auto& mc = std::get<MatrixEntryCost>(events[1]);
    CHECK(mc.row == 2);
    CHECK(mc.col == 2);
    CHECK(mc.rating == doctest::Approx(-1.0));
    CHECK_THROWS_AS(events_from_ratings(data, 3), InputError);
}

TEST_CASE("make_synthetic_stream: ratings equal planted entries") {
    BenchConfig cfg;
    cfg.m = 10;
    cfg.n = 12;
    cfg.T = 100;
    cfg.seed = 4;
    cfg.rank = 2;
    auto [events, gen] = make_synthetic_stream(cfg);
    REQUIRE(events.size() == 100);
    for (const auto& e : events) {
        const auto& mc = std::get<MatrixEntryCost>(e);
        CHECK(mc.rating == doctest::Approx(gen.planted(mc.row, mc.col)));
    }
}

TEST_CASE("run_cf_compare: T = 1") {
    BenchConfig cfg;
    cfg.m = 6;
    cfg.n = 7;
    cfg.T = 1;
    cfg.seed = 1;
    auto [events, gen] = make_synthetic_stream(cfg);
    BenchResult res = run_cf_compare(cfg, events, gen.meta, gen.planted_trace);
    REQUIRE(res.ofw_trace.records.size() == 1);
    REQUIRE(res.ogd_trace.records.size() == 1);
    CHECK(res.ofw_trace.records[0].support_size == 1);
}

TEST_CASE("run_cf_compare: small benchmark invariants") {
    BenchConfig cfg;
    cfg.m = 20;
    cfg.n = 25;
    cfg.T = 300;
    cfg.seed = 3;
    cfg.algos = BenchAlgo::Ofw;
    auto [events, gen] = make_synthetic_stream(cfg);
    const double tau = gen.planted_trace;

    BenchResult a = run_cf_compare(cfg, events, gen.meta, tau);
    REQUIRE(a.ofw_trace.records.size() == 300);
    for (const auto& rec : a.ofw_trace.records) CHECK(rec.support_size <= rec.t);
    CHECK(a.summary.window == 15);  // T / 20

    // determinism: bit-identical loss columns across two runs
    BenchResult b = run_cf_compare(cfg, events, gen.meta, tau);
    for (std::size_t t = 0; t < a.ofw_trace.records.size(); ++t)
        CHECK(a.ofw_trace.records[t].loss == b.ofw_trace.records[t].loss);
}

TEST_CASE("OFW trace-norm feasibility by dense reconstruction") {
    BenchConfig cfg;
    cfg.m = 12;
    cfg.n = 15;
    cfg.T = 200;
    cfg.seed = 5;
    auto [events, gen] = make_synthetic_stream(cfg);
    const double tau = gen.planted_trace;

    RunConfig rc;
    rc.T = cfg.T;
    rc.seed = cfg.seed;
    rc.meta = gen.meta;
    const DomainSpec domain = TraceNormBall{cfg.m, cfg.n, tau};
    OfwResult res = run_ofw(domain, events, Setting::StochSmooth, rc);
    const VectorXd flat = iterate_densify(res.iterate);
    MatrixXd X(cfg.m, cfg.n);
    for (Index i = 0; i < cfg.m; ++i)
        for (Index j = 0; j < cfg.n; ++j) X(i, j) = flat[i * cfg.n + j];
    const double tn = Eigen::JacobiSVD<MatrixXd>(X).singularValues().sum();
    CHECK(tn <= tau + 1e-6);
}

TEST_CASE("windowed_mean_loss") {
    RegretTrace trace;
    for (int t = 1; t <= 10; ++t) {
        TraceRecord r;
        r.t = t;
        r.loss = static_cast<double>(t);
        trace.records.push_back(r);
    }
    CHECK(windowed_mean_loss(trace, 1, 4) == doctest::Approx(2.5));
    CHECK(windowed_mean_loss(trace, 7, 4) == doctest::Approx(8.5));
}
