#include <CLI11.hpp>
#include <iostream>

#include "ofw/cf_bench.hpp"
#include "ofw/checks.hpp"

namespace {

using namespace ofw;

struct RunArgs {
    std::string domain = "simplex";
    std::string setting = "stoch_smooth";
    std::string pattern = "alternating";
    int T = 1000;
    std::uint64_t seed = 0;
    int n = 10;
    double L = 1.0;
    double D = 0.0;  // 0: derived from the domain
    double tol = 1e-5;
    int mc_samples = 64;
    std::string out;
};

DomainSpec make_run_domain(const RunArgs& a) {
    if (a.domain == "simplex") return Simplex{a.n};
    if (a.domain == "ball") {
        const double radius = a.D > 0.0 ? a.D / 2.0 : 1.0;
        return Ball{a.n, radius};
    }
    throw ConfigError("run: --domain must be simplex or ball");
}

int do_run(const RunArgs& a) {
    const DomainSpec domain = make_run_domain(a);
    const Setting setting = setting_from_name(a.setting);

    StreamSpec spec;
    spec.horizon = a.T;
    spec.seed = a.seed;
    switch (setting) {
        case Setting::StochSmooth:
            spec.family = StreamFamily::Quadratic;
            if (std::holds_alternative<Simplex>(domain))
                throw ConfigError("run: the quadratic stream needs --domain ball");
            spec.target_radius = 0.5 * std::get<Ball>(domain).radius;
            break;
        case Setting::StochNonsmooth:
            spec.family = StreamFamily::Absolute;
            if (std::holds_alternative<Simplex>(domain))
                throw ConfigError("run: the absolute stream needs --domain ball");
            break;
        case Setting::Adversarial:
            spec.family = StreamFamily::LinearAdversarial;
            spec.pattern = pattern_from_name(a.pattern);
            spec.grad_norm = a.L;
            break;
    }
    GeneratedStream gen = gen_stream(spec, domain);

    RunConfig rc;
    rc.T = a.T;
    rc.seed = a.seed;
    rc.meta = gen.meta;
    rc.power_tol = a.tol;
    rc.mc_samples = a.mc_samples;
    rc.record_iterates = true;
    OfwResult res = run_ofw(domain, gen.events, setting, rc);

    // Fill cum_regret: against f* for stochastic streams, against the
    // best fixed point per prefix for adversarial ones.
    std::vector<double> series;
    if (setting == Setting::Adversarial) {
        std::vector<double> losses, prefix_min;
        VectorXd cum_g = VectorXd::Zero(domain_dim(domain));
        for (int t = 0; t < a.T; ++t) {
            losses.push_back(res.trace.records[static_cast<std::size_t>(t)].loss);
            cum_g += std::get<LinearCost>(gen.events[static_cast<std::size_t>(t)]).grad;
            prefix_min.push_back(linear_min_value(domain, cum_g));
        }
        series = regret_of_prefix(losses, prefix_min);
    } else {
        const double fstar_min = gen.fstar(fstar_argmin(gen, domain));
        double acc = 0.0;
        for (const auto& x_t : res.iterates) {
            acc += gen.fstar(x_t) - fstar_min;
            series.push_back(acc);
        }
    }
    for (std::size_t t = 0; t < series.size(); ++t)
        res.trace.records[t].cum_regret = series[t];

    if (!a.out.empty()) {
        res.trace.write_csv_file(a.out);
    } else {
        res.trace.write_csv(std::cout);
    }
    return 0;
}

struct CompareArgs {
    std::string ratings;
    double tau = 0.0;
    int T = 5000;
    std::uint64_t seed = 0;
    int m = 100, n = 120, rank = 5;
    double tol = 1e-5;
    std::string algos = "both";
    std::string out;
};

int do_compare(const CompareArgs& a) {
    BenchConfig cfg;
    cfg.T = a.T;
    cfg.seed = a.seed;
    cfg.tau = a.tau;
    cfg.power_tol = a.tol;
    cfg.rank = a.rank;
    cfg.out_prefix = a.out;
    if (a.algos == "ofw") cfg.algos = BenchAlgo::Ofw;
    else if (a.algos == "ogd") cfg.algos = BenchAlgo::Ogd;
    else if (a.algos == "both") cfg.algos = BenchAlgo::Both;
    else throw ConfigError("compare: --algos must be ofw, ogd, or both");

    std::vector<CostEvent> events;
    CostMetadata meta;
    double tau = a.tau;
    if (!a.ratings.empty()) {
        RatingData data = load_ratings(a.ratings);
        cfg.m = data.m;
        cfg.n = data.n;
        if (!(tau > 0.0)) throw ConfigError("compare: --tau required with --ratings");
        events = events_from_ratings(data, a.T);
        double max_abs = 0.0;
        for (const auto& r : data.records) max_abs = std::max(max_abs, std::abs(r.rating));
        meta.dim = static_cast<int>(data.m * data.n);
        meta.beta = 1.0;
        meta.L = 2.0 * (tau + max_abs);
    } else {
        cfg.m = a.m;
        cfg.n = a.n;
        auto [ev, gen] = make_synthetic_stream(cfg);
        events = std::move(ev);
        meta = gen.meta;
        if (!(tau > 0.0)) tau = gen.planted_trace;
    }
    BenchResult result = run_cf_compare(cfg, events, meta, tau);
    print_summary(std::cout, result.summary);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Projection-free online convex optimization toolkit"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "Run one algorithm on one domain/setting");
    run->add_option("--domain", run_args.domain, "simplex | ball");
    run->add_option("--setting", run_args.setting,
                    "stoch_smooth | stoch_nonsmooth | adversarial");
    run->add_option("--pattern", run_args.pattern,
                    "adversarial pattern: alternating | random_sign | drifting");
    run->add_option("--T", run_args.T, "horizon");
    run->add_option("--seed", run_args.seed, "RNG seed");
    run->add_option("--n", run_args.n, "ambient dimension");
    run->add_option("--L", run_args.L, "Lipschitz constant for adversarial streams");
    run->add_option("--D", run_args.D, "domain diameter override (ball)");
    run->add_option("--tol", run_args.tol, "power iteration tolerance");
    run->add_option("--mc-samples", run_args.mc_samples, "Monte Carlo samples");
    run->add_option("--out", run_args.out, "trace CSV path (default: stdout)");

    CompareArgs cmp_args;
    auto* cmp = app.add_subcommand("compare", "Collaborative-filtering OFW vs OGD benchmark");
    cmp->add_option("--ratings", cmp_args.ratings, "ratings CSV (user,item,rating; 1-based)");
    cmp->add_option("--tau", cmp_args.tau, "trace norm bound");
    cmp->add_option("--T", cmp_args.T, "horizon");
    cmp->add_option("--seed", cmp_args.seed, "RNG seed");
    cmp->add_option("--m", cmp_args.m, "synthetic rows");
    cmp->add_option("--n", cmp_args.n, "synthetic cols");
    cmp->add_option("--rank", cmp_args.rank, "synthetic planted rank");
    cmp->add_option("--tol", cmp_args.tol, "power iteration tolerance");
    cmp->add_option("--algos", cmp_args.algos, "ofw | ogd | both");
    cmp->add_option("--out", cmp_args.out, "trace CSV path prefix");

    std::uint64_t check_seed = 7;
    auto* lmo_check = app.add_subcommand("lmo-check", "Brute-force LMO equivalence suite");
    lmo_check->add_option("--seed", check_seed, "RNG seed");
    auto* bounds_check =
        app.add_subcommand("bounds-check", "Gap and regret bound assertion suites");
    bounds_check->add_option("--seed", check_seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) return do_run(run_args);
        if (cmp->parsed()) return do_compare(cmp_args);
        if (lmo_check->parsed())
            return ofw::report_checks(std::cout, ofw::lmo_equivalence_checks(check_seed)) ? 0 : 1;
        if (bounds_check->parsed())
            return ofw::report_checks(std::cout, ofw::bound_checks(check_seed)) ? 0 : 1;
    } catch (const ofw::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
