#pragma once

#include <string>

#include "ofw/engine.hpp"
#include "ofw/ogd.hpp"
#include "ofw/streams.hpp"

namespace ofw {

struct RatingRecord {
    Index user = 0;  // 0-based internally; the CSV format is 1-based
    Index item = 0;
    double rating = 0.0;
};

struct RatingData {
    Index m = 0;  // users
    Index n = 0;  // items
    std::vector<RatingRecord> records;  // adversary order = file order
};

// CSV lines "user,item,rating", 1-based indices, optional header.
RatingData load_ratings(const std::string& path);
RatingData parse_ratings(std::istream& in);

enum class BenchAlgo { Ofw, Ogd, Both };

struct BenchConfig {
    Index m = 100;
    Index n = 120;
    double tau = 0.0;  // 0 means: use the planted trace norm (synthetic runs)
    int T = 5000;
    std::uint64_t seed = 0;
    BenchAlgo algos = BenchAlgo::Both;
    double power_tol = 1e-5;
    int rank = 5;                 // planted rank for synthetic data
    int cache_check_every = 0;    // OFW entry-cache spot-check period (0: off)
    std::string out_prefix;       // when set, traces go to <prefix>_{ofw,ogd}.csv
};

struct BenchSummary {
    double ofw_total_ns = 0.0;
    double ogd_total_ns = 0.0;
    double ofw_mean_round_ns = 0.0;
    double ogd_mean_round_ns = 0.0;
    double ofw_first_window_loss = 0.0;
    double ofw_final_window_loss = 0.0;
    double ogd_final_window_loss = 0.0;
    int window = 0;
    double tau = 0.0;
};

struct BenchResult {
    RegretTrace ofw_trace;
    RegretTrace ogd_trace;
    BenchSummary summary;
};

// Synthetic planted-matrix stream for the benchmark.
std::pair<std::vector<CostEvent>, GeneratedStream> make_synthetic_stream(
    const BenchConfig& config);

// Records -> MatrixEntry events in file order, clipped to T.
std::vector<CostEvent> events_from_ratings(const RatingData& data, int T);

// OFW (smooth stochastic schedule) and optionally OGD on the same
// MatrixEntry stream over TraceNormBall(m,n,tau).
BenchResult run_cf_compare(const BenchConfig& config, const std::vector<CostEvent>& events,
                           const CostMetadata& meta, double tau);

// key=value summary block.
void print_summary(std::ostream& out, const BenchSummary& s);

double windowed_mean_loss(const RegretTrace& trace, int begin_t, int window);

}  // namespace ofw
