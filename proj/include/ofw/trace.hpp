#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ofw {

// One row of a run's per-round record.
struct TraceRecord {
    int t = 0;
    double loss = 0.0;
    double cum_regret = 0.0;
    std::optional<double> delta_t;  // surrogate gap, when a closed-form minimizer exists
    int support_size = 0;
    std::int64_t elapsed_ns = 0;
};

struct RegretTrace {
    std::vector<TraceRecord> records;

    // CSV with header t,loss,cum_regret,delta_t,support_size,elapsed_ns;
    // delta_t is left empty when absent.
    void write_csv(std::ostream& out) const;
    void write_csv_file(const std::string& path) const;
};

// Append-only CSV writer for long runs; flushes every `flush_every` rows
// so an interrupted run leaves usable partial data.
class TraceCsvWriter {
  public:
    explicit TraceCsvWriter(const std::string& path, int flush_every = 100);
    void append(const TraceRecord& r);

  private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

}  // namespace ofw
