#include "ofw/trace.hpp"

#include <fstream>
#include <iomanip>

#include "ofw/errors.hpp"

namespace ofw {

void RegretTrace::write_csv(std::ostream& out) const {
    out << "t,loss,cum_regret,delta_t,support_size,elapsed_ns\n";
    out << std::setprecision(17);
    for (const auto& r : records) {
        out << r.t << ',' << r.loss << ',' << r.cum_regret << ',';
        if (r.delta_t) out << *r.delta_t;
        out << ',' << r.support_size << ',' << r.elapsed_ns << '\n';
    }
}

void RegretTrace::write_csv_file(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw InputError("cannot open trace output file: " + path);
    write_csv(f);
}

struct TraceCsvWriter::Impl {
    std::ofstream out;
    int flush_every = 100;
    int pending = 0;
};

TraceCsvWriter::TraceCsvWriter(const std::string& path, int flush_every)
    : impl_(std::make_shared<Impl>()) {
    impl_->out.open(path);
    if (!impl_->out) throw InputError("cannot open trace output file: " + path);
    impl_->flush_every = flush_every > 0 ? flush_every : 1;
    impl_->out << "t,loss,cum_regret,delta_t,support_size,elapsed_ns\n";
    impl_->out << std::setprecision(17);
}

void TraceCsvWriter::append(const TraceRecord& r) {
    auto& out = impl_->out;
    out << r.t << ',' << r.loss << ',' << r.cum_regret << ',';
    if (r.delta_t) out << *r.delta_t;
    out << ',' << r.support_size << ',' << r.elapsed_ns << '\n';
    if (++impl_->pending >= impl_->flush_every) {
        out.flush();
        impl_->pending = 0;
    }
}

}  // namespace ofw
