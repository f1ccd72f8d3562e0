#include "ofw/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ofw {

void CostMetadata::validate() const {
    if (!(L > 0.0)) throw ConfigError("CostMetadata: L must be > 0");
    if (beta && *beta < 0.0) throw ConfigError("CostMetadata: beta must be >= 0");
    if (sigma && *sigma < 0.0) throw ConfigError("CostMetadata: sigma must be >= 0");
    if (dim <= 0) throw ConfigError("CostMetadata: dim must be positive");
}

const char* setting_name(Setting s) {
    switch (s) {
        case Setting::StochSmooth: return "stoch_smooth";
        case Setting::StochNonsmooth: return "stoch_nonsmooth";
        case Setting::Adversarial: return "adversarial";
    }
    return "?";
}

Setting setting_from_name(const std::string& name) {
    if (name == "stoch_smooth") return Setting::StochSmooth;
    if (name == "stoch_nonsmooth") return Setting::StochNonsmooth;
    if (name == "adversarial") return Setting::Adversarial;
    throw ConfigError("unknown setting: " + name);
}

void Schedule::validate() const {
    if (!(L > 0.0)) throw ConfigError("Schedule: L must be > 0");
    if (!(D > 0.0)) throw ConfigError("Schedule: D must be > 0");
    if (B < 0.0) throw ConfigError("Schedule: B must be >= 0");
    if (S < 0.0) throw ConfigError("Schedule: S must be >= 0");
    if (b < -1.0 || b > 0.5) throw ConfigError("Schedule: b outside [-1, 1/2]");
    if (s < 0.0 || s > 1.0) throw ConfigError("Schedule: s outside [0, 1]");
    if (!(d > 0.0 && d <= 1.0)) throw ConfigError("Schedule: d outside (0, 1]");
    if (a < 0.0) throw ConfigError("Schedule: a must be >= 0");

    const double d_smooth_branch = (1.0 + b) / 2.0;
    const double d_strong_branch = (2.0 + 2.0 * b - s) / 3.0;
    const bool on_smooth_branch = std::abs(d - d_smooth_branch) <= 1e-12;
    const bool on_strong_branch = std::abs(d - d_strong_branch) <= 1e-12;
    if (!on_smooth_branch && !on_strong_branch)
        throw ConfigError("Schedule: d matches neither (1+b)/2 nor (2+2b-s)/3");

    const double c_floor = std::max(9.0 * D * D * B, 3.0 * L * D);
    if (C < c_floor * (1.0 - 1e-12))
        throw ConfigError("Schedule: C below max{9 D^2 B, 3 L D}");
    if (on_strong_branch && !on_smooth_branch && S > 0.0 &&
        C < 36.0 * L * L / S * (1.0 - 1e-12))
        throw ConfigError("Schedule: C below 36 L^2 / S on the strongly convex branch");
}

double Schedule::step(int t) const {
    if (t < 1) throw ParamError("Schedule::step: t must be >= 1");
    return std::pow(static_cast<double>(t), -a);
}

double Schedule::gap_bound(int t) const {
    if (t < 1) throw ParamError("Schedule::gap_bound: t must be >= 1");
    return C * std::pow(static_cast<double>(t), -d);
}

Schedule schedule_from_setting(const CostMetadata& meta, double D, Setting setting) {
    meta.validate();
    if (!(D > 0.0)) throw ConfigError("schedule_from_setting: D must be > 0");
    const double L = meta.L;
    Schedule sch;
    sch.L = L;
    sch.D = D;
    switch (setting) {
        case Setting::StochSmooth: {
            if (!meta.beta)
                throw ConfigError("schedule_from_setting: stoch_smooth needs beta");
            const double beta = *meta.beta;
            sch.B = beta;
            sch.b = 0.0;
            sch.S = 0.0;
            sch.s = 0.0;
            sch.d = (1.0 + sch.b) / 2.0;
            sch.a = sch.d - sch.b;
            sch.C = std::max(9.0 * D * D * beta, 3.0 * L * D);
            break;
        }
        case Setting::StochNonsmooth: {
            // OFW runs on the delta_t-smoothed costs, which are
            // (sqrt(n) L / D) t^{1/3}-smooth for delta_t = sqrt(n) D t^{-1/3}.
            const double sqrt_n = std::sqrt(static_cast<double>(meta.dim));
            sch.B = sqrt_n * L / D;
            sch.b = -1.0 / 3.0;
            sch.S = 0.0;
            sch.s = 0.0;
            sch.d = 1.0 / 3.0;
            sch.a = 2.0 / 3.0;
            sch.C = std::max(9.0 * sqrt_n * L * D, 3.0 * L * D);
            break;
        }
        case Setting::Adversarial: {
            // Surrogate costs are (L/D) t^{-1/4}-smooth and -strongly convex.
            sch.B = L / D;
            sch.b = 0.25;
            sch.S = L / D;
            sch.s = 0.25;
            sch.d = 0.75;
            sch.a = 0.25;
            sch.C = 36.0 * L * D;
            break;
        }
    }
    sch.validate();
    return sch;
}

}  // namespace ofw
