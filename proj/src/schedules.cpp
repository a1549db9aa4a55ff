#include "varsmooth/schedules.hpp"

#include <cmath>

namespace varsmooth {

namespace {
void validate(const ScheduleKind& kind) {
    if (!(kind.b > 0)) throw param_error("schedule: b must be > 0");
    if (!(kind.norm_k2 > 0)) throw param_error("schedule: normK2 must be > 0");
}

double inv_k32(std::int64_t k) {
    const double kd = static_cast<double>(k);
    return 1.0 / (kd * std::sqrt(kd));
}
} // namespace

ScheduleState schedule_init(const ScheduleKind& kind) {
    validate(kind);
    ScheduleState s;
    s.k = 1;
    s.t = 1.0;
    s.rho = 0.0;
    switch (kind.variant) {
    case ScheduleVariant::vast_default:
    case ScheduleVariant::nesterov_const_mu:
        s.mu = kind.b * kind.norm_k2;
        s.gamma = kind.b;
        break;
    case ScheduleVariant::svast:
        s.mu = kind.b * kind.norm_k2; // k^{-3/2} = 1 at k = 1
        s.gamma = kind.b;
        break;
    }
    return s;
}

ScheduleState schedule_advance(const ScheduleState& s, const ScheduleKind& kind) {
    validate(kind);
    ScheduleState n;
    n.k = s.k + 1;
    switch (kind.variant) {
    case ScheduleVariant::vast_default: {
        n.t = std::sqrt(s.t * s.t + 2.0 * s.t);
        n.mu = s.mu * (s.t * s.t) / (n.t * n.t - n.t);
        n.gamma = n.mu / kind.norm_k2;
        break;
    }
    case ScheduleVariant::nesterov_const_mu: {
        n.t = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * s.t * s.t));
        n.mu = s.mu;
        n.gamma = s.gamma;
        break;
    }
    case ScheduleVariant::svast: {
        n.t = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * s.t * s.t));
        n.mu = kind.b * kind.norm_k2 * inv_k32(n.k);
        n.gamma = kind.b * inv_k32(n.k);
        break;
    }
    }
    n.rho = s.t * s.t - n.t * n.t + n.t;
    return n;
}

} // namespace varsmooth
