#pragma once

#include <cstdint>

#include "varsmooth/errors.hpp"

namespace varsmooth {

/// The three parameter regimes.
///
/// vast_default couples t_{k+1} = sqrt(t_k^2 + 2 t_k) with the
/// multiplicative mu update mu_{k+1} = mu_k t_k^2 / (t_{k+1}^2 - t_{k+1}),
/// which makes (1 - 1/t_{k+1}) gamma_{k+1} t_{k+1}^2 = gamma_k t_k^2 hold to
/// rounding. nesterov_const_mu keeps mu fixed under the classical
/// t_{k+1} = (1 + sqrt(1 + 4 t_k^2)) / 2. svast uses the same t rule with
/// mu_k = b * normK2 * k^{-3/2}.
enum class ScheduleVariant { vast_default, nesterov_const_mu, svast };

struct ScheduleKind {
    ScheduleVariant variant = ScheduleVariant::vast_default;
    double b = 1.0;       // mu_1 = b * norm_k2
    double norm_k2 = 1.0; // the value used as ||K||^2
};

/// Parameters at iteration k. gamma = mu / normK2 throughout, i.e.
/// gamma_k = 1 / L_k with L_k = ||K||^2 / mu_k.
struct ScheduleState {
    std::int64_t k = 1;
    double t = 1.0;
    double mu = 0.0;
    double gamma = 0.0;
    double rho = 0.0; // t_{k-1}^2 - t_k^2 + t_k; 0 by convention at k = 1
};

ScheduleState schedule_init(const ScheduleKind& kind);
ScheduleState schedule_advance(const ScheduleState& s, const ScheduleKind& kind);

} // namespace varsmooth
