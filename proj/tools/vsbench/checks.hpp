#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "varsmooth/moreau.hpp"

namespace vsbench {

/// A named property; returns the first counterexample found, or nothing.
struct PropertyCheck {
    std::string name;
    std::function<std::optional<std::string>(varsmooth::RngStream&, int trials)> run;
};

/// Every registered property: the envelope lemma suite, schedule identities,
/// adjoint tests, estimator moments and the Moreau decomposition.
const std::vector<PropertyCheck>& property_checks();

/// The finite-difference gradient property, parameterized over the gradient
/// implementation so tests can verify that a perturbed gradient fails it.
std::optional<std::string> composite_grad_fd_property(
    varsmooth::RngStream& rng, int trials,
    const std::function<varsmooth::BlockVector(const varsmooth::SmoothedTerm&, double,
                                               const varsmooth::BlockVector&)>& grad);

struct CheckReport {
    std::string name;
    bool passed;
    std::string message; // counterexample text when failed
};

std::vector<CheckReport> run_all_checks(std::uint64_t seed, int trials);

} // namespace vsbench
