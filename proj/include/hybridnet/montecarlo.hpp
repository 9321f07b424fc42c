#pragma once

#include <cstdint>
#include <vector>

#include "hybridnet/params.hpp"
#include "hybridnet/propagation.hpp"
#include "hybridnet/spatial.hpp"

namespace hybridnet {

/// Monte Carlo scalar with its standard error and 95% CI.
struct Estimate {
    double value = 0.0;
    double stderr_ = 0.0;
    std::uint64_t trials = 0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
};

/// Threshold constant estimated as an empirical quantile, with bootstrap CI.
struct MuEstimate {
    double mu = 0.0;
    double epsilon = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    std::uint64_t trials = 0;
};

/// Thrown by estimate_mu when epsilon is at or below the interference-limited
/// outage floor, where no positive mu exists.
class InfeasibleEpsilon : public std::domain_error {
public:
    InfeasibleEpsilon(double epsilon, double floor)
        : std::domain_error("epsilon " + std::to_string(epsilon)
                            + " is not above the interference-limited floor "
                            + std::to_string(floor)),
          epsilon_target(epsilon), outage_floor(floor) {}
    double epsilon_target;
    double outage_floor;
};

struct McOptions {
    double truncation_factor = 20.0;
};

/// Fraction of realizations with p|U_0|^{-alpha} / (I + sigma^2) < theta.
Estimate estimate_outage(const SystemParams& system, const DeploymentParams& deployment,
                         std::uint64_t trials, std::uint64_t seed, McOptions opts = {});

/// Quantile threshold of the unit-density interference statistic: mu such
/// that Pr(S + mu > 0) = epsilon, where
/// S = sum_{Y not in {Y_0} u C} |U_Y|^{-alpha} - theta^{-1}|U_0|^{-alpha}.
MuEstimate estimate_mu(const SystemParams& system, double epsilon, std::uint64_t trials,
                       std::uint64_t seed, McOptions opts = {});

/// The per-trial S samples behind estimate_mu; one batch yields the whole
/// epsilon(mu) curve.
std::vector<double> sample_mu_statistic(const SystemParams& system, std::uint64_t trials,
                                        std::uint64_t seed, McOptions opts = {});

/// Outage level implied by a batch of S samples at a given mu.
Estimate epsilon_at_mu(const std::vector<double>& s_samples, double mu);

/// Fraction of realizations whose received raw power falls below threshold.
Estimate estimate_power_outage(const SystemParams& system, const DeploymentParams& deployment,
                               double threshold, MptMode mode, std::uint64_t trials,
                               std::uint64_t seed, McOptions opts = {});

/// Sample mean of the received raw power at the typical mobile.
Estimate estimate_mean_raw_power(const SystemParams& system, const DeploymentParams& deployment,
                                 MptMode mode, std::uint64_t trials, std::uint64_t seed,
                                 McOptions opts = {});

/// Empirical delta-quantile of the received raw power: the largest p with
/// Pr(P < p) <= delta, estimated from the sampled distribution.
Estimate estimate_raw_power_quantile(const SystemParams& system,
                                     const DeploymentParams& deployment, double delta,
                                     MptMode mode, std::uint64_t trials, std::uint64_t seed,
                                     McOptions opts = {});

/// Probability that a storage-backed mobile can transmit with power p.
double transmit_probability(double mean_power, double omega, double p);

} // namespace hybridnet
