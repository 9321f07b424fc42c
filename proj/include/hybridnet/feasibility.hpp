#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hybridnet/montecarlo.hpp"
#include "hybridnet/params.hpp"

namespace hybridnet {

enum class NetworkKind { cellular, hybrid };
enum class NoiseRegime { nonzero, interference_limited };
enum class MptKind { none, isotropic, directed };
enum class StorageKind { large, small };

/// Which feasibility region is being evaluated. For the interference-limited
/// regime the threshold parameter is mu_tilde and sigma^2/mu is replaced by
/// 1/mu_tilde throughout.
struct RegionConfig {
    NetworkKind network = NetworkKind::cellular;
    NoiseRegime noise = NoiseRegime::nonzero;
    MptKind mpt = MptKind::none;
    StorageKind storage = StorageKind::large;

    void validate() const;
};

/// A traced region boundary: minimal feasible co-parameter per grid point
/// (min p for cellular, min lambda_p for hybrid). Infeasible grid points are
/// marked, not thrown.
struct BoundaryCurve {
    RegionConfig config;
    double q = 0.0; // PB power used for hybrid curves (ignored for cellular)
    std::vector<double> lambda_b_grid;
    std::vector<double> min_co_param;
    std::vector<char> infeasible_mask;
};

/// Minimum mobile power satisfying the outage constraint at a BS density.
/// Returns +inf for lambda_b == 0.
double cellular_min_power(double lambda_b, double mu_threshold, double sigma2, double alpha,
                          NoiseRegime noise = NoiseRegime::nonzero);

/// Minimum PB density for a hybrid configuration, or nullopt when the
/// existence condition fails for every lambda_p.
std::optional<double> hybrid_min_pb_density(double lambda_b, double q,
                                            const SystemParams& system, double mu_threshold,
                                            const RegionConfig& config);

/// Membership test for the configured region (inner bound where the region
/// is only bounded).
bool region_contains(const DeploymentParams& point, const SystemParams& system,
                     double mu_threshold, const RegionConfig& config);

BoundaryCurve trace_boundary(const RegionConfig& config, const SystemParams& system,
                             double mu_threshold, std::span<const double> lambda_b_grid,
                             double q);

struct VerifyOptions {
    std::vector<double> factors{2.0, 0.1}; // co-parameter scaling per test point
    std::size_t max_grid_points = 2;       // finite grid points sampled per curve
};

struct VerifyPoint {
    double lambda_b = 0.0;
    double co_param = 0.0; // scaled co-parameter actually simulated
    double factor = 1.0;
    double p_used = 0.0;   // mobile power fed into the outage estimator
    double p_out = 0.0;
    double p_out_stderr = 0.0;
    bool expected_feasible = false; // factor >= 1 for a valid (inner) boundary
    bool observed_feasible = false; // P_out <= epsilon + 3 stderr
    bool pass = false;
};

struct VerifyReport {
    std::vector<VerifyPoint> points;
    bool all_pass = true;
};

/// Re-derives the mobile power at scaled boundary points through the Monte
/// Carlo pipeline (mean power or power quantile, then outage) and checks the
/// outage constraint against the boundary's prediction.
VerifyReport verify_boundary_by_simulation(const BoundaryCurve& curve,
                                           const SystemParams& system, std::uint64_t trials,
                                           std::uint64_t seed, VerifyOptions opts = {});

} // namespace hybridnet
