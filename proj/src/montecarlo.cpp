#include "hybridnet/montecarlo.hpp"

#include <algorithm>
#include <cmath>

#include "hybridnet/parallel.hpp"

namespace hybridnet {

namespace {

constexpr double kZ95 = 1.959963984540054;

Estimate binomial_estimate(std::uint64_t successes, std::uint64_t trials) {
    Estimate e;
    e.trials = trials;
    e.value = static_cast<double>(successes) / static_cast<double>(trials);
    e.stderr_ = std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(trials));
    e.ci_lo = std::max(0.0, e.value - kZ95 * e.stderr_);
    e.ci_hi = std::min(1.0, e.value + kZ95 * e.stderr_);
    return e;
}

Estimate mean_estimate(const std::vector<double>& samples) {
    Estimate e;
    e.trials = samples.size();
    double sum = 0.0;
    for (double v : samples) sum += v;
    e.value = sum / static_cast<double>(samples.size());
    double ss = 0.0;
    for (double v : samples) {
        const double d = v - e.value;
        ss += d * d;
    }
    const double n = static_cast<double>(samples.size());
    e.stderr_ = samples.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
    e.ci_lo = e.value - kZ95 * e.stderr_;
    e.ci_hi = e.value + kZ95 * e.stderr_;
    return e;
}

// Interference statistic of one realization at unit BS density:
// S = sum over non-cancelled interferers of |U_Y|^{-alpha}
//     - theta^{-1} |U_0|^{-alpha}.
double mu_statistic_trial(const SystemParams& system, const SimWindow& window,
                          RandomStream& stream) {
    DeploymentParams unit;
    unit.p = 1.0;
    unit.lambda_b = 1.0;
    unit.lambda_p = 0.0;
    const NetworkRealization r = sample_realization(unit, system, window, stream);
    const double interference = interference_at_typical(r, 1.0, system.K, system.alpha);
    const double signal_gain = data_path_gain(norm(r.mobiles[0]), system.alpha);
    return interference - signal_gain / system.theta;
}

// Typical MPT link: the typical mobile plus the PB process. The BS process
// is sampled only to place the mobile uniformly in the origin cell.
struct TypicalLink {
    Vec2 u0;
    std::vector<Vec2> pbs;
};

TypicalLink sample_typical_link(const DeploymentParams& deployment, const SimWindow& window,
                                RandomStream& stream) {
    std::vector<Vec2> bs;
    bs.push_back({0.0, 0.0});
    auto rest = sample_ppp(deployment.lambda_b, window, stream);
    bs.insert(bs.end(), rest.begin(), rest.end());
    NearestGrid grid(bs, window.radius);

    TypicalLink link;
    std::size_t used = 0;
    link.u0 = sample_uniform_in_cell(0, bs, grid, window, stream, used, 200 * bs.size());
    link.pbs = sample_ppp(deployment.lambda_p, window, stream);
    return link;
}

// Mean raw power contributed by PBs outside the window. Added to every
// trial so the truncated window does not bias the heavy beta ~ 3 tail.
double exterior_mean_power(const DeploymentParams& deployment, const SystemParams& system,
                           const SimWindow& window) {
    return deployment.q * deployment.lambda_p * 2.0 * M_PI
           * std::pow(window.radius, 2.0 - system.beta) / (system.beta - 2.0);
}

double raw_power_trial(const TypicalLink& link, const SystemParams& system,
                       const DeploymentParams& deployment, MptMode mode, double exterior) {
    const double iso =
        deployment.q * mpt_gain_sum(link.pbs, link.u0, system.beta, system.nu) + exterior;
    if (mode == MptMode::isotropic) return iso;
    if (link.pbs.empty()) return system.z_s * iso;
    const auto [t0, d0] = nearest_index(link.pbs, link.u0);
    (void)t0;
    const double g0 = mpt_path_gain(d0, system.beta, system.nu);
    return system.z_s * iso + (system.z_m - system.z_s) * deployment.q * g0;
}

std::vector<double> sample_raw_power(const SystemParams& system,
                                     const DeploymentParams& deployment, MptMode mode,
                                     std::uint64_t trials, std::uint64_t seed,
                                     const McOptions& opts) {
    system.validate();
    deployment.validate();
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const SimWindow window = SimWindow::for_density(deployment.lambda_b, opts.truncation_factor);
    const double exterior = exterior_mean_power(deployment, system, window);
    std::vector<double> power(trials);
    parallel_for(trials, [&](std::size_t i) {
        RandomStream stream = RandomStream::for_trial(seed, i);
        const TypicalLink link = sample_typical_link(deployment, window, stream);
        power[i] = raw_power_trial(link, system, deployment, mode, exterior);
    });
    return power;
}

} // namespace

Estimate estimate_outage(const SystemParams& system, const DeploymentParams& deployment,
                         std::uint64_t trials, std::uint64_t seed, McOptions opts) {
    system.validate();
    deployment.validate();
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (deployment.p == 0.0) return binomial_estimate(trials, trials); // zero signal
    const SimWindow window = SimWindow::for_density(deployment.lambda_b, opts.truncation_factor);

    std::vector<char> outage(trials);
    parallel_for(trials, [&](std::size_t i) {
        RandomStream stream = RandomStream::for_trial(seed, i);
        const NetworkRealization r = sample_realization(deployment, system, window, stream);
        const double signal = deployment.p * data_path_gain(norm(r.mobiles[0]), system.alpha);
        const double interference =
            interference_at_typical(r, deployment.p, system.K, system.alpha);
        outage[i] = signal < system.theta * (interference + system.sigma2) ? 1 : 0;
    });
    std::uint64_t count = 0;
    for (char o : outage) count += static_cast<std::uint64_t>(o);
    return binomial_estimate(count, trials);
}

std::vector<double> sample_mu_statistic(const SystemParams& system, std::uint64_t trials,
                                        std::uint64_t seed, McOptions opts) {
    system.validate();
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const SimWindow window = SimWindow::for_density(1.0, opts.truncation_factor);
    std::vector<double> s(trials);
    parallel_for(trials, [&](std::size_t i) {
        RandomStream stream = RandomStream::for_trial(seed, i);
        s[i] = mu_statistic_trial(system, window, stream);
    });
    return s;
}

Estimate epsilon_at_mu(const std::vector<double>& s_samples, double mu) {
    if (s_samples.empty()) throw std::invalid_argument("no samples");
    std::uint64_t count = 0;
    for (double s : s_samples)
        if (s + mu > 0.0) ++count;
    return binomial_estimate(count, s_samples.size());
}

namespace {

// Order statistic for the (1-eps) quantile of S; mu is its negation.
double mu_from_samples(std::vector<double>& scratch, double epsilon) {
    const std::size_t n = scratch.size();
    const double rank = std::ceil((1.0 - epsilon) * static_cast<double>(n));
    const std::size_t k =
        std::min<std::size_t>(n - 1, static_cast<std::size_t>(std::max(1.0, rank)) - 1);
    std::nth_element(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(k),
                     scratch.end());
    return -scratch[static_cast<std::ptrdiff_t>(k)];
}

} // namespace

MuEstimate estimate_mu(const SystemParams& system, double epsilon, std::uint64_t trials,
                       std::uint64_t seed, McOptions opts) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("epsilon must be in (0,1)");
    const std::vector<double> s = sample_mu_statistic(system, trials, seed, opts);

    std::uint64_t above = 0;
    for (double v : s)
        if (v > 0.0) ++above;
    const double floor = static_cast<double>(above) / static_cast<double>(trials);
    if (epsilon <= floor) throw InfeasibleEpsilon(epsilon, floor);

    std::vector<double> scratch = s;
    MuEstimate est;
    est.mu = mu_from_samples(scratch, epsilon);
    est.epsilon = epsilon;
    est.trials = trials;

    // Bootstrap the quantile for the CI.
    constexpr int kResamples = 500;
    std::vector<double> boot(kResamples);
    RandomStream rs = RandomStream::for_trial(seed, 0x626f6f74ULL);
    std::vector<double> resample(s.size());
    for (int b = 0; b < kResamples; ++b) {
        for (std::size_t i = 0; i < s.size(); ++i) resample[i] = s[rs.index(s.size())];
        boot[b] = mu_from_samples(resample, epsilon);
    }
    std::sort(boot.begin(), boot.end());
    est.ci_lo = boot[static_cast<std::size_t>(0.025 * kResamples)];
    est.ci_hi = boot[static_cast<std::size_t>(0.975 * kResamples) - 1];
    est.ci_lo = std::min(est.ci_lo, est.mu);
    est.ci_hi = std::max(est.ci_hi, est.mu);
    return est;
}

Estimate estimate_power_outage(const SystemParams& system, const DeploymentParams& deployment,
                               double threshold, MptMode mode, std::uint64_t trials,
                               std::uint64_t seed, McOptions opts) {
    const std::vector<double> power =
        sample_raw_power(system, deployment, mode, trials, seed, opts);
    std::uint64_t count = 0;
    for (double p : power)
        if (p < threshold) ++count;
    return binomial_estimate(count, trials);
}

Estimate estimate_mean_raw_power(const SystemParams& system, const DeploymentParams& deployment,
                                 MptMode mode, std::uint64_t trials, std::uint64_t seed,
                                 McOptions opts) {
    return mean_estimate(sample_raw_power(system, deployment, mode, trials, seed, opts));
}

Estimate estimate_raw_power_quantile(const SystemParams& system,
                                     const DeploymentParams& deployment, double delta,
                                     MptMode mode, std::uint64_t trials, std::uint64_t seed,
                                     McOptions opts) {
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must be in (0,1)");
    std::vector<double> power = sample_raw_power(system, deployment, mode, trials, seed, opts);
    std::sort(power.begin(), power.end());
    const double n = static_cast<double>(trials);
    const auto clamp_idx = [&](double k) {
        return static_cast<std::size_t>(std::clamp(k, 0.0, n - 1.0));
    };
    const std::size_t k = clamp_idx(std::floor(delta * n));
    Estimate e;
    e.trials = trials;
    e.value = power[k];
    // Distribution-free CI from binomial fluctuation of the rank.
    const double spread = kZ95 * std::sqrt(n * delta * (1.0 - delta));
    e.ci_lo = power[clamp_idx(std::floor(delta * n) - spread)];
    e.ci_hi = power[clamp_idx(std::floor(delta * n) + spread)];
    e.stderr_ = (e.ci_hi - e.ci_lo) / (2.0 * kZ95);
    return e;
}

double transmit_probability(double mean_power, double omega, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("transmit_probability: p must be > 0");
    if (!(omega > 0.0 && omega <= 1.0))
        throw std::invalid_argument("transmit_probability: omega must be in (0,1]");
    if (!(mean_power >= 0.0))
        throw std::invalid_argument("transmit_probability: negative mean power");
    if (mean_power >= omega * p) return 1.0;
    return mean_power / (omega * p);
}

} // namespace hybridnet
