#include "hybridnet/analytic.hpp"

#include <cmath>
#include <limits>

namespace hybridnet {

namespace {

constexpr double kTol = 1e-16;
constexpr int kMaxIter = 2000;

// Lower regularized series: gamma(a,x) = x^a e^{-x} sum_n x^n / (a (a+1)...(a+n)).
// Valid for a > 0, best for x < a + 1.
double lower_gamma_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int n = 0; n < kMaxIter; ++n) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kTol) break;
    }
    return sum * std::exp(-x + a * std::log(x));
}

// Continued fraction (modified Lentz) for Gamma(a,x) = e^{-x} x^a * cf.
// Converges for x > 0; used when x is not small relative to a.
double upper_gamma_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kTol) break;
    }
    return std::exp(-x + a * std::log(x)) * h;
}

// Exponential integral E1(x) = Gamma(0, x), small-x series.
double e1_series(double x) {
    constexpr double euler = 0.5772156649015328606;
    double sum = -euler - std::log(x);
    double term = 1.0;
    for (int k = 1; k < kMaxIter; ++k) {
        term *= -x / static_cast<double>(k);
        const double add = -term / static_cast<double>(k);
        sum += add;
        if (std::abs(add) < std::abs(sum) * kTol) break;
    }
    return sum;
}

double gamma_positive(double a, double x) {
    if (x == 0.0) return std::tgamma(a);
    if (x < a + 1.0) return std::tgamma(a) - lower_gamma_series(a, x);
    return upper_gamma_cf(a, x);
}

} // namespace

double upper_incomplete_gamma(double a, double x) {
    if (!(x >= 0.0)) throw std::domain_error("upper_incomplete_gamma: x must be >= 0");
    if (a > 0.0) return gamma_positive(a, x);
    if (!(x > 0.0))
        throw std::domain_error("upper_incomplete_gamma: x must be > 0 for a <= 0");

    // The continued fraction is valid for any a once x is away from zero.
    if (x >= 1.5) return upper_gamma_cf(a, x);

    const double expx = std::exp(-x);
    const bool integer_a = (a == std::floor(a));
    if (integer_a) {
        // Walk down from Gamma(0, x) = E1(x).
        double g = e1_series(x);
        for (double aj = -1.0; aj >= a - 0.5; aj -= 1.0)
            g = (g - std::pow(x, aj) * expx) / aj;
        return g;
    }
    // Lift to a positive shape, then apply Gamma(s,x) = (Gamma(s+1,x) - x^s e^{-x})/s
    // downward.
    const int steps = static_cast<int>(std::floor(-a)) + 1;
    double s = a + static_cast<double>(steps);
    double g = gamma_positive(s, x);
    for (int j = 0; j < steps; ++j) {
        s -= 1.0;
        g = (g - std::pow(x, s) * expx) / s;
    }
    return g;
}

double mean_power_isotropic(double q, double lambda_p, double nu, double beta) {
    if (!(beta > 2.0)) throw std::domain_error("mean_power_isotropic: divergent for beta <= 2");
    if (!(nu > 1.0)) throw std::invalid_argument("mean_power_isotropic: nu must be > 1");
    if (!(q >= 0.0 && lambda_p >= 0.0))
        throw std::invalid_argument("mean_power_isotropic: negative parameter");
    return M_PI * beta * std::pow(nu, 2.0 - beta) * q * lambda_p / (beta - 2.0);
}

double psi(double lambda_p, double nu, double beta) {
    if (!(beta > 2.0)) throw std::domain_error("psi: beta must be > 2");
    if (!(nu > 1.0)) throw std::invalid_argument("psi: nu must be > 1");
    if (!(lambda_p >= 0.0)) throw std::invalid_argument("psi: negative lambda_p");
    if (lambda_p == 0.0) return 0.0;
    const double x = M_PI * lambda_p * nu * nu;
    return std::pow(nu, -beta) * (1.0 - std::exp(-x))
           + std::pow(M_PI * lambda_p, 0.5 * beta)
                 * upper_incomplete_gamma(1.0 - 0.5 * beta, x);
}

double mean_power_directed(double q, double lambda_p, double nu, double beta, double z_m,
                           double z_s) {
    if (!(z_m >= z_s && z_s >= 0.0))
        throw std::invalid_argument("mean_power_directed: need z_m >= z_s >= 0");
    const double mean_iso_per_q = mean_power_isotropic(1.0, lambda_p, nu, beta);
    const double ps = psi(lambda_p, nu, beta);
    return z_m * q * ps + z_s * q * (mean_iso_per_q - ps);
}

double power_outage_bound(double p, double q, double lambda_p, double beta, double nu,
                          MptMode mode, double z_m) {
    if (!(p > 0.0)) throw std::invalid_argument("power_outage_bound: p must be > 0");
    if (!(lambda_p >= 0.0)) throw std::invalid_argument("power_outage_bound: negative lambda_p");
    const double q_eff = mode == MptMode::directed ? z_m * q : q;
    if (!(q_eff * std::pow(nu, -beta) >= p))
        throw BoundInapplicable("power_outage_bound: requires q_eff * nu^{-beta} >= p");
    return std::exp(-M_PI * lambda_p * std::pow(q_eff / p, 2.0 / beta));
}

double mu_tilde(double p_b, double eta, double alpha) {
    if (!(eta > 0.0 && eta < 1.0)) throw std::domain_error("mu_tilde: eta must be in (0,1)");
    if (!(p_b > 0.0)) throw std::invalid_argument("mu_tilde: p_b must be > 0");
    return std::pow(2.0 * M_PI / std::log(1.0 / eta), 0.5 * alpha) / p_b;
}

double kappa(double omega, double sigma2, double nu, double beta, double mu) {
    if (!(mu > 0.0)) throw std::domain_error("kappa: mu must be > 0");
    return omega * sigma2 * std::pow(nu, beta) / mu;
}

double nearest_distance_ccdf(double lambda, double r) {
    if (!(lambda >= 0.0 && r >= 0.0))
        throw std::invalid_argument("nearest_distance_ccdf: negative argument");
    return std::exp(-M_PI * lambda * r * r);
}

} // namespace hybridnet
