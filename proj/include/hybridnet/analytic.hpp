#pragma once

#include <stdexcept>
#include <string>

#include "hybridnet/propagation.hpp"

namespace hybridnet {

/// A closed-form result tagged with the formula it came from.
struct AnalyticValue {
    double value = 0.0;
    const char* formula_id = "";
};

/// Thrown when a closed-form bound is evaluated outside its precondition
/// (the nearest-beacon argument needs q_eff * nu^{-beta} >= p).
class BoundInapplicable : public std::domain_error {
public:
    explicit BoundInapplicable(const std::string& what) : std::domain_error(what) {}
};

/// Upper incomplete gamma Gamma(a, x) = int_x^inf t^{a-1} e^{-t} dt.
/// Supports negative and non-integer a; x must be positive when a <= 0.
/// Relative accuracy ~1e-12 on a in [-3,3], x in [1e-3, 20].
double upper_incomplete_gamma(double a, double x);

/// Mean raw power under isotropic MPT: pi beta nu^{2-beta} q lambda_p / (beta-2).
double mean_power_isotropic(double q, double lambda_p, double nu, double beta);

/// Expected cutoff path gain to the nearest PB, E[max(D, nu)^{-beta}].
double psi(double lambda_p, double nu, double beta);

/// Mean raw power under directed MPT: z_m q psi + z_s q (iso-mean/q - psi).
double mean_power_directed(double q, double lambda_p, double nu, double beta, double z_m,
                           double z_s);

/// Nearest-beacon upper bound on the power-outage probability,
/// exp(-pi lambda_p (q_eff/p)^{2/beta}) with q_eff = q or z_m q.
double power_outage_bound(double p, double q, double lambda_p, double beta, double nu,
                          MptMode mode, double z_m);

/// Interference-limited threshold: (1/p_b) (2 pi / log(1/eta))^{alpha/2}.
double mu_tilde(double p_b, double eta, double alpha);

/// Composite constant omega sigma2 nu^beta / mu.
double kappa(double omega, double sigma2, double nu, double beta, double mu);

/// CCDF of the nearest-point distance in a PPP: exp(-pi lambda r^2).
double nearest_distance_ccdf(double lambda, double r);

} // namespace hybridnet
