#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace hybridnet {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

/// Physical/model constants shared by all experiments. Powers and gains are
/// linear (dB conversion happens at the config boundary).
struct SystemParams {
    double alpha = 4.0;   // path-loss exponent, data links
    double beta = 3.0;    // path-loss exponent, MPT links
    double nu = 1.5;      // short-range cutoff for MPT path loss
    double theta = 2.0;   // target SINR
    double sigma2 = 1.0;  // noise variance
    double omega = 0.5;   // duty cycle
    double z_m = 10.0;    // beam main-lobe gain
    double z_s = 0.005;   // beam side-lobe gain
    int K = 8;            // interferers cancelled per BS
    double epsilon = 0.3; // max outage probability
    double eta = 0.2;     // max signal-power shortfall probability
    double delta = 0.2;   // max power-outage probability
    double p_b = 10.0;    // BS received-signal threshold
    double p_t = 1.0;     // mobile raw-power threshold

    void validate() const {
        if (!(alpha > 2.0)) throw std::invalid_argument("alpha must be > 2");
        if (!(beta > 2.0)) throw std::invalid_argument("beta must be > 2");
        if (!(nu > 1.0)) throw std::invalid_argument("nu must be > 1");
        if (!(theta > 0.0)) throw std::invalid_argument("theta must be > 0");
        if (!(sigma2 >= 0.0)) throw std::invalid_argument("sigma2 must be >= 0");
        if (!(omega > 0.0 && omega <= 1.0)) throw std::invalid_argument("omega must be in (0,1]");
        if (!(z_m >= z_s && z_s > 0.0)) throw std::invalid_argument("need z_m >= z_s > 0");
        if (K < 0) throw std::invalid_argument("K must be >= 0");
        for (double prob : {epsilon, eta, delta})
            if (!(prob > 0.0 && prob < 1.0))
                throw std::invalid_argument("epsilon/eta/delta must be in (0,1)");
        if (!(p_b > 0.0)) throw std::invalid_argument("p_b must be > 0");
        if (!(p_t > 0.0)) throw std::invalid_argument("p_t must be > 0");
    }
};

/// The four tunable deployment parameters.
struct DeploymentParams {
    double p = 1.0;        // mobile transmit power
    double q = 50.118723362727245; // PB transmit power (17 dB default)
    double lambda_b = 1.0; // BS density
    double lambda_p = 1.0; // PB density

    void validate() const {
        if (!(p >= 0.0)) throw std::invalid_argument("p must be >= 0");
        if (!(q >= 0.0)) throw std::invalid_argument("q must be >= 0");
        if (!(lambda_b >= 0.0)) throw std::invalid_argument("lambda_b must be >= 0");
        if (!(lambda_p >= 0.0)) throw std::invalid_argument("lambda_p must be >= 0");
    }
};

} // namespace hybridnet
