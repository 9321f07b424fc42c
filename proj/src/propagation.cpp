#include "hybridnet/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hybridnet {

namespace {

// pow(d2, -alpha/2) with a fast path for the common even exponents.
inline double gain_from_d2(double d2, double alpha) {
    if (alpha == 4.0) {
        const double inv = 1.0 / d2;
        return inv * inv;
    }
    if (alpha == 2.0) return 1.0 / d2;
    return std::pow(d2, -0.5 * alpha);
}

} // namespace

double data_path_gain(double d, double alpha) {
    if (!(d > 0.0)) throw std::domain_error("data_path_gain: zero distance");
    return gain_from_d2(d * d, alpha);
}

double mpt_path_gain(double d, double beta, double nu) {
    if (!(d >= 0.0)) throw std::invalid_argument("mpt_path_gain: negative distance");
    if (!(nu > 1.0)) throw std::invalid_argument("mpt_path_gain: nu must be > 1");
    return std::pow(std::max(d, nu), -beta);
}

double interference_at_typical(const NetworkRealization& r, double p, int K, double alpha) {
    if (r.bs_points.empty()) throw std::invalid_argument("realization has no BS");
    const std::size_t n = r.mobiles.size();
    if (n <= 1) return 0.0;

    std::vector<double> d2;
    d2.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) d2.push_back(norm2(r.mobiles[i]));

    const std::size_t k = static_cast<std::size_t>(std::max(K, 0));
    if (k >= d2.size()) return 0.0;
    if (k > 0)
        std::nth_element(d2.begin(), d2.begin() + static_cast<std::ptrdiff_t>(k) - 1, d2.end());

    double sum = 0.0;
    for (std::size_t i = k; i < d2.size(); ++i) sum += gain_from_d2(d2[i], alpha);
    return p * sum;
}

double mpt_gain_sum(std::span<const Vec2> pbs, Vec2 u0, double beta, double nu) {
    const double nu2 = nu * nu;
    const double cutoff_gain = std::pow(nu, -beta);
    double sum = 0.0;
    for (const Vec2& t : pbs) {
        const double d2 = dist2(t, u0);
        sum += (d2 <= nu2) ? cutoff_gain : std::pow(d2, -0.5 * beta);
    }
    return sum;
}

double raw_power_isotropic(const NetworkRealization& r, double q, double beta, double nu) {
    if (r.mobiles.empty()) throw std::invalid_argument("realization has no typical mobile");
    return q * mpt_gain_sum(r.pb_points, r.mobiles[0], beta, nu);
}

double raw_power_directed(const NetworkRealization& r, double q, double z_m, double z_s,
                          double beta, double nu) {
    if (r.pb_points.empty()) throw std::domain_error("raw_power_directed: empty PB process");
    if (r.mobiles.empty()) throw std::invalid_argument("realization has no typical mobile");
    const Vec2 u0 = r.mobiles[0];
    const std::size_t t0 = r.nearest_pb_of_typical ? *r.nearest_pb_of_typical
                                                   : nearest_index(r.pb_points, u0).first;
    const double g0 = mpt_path_gain(dist(r.pb_points[t0], u0), beta, nu);
    // z_s * total + (z_m - z_s) * nearest keeps the z_m = z_s = 1 case
    // bit-identical to the isotropic sum.
    return z_s * q * mpt_gain_sum(r.pb_points, u0, beta, nu) + (z_m - z_s) * q * g0;
}

} // namespace hybridnet
