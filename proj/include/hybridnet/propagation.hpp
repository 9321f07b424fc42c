#pragma once

#include <span>

#include "hybridnet/spatial.hpp"

namespace hybridnet {

enum class MptMode { isotropic, directed };

/// d^{-alpha}. d must be positive (PPP points are a.s. distinct, so d == 0
/// signals a bug upstream).
double data_path_gain(double d, double alpha);

/// max(d, nu)^{-beta}; bounded above by nu^{-beta}.
double mpt_path_gain(double d, double beta, double nu);

/// Sum of p |U_Y|^{-alpha} over interfering mobiles, excluding the typical
/// mobile and the K nearest interferers (distance to the origin, ties by
/// index). K >= #interferers gives 0.
double interference_at_typical(const NetworkRealization& r, double p, int K, double alpha);

/// Sum of path gains max(|T - u0|, nu)^{-beta} over a PB point set.
double mpt_gain_sum(std::span<const Vec2> pbs, Vec2 u0, double beta, double nu);

/// q * sum over PBs of the cutoff path gain; 0 for an empty PB process.
double raw_power_isotropic(const NetworkRealization& r, double q, double beta, double nu);

/// z_m q g(T_0) + z_s q sum_{T != T_0} g(T) with T_0 the nearest PB to the
/// typical mobile. Throws if the PB process is empty.
double raw_power_directed(const NetworkRealization& r, double q, double z_m, double z_s,
                          double beta, double nu);

} // namespace hybridnet
