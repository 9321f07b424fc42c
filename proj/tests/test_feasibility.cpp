#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hybridnet/analytic.hpp"
#include "hybridnet/feasibility.hpp"

using namespace hybridnet;

TEST_CASE("region config validation") {
    RegionConfig bad_cellular;
    bad_cellular.network = NetworkKind::cellular;
    bad_cellular.mpt = MptKind::isotropic;
    CHECK_THROWS_AS(bad_cellular.validate(), std::invalid_argument);

    RegionConfig bad_hybrid;
    bad_hybrid.network = NetworkKind::hybrid;
    bad_hybrid.mpt = MptKind::none;
    CHECK_THROWS_AS(bad_hybrid.validate(), std::invalid_argument);
}

TEST_CASE("cellular minimum power") {
    CHECK(cellular_min_power(4.0, 2.0, 1.0, 4.0) == doctest::Approx(0.03125).epsilon(1e-15));
    CHECK(cellular_min_power(4.0, 2.0, 7.0, 4.0) == doctest::Approx(7.0 / 32.0).epsilon(1e-15));
    // Interference-limited: sigma^2 is ignored; threshold is mu_tilde.
    CHECK(cellular_min_power(4.0, 2.0, 7.0, 4.0, NoiseRegime::interference_limited)
          == doctest::Approx(0.03125).epsilon(1e-15));
    CHECK(std::isinf(cellular_min_power(0.0, 2.0, 1.0, 4.0)));
    // Power scales as lambda_b^{-alpha/2}.
    CHECK(cellular_min_power(1.0, 2.0, 1.0, 4.0)
          == doctest::Approx(16.0 * cellular_min_power(4.0, 2.0, 1.0, 4.0)).epsilon(1e-12));
    CHECK_THROWS_AS(cellular_min_power(1.0, 0.0, 1.0, 4.0), std::invalid_argument);
}

TEST_CASE("hybrid minimum PB density: closed forms") {
    SystemParams s; // omega=0.5, nu=1.5, beta=3, alpha=4, z_m=10, delta=0.2
    const double mu = 2.0;
    const double rhs = s.sigma2 / mu; // 0.5

    SUBCASE("isotropic, large storage") {
        RegionConfig c{NetworkKind::hybrid, NoiseRegime::nonzero, MptKind::isotropic,
                       StorageKind::large};
        const double q = 2.0, lb = 1.0;
        const double want = (1.0 - 2.0 / s.beta) * rhs * s.omega * std::pow(s.nu, s.beta - 2.0)
                            / (M_PI * q * std::pow(lb, 0.5 * s.alpha));
        const auto got = hybrid_min_pb_density(lb, q, s, mu, c);
        REQUIRE(got.has_value());
        CHECK(*got == doctest::Approx(want).epsilon(1e-14));
    }
    SUBCASE("directed, large storage") {
        RegionConfig c{NetworkKind::hybrid, NoiseRegime::nonzero, MptKind::directed,
                       StorageKind::large};
        const double q = 2.0, lb = 1.0;
        const double kap = kappa(s.omega, s.sigma2, s.nu, s.beta, mu); // 0.84375
        const double x = s.z_m * q; // 20
        const auto got = hybrid_min_pb_density(lb, q, s, mu, c);
        REQUIRE(got.has_value());
        CHECK(*got == doctest::Approx(std::log(x / (x - kap)) / (M_PI * s.nu * s.nu))
                          .epsilon(1e-14));
        // Existence fails once z_m q lambda_b^{alpha/2} <= kappa.
        CHECK(!hybrid_min_pb_density(lb, 0.08, s, mu, c).has_value());
    }
    SUBCASE("isotropic, small storage") {
        RegionConfig c{NetworkKind::hybrid, NoiseRegime::nonzero, MptKind::isotropic,
                       StorageKind::small};
        const double q = 2.0, lb = 1.0;
        const double want = (std::log(1.0 / s.delta) / M_PI) * std::pow(rhs, 2.0 / s.beta)
                            * std::pow(q, -2.0 / s.beta) * std::pow(lb, -s.alpha / s.beta);
        const auto got = hybrid_min_pb_density(lb, q, s, mu, c);
        REQUIRE(got.has_value());
        CHECK(*got == doctest::Approx(want).epsilon(1e-14));
        CHECK(!hybrid_min_pb_density(0.5, 1.0, s, mu, c).has_value());
    }
}

TEST_CASE("region membership agrees with the boundary") {
    SystemParams s;
    const double mu = 2.0;
    RegionConfig c{NetworkKind::hybrid, NoiseRegime::nonzero, MptKind::isotropic,
                   StorageKind::large};
    DeploymentParams d;
    d.q = 2.0;
    d.lambda_b = 1.0;
    const double min_lp = *hybrid_min_pb_density(d.lambda_b, d.q, s, mu, c);
    d.lambda_p = 1.01 * min_lp;
    CHECK(region_contains(d, s, mu, c));
    d.lambda_p = 0.99 * min_lp;
    CHECK(!region_contains(d, s, mu, c));

    RegionConfig cell{NetworkKind::cellular, NoiseRegime::nonzero, MptKind::none,
                      StorageKind::large};
    DeploymentParams e;
    e.lambda_b = 4.0;
    e.p = 0.04;
    CHECK(region_contains(e, s, mu, cell)); // min power is 0.03125
    e.p = 0.03;
    CHECK(!region_contains(e, s, mu, cell));
    e.lambda_b = 0.0;
    CHECK(!region_contains(e, s, mu, cell));
}

TEST_CASE("trace_boundary grids and masks") {
    SystemParams s;
    const double mu = 2.0;
    RegionConfig c{NetworkKind::hybrid, NoiseRegime::nonzero, MptKind::directed,
                   StorageKind::large};

    const std::vector<double> bad_sorted{1.0, 0.5};
    CHECK_THROWS_AS(trace_boundary(c, s, mu, bad_sorted, 2.0), std::invalid_argument);
    const std::vector<double> bad_sign{-1.0, 0.5};
    CHECK_THROWS_AS(trace_boundary(c, s, mu, bad_sign, 2.0), std::invalid_argument);

    // Small lambda_b fails the directed existence condition; large succeeds.
    const std::vector<double> grid{0.05, 0.2, 1.0, 4.0};
    const auto curve = trace_boundary(c, s, mu, grid, 2.0);
    REQUIRE(curve.min_co_param.size() == 4);
    CHECK(curve.infeasible_mask[0] == 1);
    CHECK(std::isinf(curve.min_co_param[0]));
    CHECK(curve.infeasible_mask[3] == 0);
    CHECK(curve.min_co_param[3] > 0.0);
    // Boundary is decreasing in lambda_b where finite.
    CHECK(curve.min_co_param[2] > curve.min_co_param[3]);
}

TEST_CASE("cellular boundary survives simulation spot checks") {
    SystemParams s;
    const MuEstimate mu = estimate_mu(s, s.epsilon, 8000, 101, McOptions{10.0});

    RegionConfig cell{NetworkKind::cellular, NoiseRegime::nonzero, MptKind::none,
                      StorageKind::large};
    const std::vector<double> grid{4.0};
    const auto curve = trace_boundary(cell, s, mu.mu, grid, 0.0);

    VerifyOptions opts;
    opts.factors = {2.0, 0.1};
    opts.max_grid_points = 1;
    const auto report = verify_boundary_by_simulation(curve, s, 2000, 202, opts);
    REQUIRE(report.points.size() == 2);
    for (const auto& pt : report.points) {
        CAPTURE(pt.factor);
        CAPTURE(pt.p_out);
        CHECK(pt.pass);
    }
    CHECK(report.all_pass);
}
