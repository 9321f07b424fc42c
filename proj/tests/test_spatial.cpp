#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "hybridnet/spatial.hpp"

using namespace hybridnet;

TEST_CASE("window construction") {
    const auto w = SimWindow::for_density(1.0, 20.0);
    CHECK(w.radius == doctest::Approx(20.0).epsilon(1e-15));
    const auto w4 = SimWindow::for_density(4.0, 20.0);
    CHECK(w4.radius == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(w.area() == doctest::Approx(400.0 * M_PI).epsilon(1e-15));
    CHECK_THROWS_AS(SimWindow::for_density(0.0), std::invalid_argument);
    CHECK_THROWS_AS(SimWindow::for_density(1.0, 5.0), std::invalid_argument);
}

TEST_CASE("ppp count and void probability") {
    const auto w = SimWindow::for_density(1.0, 10.0);
    RandomStream stream(7);
    const int reps = 2000;
    const double lambda = 1.0;
    const double r_void = 0.6;
    long total = 0;
    int empties = 0;
    for (int i = 0; i < reps; ++i) {
        const auto pts = sample_ppp(lambda, w, stream);
        total += static_cast<long>(pts.size());
        bool hit = false;
        for (const auto& p : pts) {
            CHECK(norm(p) <= w.radius + 1e-12);
            if (norm2(p) < r_void * r_void) hit = true;
        }
        if (!hit) ++empties;
    }
    const double mean_count = static_cast<double>(total) / reps;
    const double expect_count = lambda * w.area();
    // Poisson mean: stderr = sqrt(mean/reps)
    CHECK(std::abs(mean_count - expect_count) < 4.0 * std::sqrt(expect_count / reps));

    const double p_void = std::exp(-lambda * M_PI * r_void * r_void);
    const double se = std::sqrt(p_void * (1.0 - p_void) / reps);
    CHECK(std::abs(static_cast<double>(empties) / reps - p_void) < 4.0 * se);
}

TEST_CASE("zero density gives empty process") {
    const auto w = SimWindow::for_density(1.0, 10.0);
    RandomStream stream(1);
    CHECK(sample_ppp(0.0, w, stream).empty());
}

TEST_CASE("nearest index and grid agree") {
    const auto w = SimWindow::for_density(1.0, 10.0);
    RandomStream stream(11);
    auto pts = sample_ppp(1.0, w, stream);
    pts.push_back(Vec2{0.0, 0.0});
    const NearestGrid grid(pts, w.radius);
    for (int i = 0; i < 500; ++i) {
        const Vec2 x = sample_uniform_disk(w, stream);
        const auto [bi, bd] = nearest_index(pts, x); // (index, distance)
        const auto [gi, gd2] = grid.query(x);        // (index, squared distance)
        CHECK(gi == bi);
        CHECK(gd2 == doctest::Approx(bd * bd).epsilon(1e-12));
    }
}

TEST_CASE("nearest index tie-breaks to the lowest index") {
    std::vector<Vec2> pts{{1.0, 0.0}, {-1.0, 0.0}};
    CHECK(nearest_index(pts, {0.0, 0.0}).first == 0);
}

TEST_CASE("realization structure") {
    DeploymentParams d;
    d.lambda_b = 1.0;
    d.lambda_p = 0.5;
    SystemParams s;
    const auto w = SimWindow::for_density(d.lambda_b, 10.0);
    RandomStream stream(3);
    const auto r = sample_realization(d, s, w, stream);

    CHECK(r.bs_points.size() >= 1);
    CHECK(r.bs_points[0].x == 0.0);
    CHECK(r.bs_points[0].y == 0.0);
    CHECK(r.mobiles.size() == r.bs_points.size());

    // Each mobile lies in its own cell.
    const NearestGrid grid(r.bs_points, w.radius);
    for (std::size_t i = 0; i < r.mobiles.size(); ++i) {
        CHECK(grid.query(r.mobiles[i]).first == i);
        CHECK(norm(r.mobiles[i]) <= w.radius + 1e-12);
    }

    if (r.pb_points.empty()) {
        CHECK(!r.nearest_pb_of_typical.has_value());
    } else {
        REQUIRE(r.nearest_pb_of_typical.has_value());
        CHECK(*r.nearest_pb_of_typical
              == nearest_index(r.pb_points, r.mobiles[0]).first);
    }
}

TEST_CASE("typical nearest-BS distance follows the Rayleigh law") {
    // With the typical BS at the origin, distances from uniform probes to
    // their nearest BS have CCDF exp(-pi lambda r^2) away from the boundary.
    DeploymentParams d;
    d.lambda_b = 1.0;
    d.lambda_p = 0.0;
    SystemParams s;
    const auto w = SimWindow::for_density(d.lambda_b, 10.0);
    RandomStream stream(17);
    const int reps = 1500;
    const double r_test = 0.5;
    const double p_want = std::exp(-M_PI * r_test * r_test);
    int beyond = 0;
    for (int i = 0; i < reps; ++i) {
        auto bs = sample_ppp(d.lambda_b, w, stream);
        // Probe at a fixed interior point not conditioned on the process.
        const Vec2 probe{2.5, -1.0};
        double best = std::numeric_limits<double>::infinity();
        for (const auto& b : bs) best = std::min(best, dist(b, probe));
        if (best > r_test) ++beyond;
    }
    const double se = std::sqrt(p_want * (1.0 - p_want) / reps);
    CHECK(std::abs(static_cast<double>(beyond) / reps - p_want) < 4.0 * se);
}

TEST_CASE("uniform-in-cell matches naive window rejection") {
    DeploymentParams d;
    d.lambda_b = 1.0;
    d.lambda_p = 0.0;
    SystemParams s;
    const auto w = SimWindow::for_density(d.lambda_b, 10.0);
    RandomStream stream(23);
    const auto bs = sample_ppp(d.lambda_b, w, stream);
    std::vector<Vec2> pts;
    pts.push_back(Vec2{0.0, 0.0});
    pts.insert(pts.end(), bs.begin(), bs.end());
    const NearestGrid grid(pts, w.radius);

    const std::size_t cell = 0; // the typical cell at the origin
    const Vec2 site = pts[cell];

    const int n1 = 800, n2 = 800;
    std::array<int, 4> o1{}, o2{};
    const auto quadrant = [&](Vec2 v) {
        return (v.x >= site.x ? 1 : 0) + (v.y >= site.y ? 2 : 0);
    };

    std::size_t used = 0;
    for (int i = 0; i < n1; ++i)
        ++o1[static_cast<std::size_t>(quadrant(
            sample_uniform_in_cell(cell, pts, grid, w, stream, used, 1u << 30)))];

    for (int got = 0; got < n2;) {
        const Vec2 x = sample_uniform_disk(w, stream);
        if (grid.query(x).first != cell) continue;
        ++o2[static_cast<std::size_t>(quadrant(x))];
        ++got;
    }

    // Two-sample chi-square on the quadrant counts, 3 dof, 1% level.
    double chi2 = 0.0;
    for (int b = 0; b < 4; ++b) {
        const double diff = static_cast<double>(n2) * o1[b] - static_cast<double>(n1) * o2[b];
        const double tot = o1[b] + o2[b];
        if (tot > 0.0) chi2 += diff * diff / (static_cast<double>(n1) * n2 * tot);
    }
    CHECK(chi2 < 11.345);
}

TEST_CASE("exhausted candidate budget throws") {
    const auto w = SimWindow::for_density(1.0, 10.0);
    RandomStream stream(5);
    std::vector<Vec2> pts{{0.0, 0.0}, {1.0, 0.0}};
    const NearestGrid grid(pts, w.radius);
    std::size_t used = 0;
    CHECK_THROWS_AS(sample_uniform_in_cell(0, pts, grid, w, stream, used, 0),
                    SamplingFailure);
    try {
        std::size_t u = 0;
        sample_uniform_in_cell(0, pts, grid, w, stream, u, 0);
    } catch (const SamplingFailure& f) {
        CHECK(f.cells_total == 2);
        CHECK(f.cells_filled == 0);
    }
}
