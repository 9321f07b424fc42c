#include "hybridnet/spatial.hpp"

#include <algorithm>
#include <limits>

namespace hybridnet {

NearestGrid::NearestGrid(std::span<const Vec2> points, double window_radius)
    : points_(points.begin(), points.end()), radius_(window_radius) {
    if (points_.empty()) throw std::invalid_argument("NearestGrid needs at least one point");
    // Aim for about one point per bucket.
    n_ = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(points_.size()))));
    n_ = std::min<std::size_t>(n_, 4096);
    h_ = 2.0 * radius_ / static_cast<double>(n_);
    // CSR layout: counting pass, prefix sum, fill.
    bucket_start_.assign(n_ * n_ + 1, 0);
    std::vector<std::uint32_t> bucket(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const std::size_t b = cell_of(points_[i].y) * n_ + cell_of(points_[i].x);
        bucket[i] = static_cast<std::uint32_t>(b);
        ++bucket_start_[b + 1];
    }
    for (std::size_t b = 1; b < bucket_start_.size(); ++b) bucket_start_[b] += bucket_start_[b - 1];
    order_.resize(points_.size());
    std::vector<std::uint32_t> cursor(bucket_start_.begin(), bucket_start_.end() - 1);
    for (std::size_t i = 0; i < points_.size(); ++i)
        order_[cursor[bucket[i]]++] = static_cast<std::uint32_t>(i);
}

std::size_t NearestGrid::cell_of(double v) const {
    double t = (v + radius_) / h_;
    if (t < 0.0) t = 0.0;
    auto c = static_cast<std::size_t>(t);
    return std::min(c, n_ - 1);
}

std::pair<std::size_t, double> NearestGrid::query(Vec2 x) const {
    const long cx = static_cast<long>(cell_of(x.x));
    const long cy = static_cast<long>(cell_of(x.y));
    const long n = static_cast<long>(n_);

    std::size_t best = std::numeric_limits<std::size_t>::max();
    double best_d2 = std::numeric_limits<double>::infinity();

    const long max_ring = 2 * n;
    for (long ring = 0; ring <= max_ring; ++ring) {
        // Points in ring k are at least (k-1)*h away, so once the current
        // best is within (ring-1)*h no unscanned ring can improve it.
        if (best != std::numeric_limits<std::size_t>::max()) {
            const double safe = static_cast<double>(ring - 1) * h_;
            if (best_d2 <= safe * safe) break;
        }
        const long lo_x = cx - ring, hi_x = cx + ring;
        const long lo_y = cy - ring, hi_y = cy + ring;
        for (long by = lo_y; by <= hi_y; ++by) {
            if (by < 0 || by >= n) continue;
            for (long bx = lo_x; bx <= hi_x; ++bx) {
                if (bx < 0 || bx >= n) continue;
                // Only the boundary of the square is new at this ring.
                if (ring > 0 && bx != lo_x && bx != hi_x && by != lo_y && by != hi_y) continue;
                const std::size_t b = static_cast<std::size_t>(by) * n_ + static_cast<std::size_t>(bx);
                for (std::uint32_t k = bucket_start_[b]; k < bucket_start_[b + 1]; ++k) {
                    const std::uint32_t idx = order_[k];
                    const double d2 = dist2(points_[idx], x);
                    if (d2 < best_d2 || (d2 == best_d2 && idx < best)) {
                        best_d2 = d2;
                        best = idx;
                    }
                }
            }
        }
    }
    return {best, best_d2};
}

Vec2 sample_uniform_disk(const SimWindow& window, RandomStream& stream) {
    const double r = window.radius * std::sqrt(stream.uniform());
    const double phi = stream.uniform(0.0, 2.0 * M_PI);
    return {r * std::cos(phi), r * std::sin(phi)};
}

std::vector<Vec2> sample_ppp(double density, const SimWindow& window, RandomStream& stream) {
    if (!(density >= 0.0)) throw std::invalid_argument("density must be >= 0");
    if (!(window.radius > 0.0)) throw std::invalid_argument("window radius must be > 0");
    const long count = stream.poisson(density * window.area());
    std::vector<Vec2> points;
    points.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) points.push_back(sample_uniform_disk(window, stream));
    return points;
}

std::pair<std::size_t, double> nearest_index(std::span<const Vec2> points, Vec2 x) {
    if (points.empty()) throw std::invalid_argument("nearest_index: empty point list");
    std::size_t best = 0;
    double best_d2 = dist2(points[0], x);
    for (std::size_t i = 1; i < points.size(); ++i) {
        const double d2 = dist2(points[i], x);
        if (d2 < best_d2) {
            best_d2 = d2;
            best = i;
        }
    }
    return {best, std::sqrt(best_d2)};
}

namespace {

// Radius of a disk around points[cell] that contains the whole Voronoi
// cell (clipped to the window). In each 60-degree sector the cell cannot
// extend past the sector's nearest point: for |x - Y| >= d the sector
// point is strictly closer to x. Sectors with no point are capped by the
// window boundary.
double cell_cover_radius(std::size_t cell, std::span<const Vec2> points,
                         const NearestGrid& grid, const SimWindow& window) {
    const Vec2 y = points[cell];
    constexpr double kRoot3 = 1.7320508075688772;
    // 30-degree sectors: a point at distance d in the direction sector of x
    // dominates x once |x - y| > d / (2 cos 30), so the cell extent per
    // sector is at most 0.5774 d. The ring scan stops once every sector's
    // minimum is certain; sectors left uncovered fall back to the
    // window-boundary cap, which is always valid.
    constexpr double kHalfSec = 0.5773502691896258; // 1 / (2 cos 30 deg)
    // Mid-sector boundary directions at 30, 90, ..., 330 degrees.
    static const double kMidX[6] = {kRoot3 / 2.0, 0.0, -kRoot3 / 2.0,
                                    -kRoot3 / 2.0, 0.0, kRoot3 / 2.0};
    static const double kMidY[6] = {0.5, 1.0, 0.5, -0.5, -1.0, -0.5};
    double sector_d2[12];
    for (double& d : sector_d2) d = std::numeric_limits<double>::infinity();
    const double h = grid.bucket_size();
    // Scan radius in units of the bucket size (h ~ 1.13x the mean point
    // spacing), so empty sectors stay rare at any density.
    const double scan_r = 9.0 * h;
    const long max_ring = static_cast<long>(std::ceil(scan_r / h)) + 1;
    for (long ring = 0; ring <= max_ring; ++ring) {
        if (ring > 0) {
            const double safe2 = static_cast<double>(ring) * h * static_cast<double>(ring) * h;
            bool done = true;
            for (double d : sector_d2)
                if (d > safe2) { done = false; break; }
            if (done) break;
        }
        grid.visit_ring(y, ring, [&](std::size_t j, double dx, double dy, double d2) {
            if (j == cell || d2 > scan_r * scan_r) return;
            int s;
            if (dy >= 0.0)
                s = dy >= kRoot3 * dx ? (dy >= -kRoot3 * dx ? 1 : 2) : 0;
            else
                s = dy <= kRoot3 * dx ? (dy <= -kRoot3 * dx ? 4 : 5) : 3;
            const int upper = kMidX[s] * dy - kMidY[s] * dx > 0.0 ? 1 : 0;
            const int s12 = 2 * s + upper;
            if (d2 < sector_d2[s12]) sector_d2[s12] = d2;
        });
    }
    const double rho = norm(y);
    const double phi_y = std::atan2(y.y, y.x);
    // Distance from y to the window boundary along direction angle phi.
    const auto boundary_dist = [&](double phi) {
        const double proj = rho * std::cos(phi - phi_y);
        return -proj + std::sqrt(std::max(0.0, window.radius * window.radius
                                                   - rho * rho + proj * proj));
    };
    double cover = 0.0;
    for (int s = 0; s < 12; ++s) {
        double extent;
        if (std::isfinite(sector_d2[s])) {
            extent = kHalfSec * std::sqrt(sector_d2[s]);
        } else {
            // No dominating point seen: the cell can reach the window edge.
            const double lo = s * (M_PI / 6.0), hi = lo + M_PI / 6.0;
            extent = std::max(boundary_dist(lo), boundary_dist(hi));
            double away = phi_y + M_PI; // direction maximizing the distance
            while (away < lo) away += 2.0 * M_PI;
            while (away >= lo + 2.0 * M_PI) away -= 2.0 * M_PI;
            if (away <= hi) extent = std::max(extent, boundary_dist(away));
        }
        cover = std::max(cover, extent);
    }
    return cover * (1.0 + 1e-9);
}

} // namespace

Vec2 sample_uniform_in_cell(std::size_t cell, std::span<const Vec2> points,
                            const NearestGrid& grid, const SimWindow& window,
                            RandomStream& stream, std::size_t& candidates_used,
                            std::size_t budget) {
    const Vec2 y = points[cell];
    const double cover = cell_cover_radius(cell, points, grid, window);
    const double r2max = window.radius * window.radius;
    for (;;) {
        if (candidates_used >= budget)
            throw SamplingFailure(points.size(), 0, candidates_used);
        ++candidates_used;
        const double r = cover * std::sqrt(stream.uniform());
        const double phi = stream.uniform(0.0, 2.0 * M_PI);
        const Vec2 cand{y.x + r * std::cos(phi), y.y + r * std::sin(phi)};
        if (norm2(cand) > r2max) continue;
        if (grid.query(cand).first == cell) return cand;
    }
}

NetworkRealization sample_realization(const DeploymentParams& deployment,
                                      const SystemParams& system,
                                      const SimWindow& window,
                                      RandomStream& stream) {
    (void)system;
    deployment.validate();
    if (!(deployment.lambda_b > 0.0)) throw std::invalid_argument("lambda_b must be > 0");

    NetworkRealization r;
    r.bs_points.push_back({0.0, 0.0}); // typical BS, conditioned at the origin
    auto rest = sample_ppp(deployment.lambda_b, window, stream);
    r.bs_points.insert(r.bs_points.end(), rest.begin(), rest.end());

    const std::size_t n_cells = r.bs_points.size();
    NearestGrid grid(r.bs_points, window.radius);

    // Each cell keeps the first uniform window candidate that lands in it,
    // i.e. an independent uniform-in-cell point. A global bulk pass fills
    // most cells; stragglers (small cells) are drawn per cell by rejection
    // from a covering disk, which samples the identical law without the
    // coupon-collector tail.
    r.mobiles.assign(n_cells, Vec2{});
    std::vector<char> filled(n_cells, 0);
    std::size_t remaining = n_cells;
    const std::size_t budget = 200 * n_cells;
    std::size_t used = 0;
    const std::size_t bulk = 6 * n_cells;
    while (remaining > 0 && used < bulk) {
        const Vec2 cand = sample_uniform_disk(window, stream);
        ++used;
        const std::size_t idx = grid.query(cand).first;
        if (!filled[idx]) {
            filled[idx] = 1;
            r.mobiles[idx] = cand;
            --remaining;
        }
    }
    for (std::size_t i = 0; i < n_cells && remaining > 0; ++i) {
        if (filled[i]) continue;
        try {
            r.mobiles[i] = sample_uniform_in_cell(i, r.bs_points, grid, window, stream, used,
                                                  budget);
        } catch (const SamplingFailure&) {
            throw SamplingFailure(n_cells, n_cells - remaining, used);
        }
        filled[i] = 1;
        --remaining;
    }

    r.pb_points = sample_ppp(deployment.lambda_p, window, stream);
    if (!r.pb_points.empty())
        r.nearest_pb_of_typical = nearest_index(r.pb_points, r.mobiles[0]).first;
    return r;
}

} // namespace hybridnet
