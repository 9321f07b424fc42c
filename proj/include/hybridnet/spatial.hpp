#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hybridnet/params.hpp"
#include "hybridnet/random.hpp"

namespace hybridnet {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline double dist2(Vec2 a, Vec2 b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

inline double dist(Vec2 a, Vec2 b) { return std::sqrt(dist2(a, b)); }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double norm2(Vec2 a) { return a.x * a.x + a.y * a.y; }

/// Disk-shaped simulation window centered at the origin.
struct SimWindow {
    double radius = 0.0;
    double truncation_factor = 20.0; // radius in units of lambda_b^{-1/2}

    static SimWindow for_density(double lambda_b, double factor = 20.0) {
        if (!(lambda_b > 0.0)) throw std::invalid_argument("lambda_b must be > 0");
        if (!(factor >= 10.0)) throw std::invalid_argument("truncation_factor must be >= 10");
        return SimWindow{factor / std::sqrt(lambda_b), factor};
    }

    double area() const { return M_PI * radius * radius; }
};

/// One sampled snapshot of the network. bs_points[0] is the typical BS at
/// the origin; mobiles[i] is the active mobile of cell i.
struct NetworkRealization {
    std::vector<Vec2> bs_points;
    std::vector<Vec2> mobiles;
    std::vector<Vec2> pb_points;
    std::optional<std::size_t> nearest_pb_of_typical;
};

/// Thrown when the per-cell mobile placement exhausts its candidate budget.
class SamplingFailure : public std::runtime_error {
public:
    SamplingFailure(std::size_t cells, std::size_t filled, std::size_t candidates)
        : std::runtime_error("mobile placement exceeded candidate budget ("
                             + std::to_string(filled) + "/" + std::to_string(cells)
                             + " cells filled after " + std::to_string(candidates)
                             + " candidates)"),
          cells_total(cells), cells_filled(filled), candidates_used(candidates) {}

    std::size_t cells_total;
    std::size_t cells_filled;
    std::size_t candidates_used;
};

/// Uniform-bucket grid for nearest-point queries inside a disk window.
/// Query cost is O(1) for roughly unit-intensity point sets.
class NearestGrid {
public:
    NearestGrid(std::span<const Vec2> points, double window_radius);

    /// Index and squared distance of the nearest stored point. Ties break
    /// toward the lowest index.
    std::pair<std::size_t, double> query(Vec2 x) const;

    double bucket_size() const { return h_; }

    /// Visit every stored point in the square ring of buckets at Chebyshev
    /// distance `ring` from the bucket containing x. Points in rings > k are
    /// at distance >= k*h from x. f(index, dx, dy, d2) with d = point - x.
    template <class F>
    void visit_ring(Vec2 x, long ring, F&& f) const {
        const long cx = static_cast<long>(cell_of(x.x));
        const long cy = static_cast<long>(cell_of(x.y));
        const long n = static_cast<long>(n_);
        const long lo_x = cx - ring, hi_x = cx + ring;
        const long lo_y = cy - ring, hi_y = cy + ring;
        for (long by = lo_y; by <= hi_y; ++by) {
            if (by < 0 || by >= n) continue;
            for (long bx = lo_x; bx <= hi_x; ++bx) {
                if (bx < 0 || bx >= n) continue;
                if (ring > 0 && bx != lo_x && bx != hi_x && by != lo_y && by != hi_y) continue;
                const std::size_t b =
                    static_cast<std::size_t>(by) * n_ + static_cast<std::size_t>(bx);
                for (std::uint32_t k = bucket_start_[b]; k < bucket_start_[b + 1]; ++k) {
                    const std::uint32_t idx = order_[k];
                    const double dx = points_[idx].x - x.x;
                    const double dy = points_[idx].y - x.y;
                    f(static_cast<std::size_t>(idx), dx, dy, dx * dx + dy * dy);
                }
            }
        }
    }

private:
    std::size_t cell_of(double v) const;

    std::vector<Vec2> points_;
    std::vector<std::uint32_t> bucket_start_; // CSR offsets, size n_*n_+1
    std::vector<std::uint32_t> order_;        // point indices grouped by bucket
    double radius_ = 0.0;
    double h_ = 1.0;       // bucket edge length
    std::size_t n_ = 1;    // buckets per axis
};

/// Homogeneous PPP on the window disk: Poisson count, i.i.d. uniform points.
std::vector<Vec2> sample_ppp(double density, const SimWindow& window, RandomStream& stream);

/// Index and distance of the point nearest to x (ties -> lowest index).
std::pair<std::size_t, double> nearest_index(std::span<const Vec2> points, Vec2 x);

/// Sample a full snapshot: BS process conditioned on a point at the origin,
/// one uniform mobile per Voronoi cell, independent PB process.
NetworkRealization sample_realization(const DeploymentParams& deployment,
                                      const SystemParams& system,
                                      const SimWindow& window,
                                      RandomStream& stream);

/// Uniform point on the window disk.
Vec2 sample_uniform_disk(const SimWindow& window, RandomStream& stream);

/// Uniform point in the Voronoi cell of points[cell] (clipped to the
/// window), by rejection from a disk that provably covers the cell.
/// Draws the same law as first-arrival global candidate sampling.
/// candidates_used is incremented per proposal; exceeding budget throws
/// SamplingFailure.
Vec2 sample_uniform_in_cell(std::size_t cell, std::span<const Vec2> points,
                            const NearestGrid& grid, const SimWindow& window,
                            RandomStream& stream, std::size_t& candidates_used,
                            std::size_t budget);

} // namespace hybridnet
