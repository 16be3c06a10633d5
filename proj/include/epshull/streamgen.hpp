#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "epshull/geom.hpp"

namespace epshull {

enum class StreamKind { Circle, Disk, SquareGrid, Gaussian, NgonBoundary, LowerBound3D };

struct StreamSpec {
    StreamKind kind = StreamKind::Disk;
    std::size_t n = 1;
    std::uint64_t seed = 0;
    double radius = 1.0;       // circle / disk
    bool equally_spaced = true;  // circle: lattice angles vs uniform random
    int ngon_k = 4;            // ngon_boundary: polygon vertex count
    int dim = 2;               // gaussian
};

/// Deterministic point stream for the spec'd kind. ngon_boundary emits the k
/// polygon corners first, then n-k seeded-random points on the perimeter, so
/// the exact hull of the stream is always the k corners.
std::vector<PointN> generate(const StreamSpec& spec);
std::vector<Vec2> generate_2d(const StreamSpec& spec);

/// Uniformly random permutation via seeded Fisher-Yates.
std::vector<PointN> shuffle_random_order(std::span<const PointN> p, std::uint64_t seed);
std::vector<Vec2> shuffle_random_order_2d(std::span<const Vec2> p, std::uint64_t seed);

/// Layered 3D stream realizing the always-OPT lower-bound construction:
/// a unit square, a regular polygon inside it, and per-group fans of arc
/// points, with layer i at height (i-1)*eps_star.
struct LowerBoundArtifact {
    std::vector<PointN> stream;              // layers concatenated
    double eps_star = 0.0;                   // 0.99 x smallest layer margin
    std::vector<std::size_t> layer_offsets;  // start index of each layer
    std::vector<std::size_t> layer_sizes;
    std::vector<std::size_t> group_map;      // polygon-layer position -> group id
    std::vector<double> layer_margins;

    std::span<const PointN> layer(std::size_t i) const {
        return std::span<const PointN>(stream).subspan(layer_offsets.at(i), layer_sizes.at(i));
    }
    std::size_t layers() const { return layer_sizes.size(); }
};

using GrowthTable = std::function<long long(long long)>;

/// Builds r+1 layers. f drives the per-group fan sizes (10*f(points so far));
/// sizes above the cap raise CapacityError. The fan apex fraction is clamped
/// just below the largest value keeping each arc strictly inside its group
/// triangle.
LowerBoundArtifact gen_lower_bound_3d(const GrowthTable& f, int r,
                                      std::size_t size_cap = 1000000,
                                      double apex_fraction = 0.5);

struct KeeperResult {
    std::vector<PointN> kept;
    std::vector<std::size_t> kept_indices;
};

/// Natural single-pass generalization of the insertion rule to R^3:
/// keep p exactly when dist(p, C(kept)) > eps; no deletions.
KeeperResult greedy_keeper_run(std::span<const PointN> p, double eps);

}  // namespace epshull
