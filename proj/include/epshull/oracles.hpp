#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "epshull/geom.hpp"

namespace epshull {

// Absolute slack on distance comparisons, separating algorithmic violations
// from floating-point noise at unit scale.
constexpr double kCheckerSlack = 1e-9;

struct EpsHullReport {
    bool is_valid = false;
    double max_violation = 0.0;  // largest dist(p, C(S)) over p in P
    PointN witness;              // a point achieving the max
};

/// Checks whether S is an eps-hull of P: max over p in P of dist(p, C(S))
/// compared against eps + slack. Dimension 2 uses the exact polygon distance;
/// higher dimensions use the certified projection iteration.
EpsHullReport is_eps_hull(std::span<const PointN> p, std::span<const PointN> s, double eps,
                          double slack = kCheckerSlack);
EpsHullReport is_eps_hull_2d(std::span<const Vec2> p, std::span<const Vec2> s, double eps,
                             double slack = kCheckerSlack);

struct OptResult {
    std::size_t size = 0;
    std::vector<PointN> subset;
    bool restricted_to_boundary = false;
};

/// Smallest eps-hull by exhaustive subset search, by increasing cardinality
/// and lexicographic index order. Unrestricted mode searches subsets of P
/// (|P| <= 18 after exact-duplicate removal); restricted mode searches only
/// boundary points of P (2D only, |dP| <= 30). Larger inputs raise
/// CapacityError naming the limit.
OptResult opt_brute_force(std::span<const PointN> p, double eps, bool restrict_to_boundary);

/// Points of P on the boundary of C(P), in counterclockwise cyclic order
/// starting at the hull's first vertex; exact duplicates removed.
std::vector<Vec2> boundary_points_2d(std::span<const Vec2> p);

/// Exact boundary-restricted optimum at scale: minimum-size S subset of dP
/// that is an eps-hull of P, found by circular cover over the boundary cycle.
/// For consecutive boundary-restricted hull points the distance of every gap
/// point to C(S) equals its distance to the gap chord, so per-gap feasibility
/// is exact and the greedy circular cover returns the true optimum.
/// Agrees with opt_brute_force(restricted) on every instance small enough to
/// cross-check; runs in polynomial time.
OptResult opt_boundary_cover_2d(std::span<const Vec2> p, double eps);

/// Monte-Carlo estimate of the bad-direction measure: the fraction of
/// num_samples uniform unit directions v with omega_v(P) - omega_v(S) > eps.
/// One-sided because every algorithm here outputs S inside P. Deterministic
/// under seed.
double eps_delta_bad_fraction(std::span<const PointN> p, std::span<const PointN> s, double eps,
                              int num_samples, std::uint64_t seed);

/// min over p in P of dist(p, C(P \ {p})). P is eps-meaningful exactly for
/// eps up to the returned value. |P| >= 2, dim in {2, 3}.
double meaningful_margin(std::span<const PointN> p);
double meaningful_margin_2d(std::span<const Vec2> p);

// Conversions between the 2D and generic point representations.
std::vector<PointN> to_pointn(std::span<const Vec2> p);
std::vector<Vec2> to_vec2(std::span<const PointN> p);

}  // namespace epshull
