#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace epshull {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double norm(Vec2 a);
double dist(Vec2 a, Vec2 b);

// d-dimensional point; dimension is the vector length.
using PointN = std::vector<double>;

enum class Orientation { Clockwise, Counterclockwise, Collinear };

/// Sign of the cross product (b-a) x (c-a), with a tolerance of 1e-12 scaled
/// by the squared magnitude of the largest input coordinate. Near-zero cross
/// products classify as Collinear.
Orientation orientation(Vec2 a, Vec2 b, Vec2 c);

/// Strictly convex polygon, vertices in counterclockwise order.
/// 0, 1 and 2 vertices encode the empty hull, a point and a segment.
struct Hull2D {
    std::vector<Vec2> vertices;

    bool empty() const { return vertices.empty(); }
    std::size_t size() const { return vertices.size(); }
};

/// Strict extreme points of the input, CCW, starting at the lexicographically
/// smallest vertex. Duplicates and points on hull edges are dropped.
Hull2D convex_hull_2d(std::span<const Vec2> points);

double dist_point_segment(Vec2 p, Vec2 a, Vec2 b);

/// Euclidean distance from p to the convex region bounded by h.
/// 0 inside or on the boundary; +infinity for the empty hull (the
/// random-order algorithm treats every point as far from an empty S).
double dist_point_hull_2d(Vec2 p, const Hull2D& h);

constexpr double kInfiniteDistance = std::numeric_limits<double>::infinity();

/// Distance from p to the convex hull of S with certified additive error
/// <= tol, via Wolfe's minimum-norm-point iteration over convex combinations.
/// Throws InvalidInputError for empty S or mismatched dimensions, and
/// NumericFailureError (carrying the best bound) if the gap certificate is
/// not reached within the iteration cap.
double dist_point_hull_nd(const PointN& p, std::span<const PointN> s, double tol = 1e-9);

/// omega_v(P) = max over p in P of p.v. P must be nonempty, dims must match.
double directional_extent(std::span<const PointN> points, const PointN& v);
double directional_extent_2d(std::span<const Vec2> points, Vec2 v);

/// Earliest-arriving argmax of p.t over the sequence (first-arrival ties).
struct MaxWitness {
    double value = -std::numeric_limits<double>::infinity();
    std::size_t index = 0;
    bool has_value = false;

    // Online update: strict improvement replaces, so ties keep first arrival.
    template <typename P>
    void offer(double dot_value, std::size_t idx, const P&) {
        if (!has_value || dot_value > value) {
            value = dot_value;
            index = idx;
            has_value = true;
        }
    }
};

PointN get_max(std::span<const PointN> stream, const PointN& t);
Vec2 get_max_2d(std::span<const Vec2> stream, Vec2 t, std::size_t* index_out = nullptr);

/// Exact two-way Hausdorff distance between the boundaries of two convex
/// polygons (each with >= 1 vertex).
double hausdorff_boundary_2d(const Hull2D& a, const Hull2D& b);

/// Distance from a point to a polygon *boundary* (not the filled region).
double dist_point_polygon_boundary(Vec2 p, const Hull2D& h);

}  // namespace epshull
