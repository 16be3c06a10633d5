#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "epshull/geom.hpp"

namespace epshull {

/// Angle 2*pi*numerator/2^level in canonical reduced form (numerator odd, or
/// numerator = 0 at level 0). Direction bisection stays dyadic, so equality
/// tests on directions are exact integer comparisons.
struct DyadicAngle {
    std::uint64_t numerator = 0;
    int level = 0;

    static DyadicAngle make(std::uint64_t numerator, int level);
    Vec2 to_direction() const;
    double fraction() const;  // angle / 2pi, in [0, 1)

    friend bool operator==(const DyadicAngle& a, const DyadicAngle& b) {
        return a.numerator == b.numerator && a.level == b.level;
    }
};

/// Midpoint of the clockwise arc from a to b (the arc traversed in decreasing
/// angle, wrapping mod 2pi). Throws InvalidInputError when a == b.
DyadicAngle bisect_clockwise(const DyadicAngle& a, const DyadicAngle& b);

/// Rewindable point stream: one full traversal per pass.
class PointSource2D {
public:
    virtual ~PointSource2D() = default;
    virtual void reset() = 0;
    /// Returns false at end of stream.
    virtual bool next(Vec2& out) = 0;
};

class VectorSource2D final : public PointSource2D {
public:
    explicit VectorSource2D(std::vector<Vec2> points) : points_(std::move(points)) {}
    void reset() override { pos_ = 0; }
    bool next(Vec2& out) override {
        if (pos_ >= points_.size()) return false;
        out = points_[pos_++];
        return true;
    }

private:
    std::vector<Vec2> points_;
    std::size_t pos_ = 0;
};

/// Max distance to the segment [q1,q2] over stream points p with (q1, p, q2)
/// clockwise; 0 when the ear is empty. One pass over P.
double error_ear(PointSource2D& stream, Vec2 q1, Vec2 q2);
double error_ear(std::span<const Vec2> points, Vec2 q1, Vec2 q2);

struct MultipassResult {
    std::vector<Vec2> hull;   // deduplicated direction witnesses
    int passes = 0;           // full traversals of P, the initial GetMax pass included
    std::size_t peak_words = 0;  // four retained words per live direction during a pass
    std::size_t final_directions = 0;
    // After pass p (1-based), the live directions are a subset of the
    // 2^p equally spaced dyadic angles; max_level_per_pass[p-1] records the
    // deepest dyadic level actually present, exactly checkable.
    std::vector<int> max_level_per_pass;
};

/// The multipass algorithm: maintain a clockwise direction list seeded with
/// (1,0) and (-1,0), refine by clockwise bisection wherever the ear error
/// exceeds eps, delete directions whose skip-pair error is already below eps,
/// and stop on the first pass that inserts nothing.
MultipassResult multipass_run(PointSource2D& stream, double eps);
MultipassResult multipass_run(std::span<const Vec2> points, double eps);

}  // namespace epshull
