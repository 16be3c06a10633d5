#pragma once

#include <cstdint>
#include <vector>

#include "epshull/geom.hpp"

namespace epshull {

/// 2D random-order streaming algorithm: discard points within eps of the
/// current hull, otherwise insert and delete every point that became interior.
/// The insertion-only variant (no deletions) exists for the 1D bound and the
/// grid-growth contrast experiment.
/// Single-consumer state machine: one insert at a time, in stream order.
class Roa {
public:
    explicit Roa(double eps, bool deletions = true);

    void insert(Vec2 p);

    /// Current S as CCW strict hull vertices (copy).
    std::vector<Vec2> current() const;

    std::size_t size() const;
    std::size_t peak_size() const { return peak_size_; }
    std::uint64_t n_seen() const { return n_seen_; }
    double eps() const { return eps_; }

private:
    double eps_;
    bool deletions_;
    Hull2D hull_;                 // S with deletions: exactly the strict vertex set
    std::vector<Vec2> kept_;      // insertion-only mode: all retained points
    std::size_t peak_size_ = 0;
    std::uint64_t n_seen_ = 0;
};

}  // namespace epshull
