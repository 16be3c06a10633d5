#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "epshull/geom.hpp"

namespace epshull {

enum class SketchMode {
    Practical,  // m = ceil(c * k/delta^2 * ln(k*d/(gamma*delta)))
    Full,       // multiplies in the conservative d^(2d+2) dimension factor
};

struct SketchParams {
    int k = 1;               // assumed bound on OPT(P, eps)
    double delta = 0.1;      // bad-direction measure target, in (0,1)
    double gamma = 0.1;      // failure probability, in (0,1)
    int dim = 2;
    double constant_c = 1.0;  // tunable leading constant of the Theta bound
    std::uint64_t seed = 0;
    SketchMode mode = SketchMode::Practical;
};

/// Number of random directions the sketch draws for these parameters.
std::size_t required_m(const SketchParams& params);

/// One-pass d-dimensional sampler: m uniform directions on S^{d-1}, each slot
/// keeping the streaming argmax in its direction (first-arrival ties).
/// Single-consumer per stream; slot updates depend only on their own state.
class DirectionSketch {
public:
    explicit DirectionSketch(const SketchParams& params);

    void update(const PointN& p);

    /// Deduplicated slot winners. Throws InvalidInputError before any update.
    std::vector<PointN> output() const;

    const SketchParams& params() const { return params_; }
    std::size_t slot_count() const { return dirs_.size(); }
    const PointN& slot_direction(std::size_t i) const { return dirs_[i]; }
    const std::optional<PointN>& slot_best(std::size_t i) const { return best_[i]; }
    double slot_best_dot(std::size_t i) const { return best_dot_[i]; }
    std::uint64_t points_seen() const { return seen_; }

private:
    SketchParams params_;
    std::vector<PointN> dirs_;
    std::vector<std::optional<PointN>> best_;
    std::vector<double> best_dot_;
    std::uint64_t seen_ = 0;
};

}  // namespace epshull
