#include "epshull/epsdelta.hpp"

#include <cmath>

#include "epshull/errors.hpp"
#include "epshull/rng.hpp"

namespace epshull {

namespace {

void validate(const SketchParams& p) {
    if (p.k < 1) throw InvalidInputError("sketch: k must be >= 1");
    if (!(p.delta > 0.0 && p.delta < 1.0)) throw InvalidInputError("sketch: delta not in (0,1)");
    if (!(p.gamma > 0.0 && p.gamma < 1.0)) throw InvalidInputError("sketch: gamma not in (0,1)");
    if (p.dim < 1) throw InvalidInputError("sketch: dim must be >= 1");
    if (!(p.constant_c > 0.0)) throw InvalidInputError("sketch: constant_c must be positive");
}

}  // namespace

std::size_t required_m(const SketchParams& params) {
    validate(params);
    double k = params.k;
    double d = params.dim;
    double m = params.constant_c * (k / (params.delta * params.delta)) *
               std::log(k * d / (params.gamma * params.delta));
    if (params.mode == SketchMode::Full) m *= std::pow(d, 2.0 * d + 2.0);
    double ceiled = std::ceil(m);
    if (ceiled < 1.0) return 1;
    if (ceiled > 5e8) throw CapacityError("required_m: direction count exceeds 5e8");
    return static_cast<std::size_t>(ceiled);
}

DirectionSketch::DirectionSketch(const SketchParams& params) : params_(params) {
    std::size_t m = required_m(params);
    Rng rng(params.seed);
    dirs_.reserve(m);
    for (std::size_t i = 0; i < m; ++i) dirs_.push_back(rng.unit_direction(params.dim));
    best_.assign(m, std::nullopt);
    best_dot_.assign(m, 0.0);
}

void DirectionSketch::update(const PointN& p) {
    if (p.size() != static_cast<std::size_t>(params_.dim))
        throw InvalidInputError("sketch: point dimension mismatch");
    ++seen_;
    std::size_t d = p.size();
    for (std::size_t i = 0; i < dirs_.size(); ++i) {
        const PointN& t = dirs_[i];
        double v = 0.0;
        for (std::size_t kk = 0; kk < d; ++kk) v += p[kk] * t[kk];
        if (!best_[i].has_value() || v > best_dot_[i]) {  // strict: first arrival wins ties
            best_[i] = p;
            best_dot_[i] = v;
        }
    }
}

std::vector<PointN> DirectionSketch::output() const {
    if (seen_ == 0) throw InvalidInputError("sketch: no points processed");
    std::vector<PointN> out;
    for (const auto& b : best_) {
        if (!b.has_value()) continue;
        bool dup = false;
        for (const PointN& q : out)
            if (q == *b) dup = true;
        if (!dup) out.push_back(*b);
    }
    return out;
}

}  // namespace epshull
