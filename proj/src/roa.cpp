#include "epshull/roa.hpp"

#include <algorithm>
#include <cmath>

#include "epshull/errors.hpp"
#include "epshull/oracles.hpp"

namespace epshull {

Roa::Roa(double eps, bool deletions) : eps_(eps), deletions_(deletions) {
    if (eps < 0.0) throw InvalidInputError("roa: eps must be nonnegative");
    if (!std::isfinite(eps)) throw InvalidInputError("roa: eps must be finite");
}

void Roa::insert(Vec2 p) {
    ++n_seen_;
    double d = dist_point_hull_2d(p, hull_);
    if (d <= eps_ + kCheckerSlack) return;  // discard, boundary counts as inside

    if (deletions_) {
        // Deleting interior points until none remain leaves exactly the strict
        // vertex set of C(S u {p}) in 2D, so one hull rebuild does the whole loop.
        std::vector<Vec2> pts = hull_.vertices;
        pts.push_back(p);
        hull_ = convex_hull_2d(pts);
        peak_size_ = std::max(peak_size_, hull_.size());
    } else {
        kept_.push_back(p);
        std::vector<Vec2> pts = hull_.vertices;
        pts.push_back(p);
        hull_ = convex_hull_2d(pts);  // only used for distance queries
        peak_size_ = std::max(peak_size_, kept_.size());
    }
}

std::vector<Vec2> Roa::current() const { return deletions_ ? hull_.vertices : kept_; }

std::size_t Roa::size() const { return deletions_ ? hull_.size() : kept_.size(); }

}  // namespace epshull
