#include "epshull/streamgen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "epshull/errors.hpp"
#include "epshull/oracles.hpp"
#include "epshull/rng.hpp"

namespace epshull {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

std::vector<Vec2> generate_2d(const StreamSpec& spec) {
    if (spec.n < 1) throw InvalidInputError("generate: n must be >= 1");
    Rng rng(spec.seed);
    std::vector<Vec2> out;
    out.reserve(spec.n);
    switch (spec.kind) {
        case StreamKind::Circle: {
            if (spec.radius <= 0.0) throw InvalidInputError("generate: radius must be positive");
            for (std::size_t i = 0; i < spec.n; ++i) {
                double a = spec.equally_spaced ? kTwoPi * static_cast<double>(i) / spec.n
                                               : kTwoPi * rng.uniform01();
                out.push_back({spec.radius * std::cos(a), spec.radius * std::sin(a)});
            }
            return out;
        }
        case StreamKind::Disk: {
            if (spec.radius <= 0.0) throw InvalidInputError("generate: radius must be positive");
            for (std::size_t i = 0; i < spec.n; ++i) {
                double a = kTwoPi * rng.uniform01();
                double r = spec.radius * std::sqrt(rng.uniform01());
                out.push_back({r * std::cos(a), r * std::sin(a)});
            }
            return out;
        }
        case StreamKind::SquareGrid: {
            auto side = static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(spec.n))));
            if (side < 1) side = 1;
            if (side == 1) {
                out.push_back({0.5, 0.5});
                return out;
            }
            for (std::size_t i = 0; i < side; ++i)
                for (std::size_t j = 0; j < side; ++j)
                    out.push_back({static_cast<double>(i) / (side - 1),
                                   static_cast<double>(j) / (side - 1)});
            return out;
        }
        case StreamKind::NgonBoundary: {
            if (spec.ngon_k < 3) throw InvalidInputError("generate: ngon_k must be >= 3");
            if (spec.n < static_cast<std::size_t>(spec.ngon_k))
                throw InvalidInputError("generate: ngon_boundary needs n >= k");
            int k = spec.ngon_k;
            std::vector<Vec2> corners(k);
            for (int i = 0; i < k; ++i) {
                double a = kTwoPi * i / k;
                corners[i] = {spec.radius * std::cos(a), spec.radius * std::sin(a)};
            }
            for (Vec2 c : corners) out.push_back(c);
            for (std::size_t i = k; i < spec.n; ++i) {
                double t = rng.uniform01() * k;  // edge index + position
                int e = std::min(static_cast<int>(t), k - 1);
                double u = t - e;
                Vec2 a = corners[e], b = corners[(e + 1) % k];
                out.push_back(a + u * (b - a));
            }
            return out;
        }
        case StreamKind::Gaussian: {
            if (spec.dim != 2)
                throw InvalidInputError("generate_2d: gaussian with dim != 2; use generate()");
            for (std::size_t i = 0; i < spec.n; ++i)
                out.push_back({rng.gaussian(), rng.gaussian()});
            return out;
        }
        case StreamKind::LowerBound3D:
            throw InvalidInputError("generate_2d: lower_bound_3d is 3-dimensional; use gen_lower_bound_3d");
    }
    throw InvalidInputError("generate: unknown kind");
}

std::vector<PointN> generate(const StreamSpec& spec) {
    if (spec.kind == StreamKind::Gaussian && spec.dim != 2) {
        if (spec.dim < 1) throw InvalidInputError("generate: dim must be >= 1");
        if (spec.n < 1) throw InvalidInputError("generate: n must be >= 1");
        Rng rng(spec.seed);
        std::vector<PointN> out;
        out.reserve(spec.n);
        for (std::size_t i = 0; i < spec.n; ++i) {
            PointN p(static_cast<std::size_t>(spec.dim));
            for (double& x : p) x = rng.gaussian();
            out.push_back(std::move(p));
        }
        return out;
    }
    if (spec.kind == StreamKind::LowerBound3D)
        throw InvalidInputError("generate: lower_bound_3d needs gen_lower_bound_3d");
    return to_pointn(generate_2d(spec));
}

std::vector<PointN> shuffle_random_order(std::span<const PointN> p, std::uint64_t seed) {
    std::vector<PointN> out(p.begin(), p.end());
    Rng rng(seed);
    rng.shuffle(out);
    return out;
}

std::vector<Vec2> shuffle_random_order_2d(std::span<const Vec2> p, std::uint64_t seed) {
    std::vector<Vec2> out(p.begin(), p.end());
    Rng rng(seed);
    rng.shuffle(out);
    return out;
}

namespace {

// Margin of a point set known to be in strictly convex position: removing a
// vertex exposes only the chord between its cyclic neighbors. Falls back to
// the O(n^2) definition when the set is not in convex position.
double layer_margin_2d(const std::vector<Vec2>& layer) {
    Hull2D hull = convex_hull_2d(layer);
    if (hull.size() == layer.size() && layer.size() >= 3) {
        const auto& v = hull.vertices;
        double margin = kInfiniteDistance;
        for (std::size_t i = 0; i < v.size(); ++i) {
            Vec2 prev = v[(i + v.size() - 1) % v.size()];
            Vec2 next = v[(i + 1) % v.size()];
            margin = std::min(margin, dist_point_segment(v[i], prev, next));
        }
        return margin;
    }
    return meaningful_margin_2d(layer);
}

Vec2 rotate(Vec2 v, double c, double s) { return {c * v.x - s * v.y, s * v.x + c * v.y}; }

// Arc of m points from a to b bulging toward apex_target, apex at the given
// fraction of the chord-to-target height. The fraction is clamped so the arc
// stays strictly inside the triangle (a, apex_target, b): the endpoint
// tangent must not be steeper than the triangle side.
std::vector<Vec2> fan_arc(Vec2 a, Vec2 b, Vec2 apex_target, std::size_t m,
                          double apex_fraction) {
    Vec2 mid = 0.5 * (a + b);
    double c = dist(a, b);
    if (c <= 0.0) throw NumericFailureError("fan_arc: degenerate chord", 0.0);
    Vec2 chord_dir = (1.0 / c) * (b - a);
    Vec2 normal{-chord_dir.y, chord_dir.x};
    double h = dot(apex_target - a, normal);
    if (h < 0.0) {
        normal = {-normal.x, -normal.y};
        h = -h;
    }
    if (h <= 0.0) throw NumericFailureError("fan_arc: flat group triangle", h);

    double hc2 = (h * h) / (c * c);
    double kappa_max = (std::sqrt(1.0 + 8.0 * hc2) - 1.0) / (4.0 * hc2);
    double kappa = std::min(apex_fraction, 0.995 * kappa_max);
    double s = kappa * h;

    double radius = (c * c / 4.0 + s * s) / (2.0 * s);
    Vec2 center = mid + (s - radius) * normal;
    Vec2 u = a - center;
    Vec2 v = b - center;
    double sweep = std::atan2(cross(u, v), dot(u, v));  // minor arc through the apex

    std::vector<Vec2> pts(m);
    pts[0] = a;
    pts[m - 1] = b;
    for (std::size_t i = 1; i + 1 < m; ++i) {
        double t = sweep * static_cast<double>(i) / static_cast<double>(m - 1);
        pts[i] = center + rotate(u, std::cos(t), std::sin(t));
    }
    return pts;
}

}  // namespace

LowerBoundArtifact gen_lower_bound_3d(const GrowthTable& f, int r, std::size_t size_cap,
                                      double apex_fraction) {
    if (!f) throw InvalidInputError("gen_lower_bound_3d: f is empty");
    if (r < 1) throw InvalidInputError("gen_lower_bound_3d: r must be >= 1");
    if (!(apex_fraction > 0.0 && apex_fraction < 1.0))
        throw InvalidInputError("gen_lower_bound_3d: apex_fraction must be in (0,1)");
    auto fval = [&f](long long x) {
        long long v = f(x);
        if (v < 1)
            throw InvalidInputError("gen_lower_bound_3d: f(" + std::to_string(x) +
                                    ") = " + std::to_string(v) + " must be >= 1");
        return v;
    };

    // Layer xy-layouts first; z coordinates need eps_star, which needs margins.
    std::vector<std::vector<Vec2>> layers;
    layers.push_back({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});

    std::size_t total = 4;
    long long n2 = 10 * fval(4);
    {
        std::vector<Vec2> poly(static_cast<std::size_t>(n2));
        for (long long i = 0; i < n2; ++i) {
            double a = kTwoPi * static_cast<double>(i) / static_cast<double>(n2);
            poly[static_cast<std::size_t>(i)] = {0.5 + 0.49 * std::cos(a),
                                                 0.5 + 0.49 * std::sin(a)};
        }
        total += poly.size();
        if (total > size_cap)
            throw CapacityError("gen_lower_bound_3d: size cap " + std::to_string(size_cap) +
                                " exceeded");
        layers.push_back(std::move(poly));
    }

    for (int layer_i = 2; layer_i <= r; ++layer_i) {
        const std::vector<Vec2>& prev = layers.back();
        if (prev.size() % 5 != 0)
            throw NumericFailureError("gen_lower_bound_3d: layer size not divisible by 5",
                                      static_cast<double>(prev.size()));
        long long m = 10 * fval(static_cast<long long>(total));
        std::vector<Vec2> next;
        next.reserve(prev.size() / 5 * static_cast<std::size_t>(m));
        for (std::size_t g = 0; g + 5 <= prev.size(); g += 5) {
            Vec2 a2 = prev[g + 1], a3 = prev[g + 2], a4 = prev[g + 3];
            auto fan = fan_arc(a2, a4, a3, static_cast<std::size_t>(m), apex_fraction);
            next.insert(next.end(), fan.begin(), fan.end());
        }
        total += next.size();
        if (total > size_cap)
            throw CapacityError("gen_lower_bound_3d: size cap " + std::to_string(size_cap) +
                                " exceeded");
        layers.push_back(std::move(next));
    }

    LowerBoundArtifact art;
    double min_margin = kInfiniteDistance;
    for (const auto& layer : layers) {
        double mg = layer_margin_2d(layer);
        art.layer_margins.push_back(mg);
        min_margin = std::min(min_margin, mg);
    }
    if (!(min_margin > 1e-12))
        throw NumericFailureError("gen_lower_bound_3d: construction margin degenerate",
                                  min_margin);
    art.eps_star = 0.99 * min_margin;

    for (std::size_t li = 0; li < layers.size(); ++li) {
        art.layer_offsets.push_back(art.stream.size());
        art.layer_sizes.push_back(layers[li].size());
        double z = art.eps_star * static_cast<double>(li);
        for (Vec2 p : layers[li]) art.stream.push_back({p.x, p.y, z});
    }
    art.group_map.resize(layers[1].size());
    for (std::size_t i = 0; i < art.group_map.size(); ++i) art.group_map[i] = i / 5;
    return art;
}

KeeperResult greedy_keeper_run(std::span<const PointN> p, double eps) {
    if (eps < 0.0) throw InvalidInputError("greedy_keeper_run: eps must be nonnegative");
    KeeperResult res;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].size() != 3) throw InvalidInputError("greedy_keeper_run: dim must be 3");
        double d = res.kept.empty() ? kInfiniteDistance
                                    : dist_point_hull_nd(p[i], res.kept, 1e-12);
        if (d > eps + kCheckerSlack) {
            res.kept.push_back(p[i]);
            res.kept_indices.push_back(i);
        }
    }
    return res;
}

}  // namespace epshull
