#include "epshull/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "epshull/errors.hpp"
#include "epshull/rng.hpp"

namespace epshull {

std::vector<PointN> to_pointn(std::span<const Vec2> p) {
    std::vector<PointN> out;
    out.reserve(p.size());
    for (Vec2 v : p) out.push_back({v.x, v.y});
    return out;
}

std::vector<Vec2> to_vec2(std::span<const PointN> p) {
    std::vector<Vec2> out;
    out.reserve(p.size());
    for (const PointN& q : p) {
        if (q.size() != 2) throw InvalidInputError("to_vec2: point is not 2-dimensional");
        out.push_back({q[0], q[1]});
    }
    return out;
}

EpsHullReport is_eps_hull_2d(std::span<const Vec2> p, std::span<const Vec2> s, double eps,
                             double slack) {
    EpsHullReport rep;
    if (p.empty()) {
        rep.is_valid = true;
        return rep;
    }
    if (s.empty()) {
        rep.is_valid = false;
        rep.max_violation = kInfiniteDistance;
        rep.witness = {p[0].x, p[0].y};
        return rep;
    }
    Hull2D hull = convex_hull_2d(s);
    double worst = -1.0;
    Vec2 witness = p[0];
    for (Vec2 q : p) {
        double d = dist_point_hull_2d(q, hull);
        if (d > worst) {
            worst = d;
            witness = q;
        }
    }
    rep.max_violation = std::max(worst, 0.0);
    rep.witness = {witness.x, witness.y};
    rep.is_valid = rep.max_violation <= eps + slack;
    return rep;
}

EpsHullReport is_eps_hull(std::span<const PointN> p, std::span<const PointN> s, double eps,
                          double slack) {
    EpsHullReport rep;
    if (p.empty()) {
        rep.is_valid = true;
        return rep;
    }
    std::size_t dim = p[0].size();
    for (const PointN& q : p)
        if (q.size() != dim) throw InvalidInputError("is_eps_hull: dimension mismatch in P");
    if (s.empty()) {
        rep.is_valid = false;
        rep.max_violation = kInfiniteDistance;
        rep.witness = p[0];
        return rep;
    }
    for (const PointN& q : s)
        if (q.size() != dim) throw InvalidInputError("is_eps_hull: dimension mismatch in S");

    if (dim == 2) {
        auto pv = to_vec2(p);
        auto sv = to_vec2(s);
        return is_eps_hull_2d(pv, sv, eps, slack);
    }

    double worst = -1.0;
    PointN witness = p[0];
    for (const PointN& q : p) {
        double d = dist_point_hull_nd(q, s, 1e-12);
        if (d > worst) {
            worst = d;
            witness = q;
        }
    }
    rep.max_violation = std::max(worst, 0.0);
    rep.witness = witness;
    rep.is_valid = rep.max_violation <= eps + slack;
    return rep;
}

namespace {

std::vector<PointN> dedup_points(std::span<const PointN> p) {
    std::vector<PointN> out;
    for (const PointN& q : p) {
        bool seen = false;
        for (const PointN& r : out)
            if (r == q) seen = true;
        if (!seen) out.push_back(q);
    }
    return out;
}

// First subset of the given cardinality passing the checker, enumerating in
// lexicographic order over candidate indices. Returns empty on failure.
std::vector<std::size_t> first_valid_subset(std::span<const PointN> p,
                                            const std::vector<PointN>& candidates, double eps,
                                            std::size_t k) {
    std::size_t n = candidates.size();
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<PointN> subset(k);
    for (;;) {
        for (std::size_t i = 0; i < k; ++i) subset[i] = candidates[idx[i]];
        if (is_eps_hull(p, subset, eps).is_valid) return idx;
        // next combination
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] + (k - i) < n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return {};
        }
        if (k == 0) return {};
    }
}

}  // namespace

OptResult opt_brute_force(std::span<const PointN> p, double eps, bool restrict_to_boundary) {
    OptResult res;
    res.restricted_to_boundary = restrict_to_boundary;
    if (p.empty()) return res;

    std::vector<PointN> candidates;
    if (restrict_to_boundary) {
        if (p[0].size() != 2)
            throw InvalidInputError("opt_brute_force: restricted mode requires dim = 2");
        auto pv = to_vec2(p);
        auto boundary = boundary_points_2d(pv);
        candidates = to_pointn(boundary);
        if (candidates.size() > 30)
            throw CapacityError("opt_brute_force: |boundary(P)| = " +
                                std::to_string(candidates.size()) +
                                " exceeds the restricted-mode cap of 30");
    } else {
        candidates = dedup_points(p);
        if (candidates.size() > 18)
            throw CapacityError("opt_brute_force: |P| = " + std::to_string(candidates.size()) +
                                " exceeds the unrestricted cap of 18");
    }

    for (std::size_t k = 1; k <= candidates.size(); ++k) {
        auto idx = first_valid_subset(p, candidates, eps, k);
        if (!idx.empty()) {
            res.size = k;
            for (std::size_t i : idx) res.subset.push_back(candidates[i]);
            return res;
        }
    }
    // Unreachable: the full candidate set is always an eps-hull of P.
    res.size = candidates.size();
    res.subset = candidates;
    return res;
}

std::vector<Vec2> boundary_points_2d(std::span<const Vec2> p) {
    Hull2D hull = convex_hull_2d(p);
    const auto& hv = hull.vertices;
    if (hv.empty()) return {};
    if (hv.size() == 1) return {hv[0]};

    double scale = 1.0;
    for (Vec2 q : p) scale = std::max({scale, std::abs(q.x), std::abs(q.y)});
    double tol = 1e-12 * scale;

    // Order boundary members by (edge index, parameter along edge).
    struct Entry {
        Vec2 pt;
        std::size_t edge;
        double t;
    };
    std::vector<Entry> entries;
    std::size_t edge_count = (hv.size() == 2) ? 1 : hv.size();
    std::vector<Vec2> seen;
    for (Vec2 q : p) {
        bool dup = false;
        for (Vec2 r : seen)
            if (r == q) dup = true;
        if (dup) continue;
        for (std::size_t e = 0; e < edge_count; ++e) {
            Vec2 a = hv[e], b = hv[(e + 1) % hv.size()];
            if (dist_point_segment(q, a, b) <= tol) {
                Vec2 ab = b - a;
                double t = dot(q - a, ab) / std::max(dot(ab, ab), 1e-300);
                // A point at the far end of an edge is the next edge's start;
                // assign it there so every vertex keys to the edge it opens.
                if (t > 1.0 - 1e-12 && edge_count > 1) continue;
                entries.push_back({q, e, t});
                seen.push_back(q);
                break;
            }
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.edge < b.edge || (a.edge == b.edge && a.t < b.t);
    });
    std::vector<Vec2> out;
    out.reserve(entries.size());
    for (const Entry& e : entries) out.push_back(e.pt);
    return out;
}

OptResult opt_boundary_cover_2d(std::span<const Vec2> p, double eps) {
    OptResult res;
    res.restricted_to_boundary = true;
    if (p.empty()) return res;

    std::vector<Vec2> c = boundary_points_2d(p);
    std::size_t h = c.size();
    auto finish = [&res](std::vector<Vec2> subset) {
        res.size = subset.size();
        res.subset = to_pointn(subset);
        return res;
    };
    if (h == 1) return finish({c[0]});

    double limit = eps + kCheckerSlack;

    // Single point covering everything (hull vertices dominate all of P).
    for (std::size_t i = 0; i < h; ++i) {
        double worst = 0.0;
        for (std::size_t k = 0; k < h; ++k) worst = std::max(worst, dist(c[k], c[i]));
        if (worst <= limit) return finish({c[i]});
    }

    // reach[i] = longest feasible gap starting at i. Gap errors are monotone
    // under widening, so the scan can stop at the first infeasible width.
    std::vector<std::size_t> reach(h, 1);
    for (std::size_t i = 0; i < h; ++i) {
        std::size_t s = 1;
        while (s + 1 < h) {
            Vec2 a = c[i], b = c[(i + s + 1) % h];
            double worst = 0.0;
            for (std::size_t k = 1; k <= s; ++k)
                worst = std::max(worst, dist_point_segment(c[(i + k) % h], a, b));
            if (worst > limit) break;
            ++s;
        }
        reach[i] = s;
    }

    std::size_t best_count = h + 1;
    std::size_t best_anchor = 0;
    for (std::size_t a = 0; a < h; ++a) {
        std::size_t count = 1;
        std::size_t cur = a;
        while (cur + reach[cur % h] < a + h) {
            cur += reach[cur % h];
            ++count;
            if (count > h) break;
        }
        if (count < best_count) {
            best_count = count;
            best_anchor = a;
        }
    }

    std::vector<Vec2> subset;
    std::size_t cur = best_anchor;
    subset.push_back(c[cur % h]);
    while (cur + reach[cur % h] < best_anchor + h) {
        cur += reach[cur % h];
        subset.push_back(c[cur % h]);
    }
    return finish(std::move(subset));
}

double eps_delta_bad_fraction(std::span<const PointN> p, std::span<const PointN> s, double eps,
                              int num_samples, std::uint64_t seed) {
    if (s.empty()) throw InvalidInputError("eps_delta_bad_fraction: empty S");
    if (p.empty()) throw InvalidInputError("eps_delta_bad_fraction: empty P");
    if (num_samples < 1) throw InvalidInputError("eps_delta_bad_fraction: num_samples < 1");
    std::size_t dim = p[0].size();
    for (const PointN& q : p)
        if (q.size() != dim) throw InvalidInputError("eps_delta_bad_fraction: dim mismatch in P");
    for (const PointN& q : s)
        if (q.size() != dim) throw InvalidInputError("eps_delta_bad_fraction: dim mismatch in S");

    // Extents live on hull vertices; in 2D reduce both sets exactly.
    std::vector<PointN> p_red, s_red;
    if (dim == 2) {
        p_red = to_pointn(convex_hull_2d(to_vec2(p)).vertices);
        s_red = to_pointn(convex_hull_2d(to_vec2(s)).vertices);
        p = p_red;
        s = s_red;
    }

    // Flat layout for the sampling loop.
    std::vector<double> pf(p.size() * dim), sf(s.size() * dim);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t k = 0; k < dim; ++k) pf[i * dim + k] = p[i][k];
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t k = 0; k < dim; ++k) sf[i * dim + k] = s[i][k];

    Rng rng(seed);
    std::vector<double> v(dim);
    long bad = 0;
    for (int it = 0; it < num_samples; ++it) {
        v = rng.unit_direction(static_cast<int>(dim));
        double wp = -kInfiniteDistance;
        for (std::size_t i = 0; i < p.size(); ++i) {
            double d = 0.0;
            for (std::size_t k = 0; k < dim; ++k) d += pf[i * dim + k] * v[k];
            wp = std::max(wp, d);
        }
        double ws = -kInfiniteDistance;
        for (std::size_t i = 0; i < s.size(); ++i) {
            double d = 0.0;
            for (std::size_t k = 0; k < dim; ++k) d += sf[i * dim + k] * v[k];
            ws = std::max(ws, d);
        }
        if (wp - ws > eps) ++bad;
    }
    return static_cast<double>(bad) / num_samples;
}

double meaningful_margin_2d(std::span<const Vec2> p) {
    if (p.size() < 2) throw InvalidInputError("meaningful_margin: |P| < 2");
    std::vector<Vec2> rest;
    rest.reserve(p.size() - 1);
    double margin = kInfiniteDistance;
    for (std::size_t i = 0; i < p.size(); ++i) {
        rest.clear();
        for (std::size_t j = 0; j < p.size(); ++j)
            if (j != i) rest.push_back(p[j]);
        margin = std::min(margin, dist_point_hull_2d(p[i], convex_hull_2d(rest)));
        if (margin == 0.0) break;
    }
    return margin;
}

double meaningful_margin(std::span<const PointN> p) {
    if (p.size() < 2) throw InvalidInputError("meaningful_margin: |P| < 2");
    std::size_t dim = p[0].size();
    if (dim != 2 && dim != 3) throw InvalidInputError("meaningful_margin: dim must be 2 or 3");
    for (const PointN& q : p)
        if (q.size() != dim) throw InvalidInputError("meaningful_margin: dimension mismatch");
    if (dim == 2) {
        auto pv = to_vec2(p);
        return meaningful_margin_2d(pv);
    }
    std::vector<PointN> rest;
    rest.reserve(p.size() - 1);
    double margin = kInfiniteDistance;
    for (std::size_t i = 0; i < p.size(); ++i) {
        rest.clear();
        for (std::size_t j = 0; j < p.size(); ++j)
            if (j != i) rest.push_back(p[j]);
        margin = std::min(margin, dist_point_hull_nd(p[i], rest, 1e-12));
        if (margin == 0.0) break;
    }
    return margin;
}

}  // namespace epshull
