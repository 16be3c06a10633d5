#pragma once

// Independent reference implementations used only by tests. Each one takes a
// deliberately different route from the library code it checks.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "epshull/geom.hpp"
#include "epshull/oracles.hpp"
#include "epshull/rng.hpp"

namespace epshull::testref {

constexpr double kPi = 3.14159265358979323846264338328;

// --- Caratheodory-style extremity test -------------------------------------
// p is in conv(R) in 2D iff p lies in some triangle (or segment) of R.

inline double cr(Vec2 a, Vec2 b, Vec2 c) { return cross(b - a, c - a); }

inline bool on_segment_ref(Vec2 p, Vec2 a, Vec2 b, double tol) {
    return dist_point_segment(p, a, b) <= tol;
}

inline bool in_triangle_ref(Vec2 p, Vec2 a, Vec2 b, Vec2 c, double tol) {
    double d1 = cr(a, b, p), d2 = cr(b, c, p), d3 = cr(c, a, p);
    bool has_neg = (d1 < -tol) || (d2 < -tol) || (d3 < -tol);
    bool has_pos = (d1 > tol) || (d2 > tol) || (d3 > tol);
    return !(has_neg && has_pos);
}

inline bool in_convex_combination_ref(Vec2 p, const std::vector<Vec2>& r, double tol = 1e-12) {
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (dist(p, r[i]) <= tol) return true;
        for (std::size_t j = i + 1; j < r.size(); ++j) {
            if (on_segment_ref(p, r[i], r[j], tol)) return true;
            for (std::size_t k = j + 1; k < r.size(); ++k) {
                double area = std::abs(cr(r[i], r[j], r[k]));
                if (area <= tol) continue;
                if (in_triangle_ref(p, r[i], r[j], r[k], tol)) return true;
            }
        }
    }
    return false;
}

// Strict extreme points of P by per-point exclusion, brute force.
inline std::vector<Vec2> brute_extreme_points(const std::vector<Vec2>& p) {
    std::vector<Vec2> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::vector<Vec2> rest;
        for (std::size_t j = 0; j < p.size(); ++j)
            if (j != i && !(p[j] == p[i])) rest.push_back(p[j]);
        if (!in_convex_combination_ref(p[i], rest)) {
            bool dup = false;
            for (Vec2 q : out)
                if (q == p[i]) dup = true;
            if (!dup) out.push_back(p[i]);
        }
    }
    return out;
}

// --- Projected-gradient distance to a convex hull --------------------------
// FISTA on weights over the simplex; independent of Wolfe's method.

inline void project_simplex(std::vector<double>& w) {
    std::vector<double> u = w;
    std::sort(u.begin(), u.end(), std::greater<double>());
    double css = 0.0, theta = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        css += u[i];
        double t = (css - 1.0) / static_cast<double>(i + 1);
        if (u[i] - t > 0) theta = t;
    }
    for (double& x : w) x = std::max(x - theta, 0.0);
}

inline double pgd_dist_to_hull(const PointN& p, const std::vector<PointN>& s, int iters = 30000) {
    std::size_t n = s.size(), d = p.size();
    std::vector<double> w(n, 1.0 / static_cast<double>(n)), y = w, w_prev = w;
    double lip = 0.0;
    for (const PointN& q : s) {
        double nn = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            double u = q[k] - p[k];
            nn += u * u;
        }
        lip = std::max(lip, nn);
    }
    lip = 2.0 * lip * static_cast<double>(n);
    double step = 1.0 / std::max(lip, 1e-12);
    double t_acc = 1.0;
    std::vector<double> x(d), g(n);
    for (int it = 0; it < iters; ++it) {
        for (std::size_t k = 0; k < d; ++k) {
            double xv = -p[k];
            for (std::size_t i = 0; i < n; ++i) xv += y[i] * s[i][k];
            x[k] = xv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            double gv = 0.0;
            for (std::size_t k = 0; k < d; ++k) gv += 2.0 * x[k] * (s[i][k] - p[k]);
            g[i] = gv;
        }
        w_prev = w;
        w = y;
        for (std::size_t i = 0; i < n; ++i) w[i] -= step * g[i];
        project_simplex(w);
        double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t_acc * t_acc));
        for (std::size_t i = 0; i < n; ++i)
            y[i] = w[i] + ((t_acc - 1.0) / t_next) * (w[i] - w_prev[i]);
        t_acc = t_next;
    }
    double out = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        double xv = -p[k];
        for (std::size_t i = 0; i < n; ++i) xv += w[i] * s[i][k];
        out += xv * xv;
    }
    return std::sqrt(out);
}

// --- Ear error via polygon clipping -----------------------------------------
// Builds the ear as hull(P) clipped to the closed left halfplane of q1->q2,
// then takes the max chord distance over P-members of that component.

inline std::vector<Vec2> clip_left_halfplane(const std::vector<Vec2>& poly, Vec2 q1, Vec2 q2) {
    auto side = [&](Vec2 p) { return cross(q2 - q1, p - q1); };
    std::vector<Vec2> out;
    std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 a = poly[i], b = poly[(i + 1) % n];
        double sa = side(a), sb = side(b);
        if (sa >= 0.0) out.push_back(a);
        if ((sa > 0.0 && sb < 0.0) || (sa < 0.0 && sb > 0.0)) {
            double t = sa / (sa - sb);
            out.push_back(a + t * (b - a));
        }
    }
    return out;
}

inline bool in_polygon_tol(Vec2 p, const std::vector<Vec2>& poly, double tol) {
    std::size_t n = poly.size();
    if (n == 0) return false;
    if (n == 1) return dist(p, poly[0]) <= tol;
    if (n == 2) return dist_point_segment(p, poly[0], poly[1]) <= tol;
    for (std::size_t i = 0; i < n; ++i) {
        if (cross(poly[(i + 1) % n] - poly[i], p - poly[i]) < -tol) return false;
    }
    return true;
}

inline double ear_error_ref(const std::vector<Vec2>& p, Vec2 q1, Vec2 q2) {
    Hull2D hull = convex_hull_2d(p);
    if (hull.size() < 3) {
        // Collinear input: the ear side holds no area, error 0 unless points
        // sit strictly left, which collinearity forbids.
        return 0.0;
    }
    double scale = 0.0;
    for (Vec2 q : p) scale = std::max({scale, std::abs(q.x), std::abs(q.y)});
    scale = std::max({scale, std::abs(q1.x), std::abs(q1.y), std::abs(q2.x), std::abs(q2.y)});
    double side_tol = 1e-12 * scale * scale;  // same strict-side convention as orientation()
    double tol = 1e-9 * std::max(scale, 1.0);
    auto ear = clip_left_halfplane(hull.vertices, q1, q2);
    double err = 0.0;
    for (Vec2 q : p) {
        if (cross(q2 - q1, q - q1) <= side_tol) continue;  // not strictly left
        if (in_polygon_tol(q, ear, tol))
            err = std::max(err, dist_point_segment(q, q1, q2));
    }
    return err;
}

// --- Exact 2D bad-direction arc measure -------------------------------------
// Piecewise analysis over the angular breakpoints of both support functions.

inline std::vector<double> support_breaks(const Hull2D& h) {
    std::vector<double> breaks;
    const auto& v = h.vertices;
    if (v.size() < 2) return breaks;
    std::size_t edges = (v.size() == 2) ? 2 : v.size();
    for (std::size_t i = 0; i < edges; ++i) {
        Vec2 a = v[i % v.size()], b = v[(i + 1) % v.size()];
        Vec2 d = b - a;
        double ang = std::atan2(-d.x, d.y);  // outward normal of a CCW edge
        if (ang < 0) ang += 2 * kPi;
        breaks.push_back(ang);
    }
    return breaks;
}

inline double exact_bad_arc_fraction_2d(const std::vector<Vec2>& p, const std::vector<Vec2>& s,
                                        double eps) {
    Hull2D hp = convex_hull_2d(p), hs = convex_hull_2d(s);
    std::vector<double> breaks = support_breaks(hp);
    for (double b : support_breaks(hs)) breaks.push_back(b);
    breaks.push_back(0.0);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    breaks.push_back(breaks.front() + 2 * kPi);

    double bad = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        double lo = breaks[i], hi = breaks[i + 1];
        if (hi - lo < 1e-15) continue;
        double mid = 0.5 * (lo + hi);
        Vec2 vmid{std::cos(mid), std::sin(mid)};
        Vec2 pstar = hp.vertices[0], sstar = hs.vertices[0];
        for (Vec2 q : hp.vertices)
            if (dot(q, vmid) > dot(pstar, vmid)) pstar = q;
        for (Vec2 q : hs.vertices)
            if (dot(q, vmid) > dot(sstar, vmid)) sstar = q;
        Vec2 w = pstar - sstar;
        double r = norm(w);
        if (r <= eps) continue;  // never exceeds eps on this arc
        double phi = std::atan2(w.y, w.x);
        double alpha = (eps <= 0.0) ? kPi / 2 : std::acos(std::min(eps / r, 1.0));
        // Bad set on this arc: theta in (phi - alpha, phi + alpha), mod 2pi.
        for (int shift = -1; shift <= 1; ++shift) {
            double a = phi - alpha + 2 * kPi * shift;
            double b = phi + alpha + 2 * kPi * shift;
            double x = std::max(a, lo), y = std::min(b, hi);
            if (y > x) bad += y - x;
        }
    }
    return bad / (2 * kPi);
}

// --- Dense boundary sampling Hausdorff --------------------------------------

inline double sampled_hausdorff_boundary(const Hull2D& a, const Hull2D& b, int samples) {
    auto directed = [samples](const Hull2D& src, const Hull2D& dst) {
        const auto& v = src.vertices;
        double best = 0.0;
        if (v.size() == 1) return dist_point_polygon_boundary(v[0], dst);
        std::size_t edges = (v.size() == 2) ? 1 : v.size();
        int per_edge = std::max(samples / static_cast<int>(edges), 2);
        for (std::size_t i = 0; i < edges; ++i) {
            Vec2 p0 = v[i], p1 = v[(i + 1) % v.size()];
            for (int t = 0; t <= per_edge; ++t) {
                Vec2 x = p0 + (static_cast<double>(t) / per_edge) * (p1 - p0);
                best = std::max(best, dist_point_polygon_boundary(x, dst));
            }
        }
        return best;
    };
    return std::max(directed(a, b), directed(b, a));
}

// --- Random instance helpers -------------------------------------------------

inline std::vector<Vec2> random_points_square(Rng& rng, std::size_t n) {
    std::vector<Vec2> p(n);
    for (Vec2& q : p) q = {rng.uniform01(), rng.uniform01()};
    return p;
}

inline std::vector<Vec2> random_points_disk(Rng& rng, std::size_t n, double radius = 1.0) {
    std::vector<Vec2> p(n);
    for (Vec2& q : p) {
        double a = 2 * kPi * rng.uniform01();
        double r = radius * std::sqrt(rng.uniform01());
        q = {r * std::cos(a), r * std::sin(a)};
    }
    return p;
}

inline std::vector<Vec2> random_convex_position(Rng& rng, std::size_t n) {
    // Distinct angles on an ellipse: strictly convex position.
    std::vector<double> angs(n);
    for (double& a : angs) a = 2 * kPi * rng.uniform01();
    std::sort(angs.begin(), angs.end());
    double rx = 0.5 + rng.uniform01(), ry = 0.5 + rng.uniform01();
    std::vector<Vec2> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = {rx * std::cos(angs[i]), ry * std::sin(angs[i])};
    return p;
}

}  // namespace epshull::testref
