#include "epshull/geom.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "epshull/errors.hpp"

namespace epshull {

double norm(Vec2 a) { return std::hypot(a.x, a.y); }
double dist(Vec2 a, Vec2 b) { return norm(a - b); }

Orientation orientation(Vec2 a, Vec2 b, Vec2 c) {
    double s = std::max({std::abs(a.x), std::abs(a.y), std::abs(b.x), std::abs(b.y),
                         std::abs(c.x), std::abs(c.y)});
    double tol = 1e-12 * s * s;  // cross product scales as length squared
    double v = cross(b - a, c - a);
    if (v > tol) return Orientation::Counterclockwise;
    if (v < -tol) return Orientation::Clockwise;
    return Orientation::Collinear;
}

Hull2D convex_hull_2d(std::span<const Vec2> points) {
    std::vector<Vec2> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    Hull2D h;
    if (pts.size() <= 2) {
        h.vertices = pts;
        return h;
    }

    // Monotone chain keeping strict left turns only, so collinear-on-edge
    // points are dropped and every output vertex is a strict extreme point.
    std::vector<Vec2> hull;
    hull.reserve(pts.size() + 1);
    for (const Vec2& p : pts) {  // lower chain
        while (hull.size() >= 2 &&
               orientation(hull[hull.size() - 2], hull[hull.size() - 1], p) !=
                   Orientation::Counterclockwise) {
            hull.pop_back();
        }
        hull.push_back(p);
    }
    std::size_t lower = hull.size();
    for (std::size_t i = pts.size() - 1; i-- > 0;) {  // upper chain
        const Vec2& p = pts[i];
        while (hull.size() > lower &&
               orientation(hull[hull.size() - 2], hull[hull.size() - 1], p) !=
                   Orientation::Counterclockwise) {
            hull.pop_back();
        }
        hull.push_back(p);
    }
    hull.pop_back();  // last point repeats the first

    if (hull.size() == 2 && hull[0] == hull[1]) hull.pop_back();
    h.vertices = std::move(hull);
    return h;
}

double dist_point_segment(Vec2 p, Vec2 a, Vec2 b) {
    Vec2 ab = b - a;
    double len2 = dot(ab, ab);
    if (len2 == 0.0) return dist(p, a);
    double t = dot(p - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return dist(p, a + t * ab);
}

namespace {

// Strictly convex CCW polygon containment (boundary counts as inside).
bool inside_convex_ccw(Vec2 p, const std::vector<Vec2>& v) {
    std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (orientation(v[i], v[(i + 1) % n], p) == Orientation::Clockwise) return false;
    }
    return true;
}

}  // namespace

double dist_point_hull_2d(Vec2 p, const Hull2D& h) {
    const auto& v = h.vertices;
    if (v.empty()) return kInfiniteDistance;
    if (v.size() == 1) return dist(p, v[0]);
    if (v.size() == 2) return dist_point_segment(p, v[0], v[1]);
    if (inside_convex_ccw(p, v)) return 0.0;
    double best = kInfiniteDistance;
    for (std::size_t i = 0; i < v.size(); ++i) {
        best = std::min(best, dist_point_segment(p, v[i], v[(i + 1) % v.size()]));
    }
    return best;
}

double directional_extent(std::span<const PointN> points, const PointN& v) {
    if (points.empty()) throw InvalidInputError("directional_extent: empty point set");
    double best = -kInfiniteDistance;
    for (const PointN& p : points) {
        if (p.size() != v.size())
            throw InvalidInputError("directional_extent: dimension mismatch");
        double d = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) d += p[i] * v[i];
        best = std::max(best, d);
    }
    return best;
}

double directional_extent_2d(std::span<const Vec2> points, Vec2 v) {
    if (points.empty()) throw InvalidInputError("directional_extent_2d: empty point set");
    double best = -kInfiniteDistance;
    for (Vec2 p : points) best = std::max(best, dot(p, v));
    return best;
}

PointN get_max(std::span<const PointN> stream, const PointN& t) {
    if (stream.empty()) throw InvalidInputError("get_max: empty stream");
    MaxWitness w;
    for (std::size_t i = 0; i < stream.size(); ++i) {
        if (stream[i].size() != t.size()) throw InvalidInputError("get_max: dimension mismatch");
        double d = 0.0;
        for (std::size_t k = 0; k < t.size(); ++k) d += stream[i][k] * t[k];
        w.offer(d, i, stream[i]);
    }
    return stream[w.index];
}

Vec2 get_max_2d(std::span<const Vec2> stream, Vec2 t, std::size_t* index_out) {
    if (stream.empty()) throw InvalidInputError("get_max_2d: empty stream");
    MaxWitness w;
    for (std::size_t i = 0; i < stream.size(); ++i) w.offer(dot(stream[i], t), i, stream[i]);
    if (index_out) *index_out = w.index;
    return stream[w.index];
}

double dist_point_polygon_boundary(Vec2 p, const Hull2D& h) {
    const auto& v = h.vertices;
    if (v.empty()) throw InvalidInputError("dist_point_polygon_boundary: empty hull");
    if (v.size() == 1) return dist(p, v[0]);
    if (v.size() == 2) return dist_point_segment(p, v[0], v[1]);
    if (!inside_convex_ccw(p, v)) {
        double best = kInfiniteDistance;
        for (std::size_t i = 0; i < v.size(); ++i)
            best = std::min(best, dist_point_segment(p, v[i], v[(i + 1) % v.size()]));
        return best;
    }
    // Interior of a convex polygon: nearest boundary point is the foot on the
    // nearest edge line, so the minimum over edge-line margins is exact.
    double best = kInfiniteDistance;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Vec2 a = v[i], b = v[(i + 1) % v.size()];
        double len = dist(a, b);
        if (len == 0.0) continue;
        best = std::min(best, std::abs(cross(b - a, p - a)) / len);
    }
    return best;
}

namespace {

// Max over x on segment [u,v] of dist(x, boundary of B), computed exactly.
// Candidates: segment endpoints, crossings with B's boundary, and (inside B)
// breakpoints where the nearest-edge-line changes.
double max_boundary_dist_on_segment(Vec2 u, Vec2 v, const Hull2D& b) {
    std::vector<double> ts = {0.0, 1.0};
    const auto& bv = b.vertices;
    std::size_t m = bv.size();
    Vec2 d = v - u;

    if (m >= 2) {
        std::size_t edge_count = (m == 2) ? 1 : m;
        for (std::size_t i = 0; i < edge_count; ++i) {
            Vec2 a = bv[i], c = bv[(i + 1) % m];
            Vec2 e = c - a;
            double denom = cross(d, e);
            if (denom != 0.0) {
                double t = cross(a - u, e) / denom;
                double s = cross(a - u, d) / denom;
                if (t > 0.0 && t < 1.0 && s >= 0.0 && s <= 1.0) ts.push_back(t);
            }
        }
    }
    if (m >= 3) {
        // Signed inner margins to edge lines are affine in t; their pairwise
        // crossings are the only interior maxima of the concave inside part.
        struct Affine {
            double a0, a1;
        };
        std::vector<Affine> fs;
        fs.reserve(m);
        for (std::size_t i = 0; i < m; ++i) {
            Vec2 a = bv[i], c = bv[(i + 1) % m];
            double len = dist(a, c);
            if (len == 0.0) continue;
            Vec2 e = c - a;
            double at_u = cross(e, u - a) / len;
            double at_v = cross(e, v - a) / len;
            fs.push_back({at_u, at_v - at_u});
        }
        for (std::size_t i = 0; i < fs.size(); ++i) {
            for (std::size_t j = i + 1; j < fs.size(); ++j) {
                double denom = fs[i].a1 - fs[j].a1;
                if (denom == 0.0) continue;
                double t = (fs[j].a0 - fs[i].a0) / denom;
                if (t > 0.0 && t < 1.0) ts.push_back(t);
            }
        }
    }

    double best = 0.0;
    for (double t : ts) best = std::max(best, dist_point_polygon_boundary(u + t * d, b));
    return best;
}

double directed_hausdorff_boundary(const Hull2D& a, const Hull2D& b) {
    const auto& av = a.vertices;
    double best = 0.0;
    if (av.size() == 1) return dist_point_polygon_boundary(av[0], b);
    std::size_t edge_count = (av.size() == 2) ? 1 : av.size();
    for (std::size_t i = 0; i < edge_count; ++i) {
        Vec2 u = av[i], v = av[(i + 1) % av.size()];
        best = std::max(best, max_boundary_dist_on_segment(u, v, b));
    }
    return best;
}

}  // namespace

double hausdorff_boundary_2d(const Hull2D& a, const Hull2D& b) {
    if (a.empty() || b.empty()) throw InvalidInputError("hausdorff_boundary_2d: empty hull");
    return std::max(directed_hausdorff_boundary(a, b), directed_hausdorff_boundary(b, a));
}

// ---------------------------------------------------------------------------
// Wolfe's minimum-norm-point method for the distance to a convex hull in R^d.
// Works on the translated set u_i = s_i - p and minimizes ||x|| over conv(u).
// The corral stays affinely independent (<= d+1 points), each affine
// subproblem is a tiny bordered linear system, and the support-function gap
// gives a certified lower bound on the distance.
// ---------------------------------------------------------------------------

namespace {

// Solve the bordered system for the affine minimum-norm combination:
//   [ 0  1^T ] [mu    ]   [1]
//   [ 1  G   ] [alpha ] = [0]
// where G is the Gram matrix of the corral. Returns false when singular.
bool affine_min_norm_weights(const std::vector<std::vector<double>>& gram,
                             std::vector<double>& alpha) {
    std::size_t m = gram.size();
    std::size_t n = m + 1;
    std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
    for (std::size_t j = 1; j < n; ++j) a[0][j] = 1.0;
    a[0][n] = 1.0;
    for (std::size_t i = 1; i < n; ++i) {
        a[i][0] = 1.0;
        for (std::size_t j = 1; j < n; ++j) a[i][j] = gram[i - 1][j - 1];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-300) return false;
        std::swap(a[col], a[piv]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    alpha.resize(m);
    for (std::size_t i = 0; i < m; ++i) alpha[i] = a[i + 1][n] / a[i + 1][i + 1];
    return true;
}

}  // namespace

double dist_point_hull_nd(const PointN& p, std::span<const PointN> s, double tol) {
    if (s.empty()) throw InvalidInputError("dist_point_hull_nd: empty point set");
    if (tol <= 0.0) throw InvalidInputError("dist_point_hull_nd: tol must be positive");
    std::size_t d = p.size();
    for (const PointN& q : s)
        if (q.size() != d) throw InvalidInputError("dist_point_hull_nd: dimension mismatch");

    std::vector<PointN> u(s.size(), PointN(d));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t k = 0; k < d; ++k) u[i][k] = s[i][k] - p[k];

    auto dotn = [d](const PointN& a, const PointN& b) {
        double r = 0.0;
        for (std::size_t k = 0; k < d; ++k) r += a[k] * b[k];
        return r;
    };

    // Start from the closest translated point.
    std::size_t start = 0;
    double best_n2 = dotn(u[0], u[0]);
    for (std::size_t i = 1; i < u.size(); ++i) {
        double n2 = dotn(u[i], u[i]);
        if (n2 < best_n2) {
            best_n2 = n2;
            start = i;
        }
    }

    std::vector<std::size_t> corral = {start};
    std::vector<double> lambda = {1.0};
    PointN x = u[start];

    constexpr int kIterationCap = 100000;
    double upper = std::sqrt(best_n2);
    double prev_x2 = kInfiniteDistance;
    int stalls = 0;
    for (int iter = 0; iter < kIterationCap; ++iter) {
        double x2 = dotn(x, x);
        upper = std::min(upper, std::sqrt(x2));
        if (upper <= tol) return upper;  // inside or touching within tol

        // The method decreases ||x||^2 strictly in exact arithmetic, so a run
        // of non-improving iterations means the floating-point floor: the
        // certificate cannot tighten further and the value is converged.
        if (x2 >= prev_x2 * (1.0 - 1e-14)) {
            if (++stalls >= 3) return upper;
        } else {
            stalls = 0;
        }
        prev_x2 = std::min(prev_x2, x2);

        // Support step: most-improving vertex in direction -x.
        std::size_t j = 0;
        double minxj = kInfiniteDistance;
        for (std::size_t i = 0; i < u.size(); ++i) {
            double v = dotn(x, u[i]);
            if (v < minxj) {
                minxj = v;
                j = i;
            }
        }
        double lower = std::max(minxj / std::sqrt(x2), 0.0);
        if (std::sqrt(x2) - lower <= tol) return upper;

        bool already = false;
        for (std::size_t idx : corral)
            if (idx == j) already = true;
        if (already) return upper;  // numerical floor: gap cannot improve further
        corral.push_back(j);
        lambda.push_back(0.0);

        // Minor cycle: project onto the affine hull of the corral, shrinking
        // the corral until the affine minimizer is a convex combination.
        for (;;) {
            std::size_t m = corral.size();
            std::vector<std::vector<double>> gram(m, std::vector<double>(m));
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = a; b < m; ++b)
                    gram[a][b] = gram[b][a] = dotn(u[corral[a]], u[corral[b]]);
            std::vector<double> alpha;
            if (!affine_min_norm_weights(gram, alpha)) {
                // Degenerate corral: drop the newest point and accept x as is.
                corral.pop_back();
                lambda.pop_back();
                return upper;
            }
            bool feasible = true;
            for (double av : alpha)
                if (av < 1e-12) feasible = false;
            if (feasible) {
                lambda = alpha;
                break;
            }
            double theta = 1.0;
            for (std::size_t i = 0; i < m; ++i) {
                if (alpha[i] < 1e-12 && lambda[i] > alpha[i])
                    theta = std::min(theta, lambda[i] / (lambda[i] - alpha[i]));
            }
            std::vector<std::size_t> new_corral;
            std::vector<double> new_lambda;
            for (std::size_t i = 0; i < m; ++i) {
                double w = (1.0 - theta) * lambda[i] + theta * alpha[i];
                if (w > 1e-12) {
                    new_corral.push_back(corral[i]);
                    new_lambda.push_back(w);
                }
            }
            if (new_corral.empty()) {  // numerical collapse; keep best single point
                new_corral.push_back(corral[0]);
                new_lambda.push_back(1.0);
            }
            corral = std::move(new_corral);
            lambda = std::move(new_lambda);
            if (corral.size() >= m) {
                // No point left the corral; avoid cycling.
                break;
            }
        }

        for (std::size_t k = 0; k < d; ++k) {
            double xk = 0.0;
            for (std::size_t i = 0; i < corral.size(); ++i) xk += lambda[i] * u[corral[i]][k];
            x[k] = xk;
        }
    }
    throw NumericFailureError("dist_point_hull_nd: no convergence within iteration cap", upper);
}

}  // namespace epshull
