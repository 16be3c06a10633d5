#include "epshull/multipass.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "epshull/errors.hpp"

namespace epshull {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

DyadicAngle DyadicAngle::make(std::uint64_t numerator, int level) {
    while (level > 0 && numerator % 2 == 0) {
        numerator /= 2;
        --level;
    }
    return DyadicAngle{numerator, level};
}

double DyadicAngle::fraction() const {
    return static_cast<double>(numerator) / static_cast<double>(1ULL << level);
}

Vec2 DyadicAngle::to_direction() const {
    double theta = kTwoPi * fraction();
    return {std::cos(theta), std::sin(theta)};
}

DyadicAngle bisect_clockwise(const DyadicAngle& a, const DyadicAngle& b) {
    if (a == b) throw InvalidInputError("bisect_clockwise: angles coincide");
    int level = std::max(a.level, b.level) + 1;
    if (level > 62) throw NumericFailureError("bisect_clockwise: dyadic level overflow", 0.0);
    std::uint64_t mod = 1ULL << level;
    std::uint64_t na = a.numerator << (level - a.level);
    std::uint64_t nb = b.numerator << (level - b.level);
    std::uint64_t arc = (na + mod - nb) % mod;  // clockwise arc length from a to b
    std::uint64_t mid = (na + mod - arc / 2) % mod;
    return DyadicAngle::make(mid, level);
}

double error_ear(PointSource2D& stream, Vec2 q1, Vec2 q2) {
    stream.reset();
    double err = 0.0;
    Vec2 p;
    while (stream.next(p)) {
        if (orientation(q1, p, q2) == Orientation::Clockwise)
            err = std::max(err, dist_point_segment(p, q1, q2));
    }
    return err;
}

double error_ear(std::span<const Vec2> points, Vec2 q1, Vec2 q2) {
    double err = 0.0;
    for (Vec2 p : points) {
        if (orientation(q1, p, q2) == Orientation::Clockwise)
            err = std::max(err, dist_point_segment(p, q1, q2));
    }
    return err;
}

namespace {

struct Entry {
    DyadicAngle angle;
    Vec2 dir;
    Vec2 q;
    long double q_dot = 0.0L;  // extended precision keeps witnesses extreme
    bool q_set = false;
};

long double dot_ld(Vec2 a, Vec2 b) {
    return static_cast<long double>(a.x) * b.x + static_cast<long double>(a.y) * b.y;
}

// Error measure for a direction pair whose witnesses coincide: the chord ear
// degenerates, so measure the maximal directional violation over the
// clockwise arc instead: max over p of max_{t in arc} (p - q) . t. A zero
// value certifies that q maximizes every direction of the sector, which is
// what the output certificate needs; a positive value flags work left in a
// sector where two directions happen to share their extreme point.
struct ConeExcess {
    Vec2 q;
    Vec2 dir_from, dir_to;
    double frac_from, frac_to, span;

    ConeExcess(Vec2 q_arg, const DyadicAngle& from, const DyadicAngle& to)
        : q(q_arg), dir_from(from.to_direction()), dir_to(to.to_direction()),
          frac_from(from.fraction()), frac_to(to.fraction()) {
        span = frac_from - frac_to;
        if (span <= 0.0) span += 1.0;
    }

    double excess(Vec2 p) const {
        Vec2 w = p - q;
        double n = norm(w);
        if (n == 0.0) return 0.0;
        double phi = std::atan2(w.y, w.x) / kTwoPi;
        if (phi < 0.0) phi += 1.0;
        double back = frac_from - phi;
        if (back < 0.0) back += 1.0;
        if (back <= span) return n;  // the arc contains w's own direction
        return std::max({0.0, dot(w, dir_from), dot(w, dir_to)});
    }
};

// Rotate so the stored list starts at the largest fraction: strictly
// decreasing clockwise order with a single wrap at the end.
void rotate_to_canonical(std::vector<Entry>& entries) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i].angle.fraction() > entries[best].angle.fraction()) best = i;
    std::rotate(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(best),
                entries.end());
}

}  // namespace

MultipassResult multipass_run(PointSource2D& stream, double eps) {
    if (!(eps > 0.0)) throw InvalidInputError("multipass_run: eps must be positive");

    MultipassResult res;

    // Pass 1: witnesses for the two seed directions.
    std::vector<Entry> entries(2);
    entries[0].angle = DyadicAngle::make(1, 1);  // pi, direction (-1, 0)
    entries[1].angle = DyadicAngle::make(0, 0);  // 0, direction (1, 0)
    for (Entry& e : entries) e.dir = e.angle.to_direction();

    stream.reset();
    Vec2 p;
    bool any = false;
    while (stream.next(p)) {
        any = true;
        for (Entry& e : entries) {
            long double d = dot_ld(p, e.dir);
            if (!e.q_set || d > e.q_dot) {
                e.q = p;
                e.q_dot = d;
                e.q_set = true;
            }
        }
    }
    if (!any) throw InvalidInputError("multipass_run: empty stream");
    res.passes = 1;
    res.peak_words = std::max(res.peak_words, 2 * entries.size());
    auto record_levels = [&res](const std::vector<Entry>& es) {
        int lvl = 0;
        for (const Entry& e : es) lvl = std::max(lvl, e.angle.level);
        res.max_level_per_pass.push_back(lvl);
    };
    record_levels(entries);

    constexpr int kPassCap = 60;
    for (;;) {
        std::size_t n = entries.size();
        std::vector<double> pair_err(n, 0.0);
        std::vector<double> skip_err(n, 0.0);
        std::vector<DyadicAngle> bis(n);
        std::vector<Vec2> bis_dir(n);
        std::vector<Vec2> bis_q(n);
        std::vector<long double> bis_dot(n, 0.0L);
        std::vector<bool> bis_set(n, false);
        std::vector<std::optional<ConeExcess>> pair_cone(n), skip_cone(n);
        for (std::size_t i = 0; i < n; ++i) {
            bis[i] = bisect_clockwise(entries[i].angle, entries[(i + 1) % n].angle);
            bis_dir[i] = bis[i].to_direction();
            if (entries[i].q == entries[(i + 1) % n].q)
                pair_cone[i].emplace(entries[i].q, entries[i].angle, entries[(i + 1) % n].angle);
            if (n >= 3 && entries[(i + n - 1) % n].q == entries[(i + 1) % n].q)
                skip_cone[i].emplace(entries[(i + n - 1) % n].q, entries[(i + n - 1) % n].angle,
                                     entries[(i + 1) % n].angle);
        }

        // One shared traversal evaluates every adjacency's ear error, every
        // skip-pair error, and every bisection witness.
        ++res.passes;
        res.peak_words = std::max(res.peak_words, 4 * n);
        stream.reset();
        while (stream.next(p)) {
            for (std::size_t i = 0; i < n; ++i) {
                if (pair_cone[i]) {
                    pair_err[i] = std::max(pair_err[i], pair_cone[i]->excess(p));
                } else {
                    Vec2 q1 = entries[i].q;
                    Vec2 q2 = entries[(i + 1) % n].q;
                    // Collinear points count as well: inside the chord their
                    // distance is ~0, beyond it they flag a gap a rounded
                    // witness tie would otherwise hide.
                    if (orientation(q1, p, q2) != Orientation::Counterclockwise)
                        pair_err[i] = std::max(pair_err[i], dist_point_segment(p, q1, q2));
                }
                if (n >= 3) {
                    if (skip_cone[i]) {
                        skip_err[i] = std::max(skip_err[i], skip_cone[i]->excess(p));
                    } else {
                        Vec2 s1 = entries[(i + n - 1) % n].q;
                        Vec2 s2 = entries[(i + 1) % n].q;
                        if (orientation(s1, p, s2) != Orientation::Counterclockwise)
                            skip_err[i] = std::max(skip_err[i], dist_point_segment(p, s1, s2));
                    }
                }
                long double d = dot_ld(p, bis_dir[i]);
                if (!bis_set[i] || d > bis_dot[i]) {
                    bis_q[i] = p;
                    bis_dot[i] = d;
                    bis_set[i] = true;
                }
            }
        }

        // Deletion sweep in increasing index order; an entry survives if a
        // neighbor already fell in this sweep. Disabled while only the two
        // seeds remain (the skip pair would degenerate).
        std::vector<bool> deleted(n, false);
        if (n >= 3) {
            for (std::size_t i = 0; i < n; ++i) {
                if (skip_err[i] <= eps && !deleted[(i + n - 1) % n] && !deleted[(i + 1) % n])
                    deleted[i] = true;
            }
        }

        // Insertion sweep over surviving adjacencies.
        bool flag = false;
        std::vector<Entry> next_entries;
        next_entries.reserve(n + n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!deleted[i]) next_entries.push_back(entries[i]);
            if (!deleted[i] && !deleted[(i + 1) % n] && pair_err[i] > eps) {
                Entry e;
                e.angle = bis[i];
                e.dir = bis_dir[i];
                e.q = bis_q[i];
                e.q_dot = bis_dot[i];
                e.q_set = true;
                next_entries.push_back(e);
                flag = true;
            }
        }
        entries = std::move(next_entries);
        rotate_to_canonical(entries);
        res.peak_words = std::max(res.peak_words, 2 * entries.size());
        record_levels(entries);

        if (!flag) break;
        if (res.passes >= kPassCap)
            throw NumericFailureError("multipass_run: pass cap exceeded", eps);
    }

    res.final_directions = entries.size();
    for (const Entry& e : entries) {
        bool dup = false;
        for (Vec2 q : res.hull)
            if (q == e.q) dup = true;
        if (!dup) res.hull.push_back(e.q);
    }
    return res;
}

MultipassResult multipass_run(std::span<const Vec2> points, double eps) {
    VectorSource2D src(std::vector<Vec2>(points.begin(), points.end()));
    return multipass_run(src, eps);
}

}  // namespace epshull
