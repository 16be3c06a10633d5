#include "epshull/multipass.hpp"

#include <cmath>

#include "doctest.h"
#include "epshull/errors.hpp"
#include "epshull/oracles.hpp"
#include "epshull/rng.hpp"
#include "epshull/streamgen.hpp"
#include "support/ref_oracles.hpp"

using namespace epshull;

namespace {

int pass_bound(double eps) { return 3 + static_cast<int>(std::ceil(std::log2(1.0 / eps))); }

std::vector<Vec2> normalize_diameter(std::vector<Vec2> pts) {
    auto hull = convex_hull_2d(pts);
    double diam = 0.0;
    for (std::size_t i = 0; i < hull.size(); ++i)
        for (std::size_t j = i + 1; j < hull.size(); ++j)
            diam = std::max(diam, dist(hull.vertices[i], hull.vertices[j]));
    if (diam > 0)
        for (Vec2& p : pts) p = (1.0 / diam) * p;
    return pts;
}

}  // namespace

TEST_CASE("dyadic angles canonicalize and convert") {
    auto a = DyadicAngle::make(4, 3);  // 4/8 -> 1/2
    CHECK(a.numerator == 1);
    CHECK(a.level == 1);
    CHECK(a.fraction() == doctest::Approx(0.5));
    Vec2 d = a.to_direction();
    CHECK(std::abs(norm(d) - 1.0) <= 1e-12);
    CHECK(d.x == doctest::Approx(-1.0));

    auto zero = DyadicAngle::make(0, 5);
    CHECK(zero.level == 0);
    CHECK(zero.numerator == 0);
}

TEST_CASE("bisect_clockwise seed splits") {
    DyadicAngle zero = DyadicAngle::make(0, 0);
    DyadicAngle half = DyadicAngle::make(1, 1);   // pi
    DyadicAngle quarter = DyadicAngle::make(1, 2);  // pi/2

    auto m1 = bisect_clockwise(zero, half);
    CHECK(m1.fraction() == doctest::Approx(0.75));  // 3pi/2
    auto m2 = bisect_clockwise(half, zero);
    CHECK(m2.fraction() == doctest::Approx(0.25));  // pi/2
    auto m3 = bisect_clockwise(quarter, zero);
    CHECK(m3.fraction() == doctest::Approx(0.125));  // pi/4
    CHECK_THROWS_AS(bisect_clockwise(zero, zero), InvalidInputError);
}

TEST_CASE("error_ear basic cases") {
    std::vector<Vec2> p = {{0, 0}, {2, 0}};
    CHECK(error_ear(p, {0, 0}, {2, 0}) == doctest::Approx(0.0));

    std::vector<Vec2> p2 = {{0, 0}, {2, 0}, {1, 1}};
    CHECK(error_ear(p2, {0, 0}, {2, 0}) == doctest::Approx(1.0));
    // opposite orientation: the ear is on the other side, which is empty
    CHECK(error_ear(p2, {2, 0}, {0, 0}) == doctest::Approx(0.0));
}

TEST_CASE("error_ear matches the polygon-clipping oracle") {
    Rng rng(808);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 8 + rng.below(30);
        auto pts = (trial % 2 == 0) ? testref::random_points_square(rng, n)
                                    : testref::random_points_disk(rng, n);
        auto boundary = boundary_points_2d(pts);
        if (boundary.size() < 2) continue;
        std::size_t i = rng.below(boundary.size());
        std::size_t j = rng.below(boundary.size());
        if (i == j) continue;
        double impl = error_ear(pts, boundary[i], boundary[j]);
        double ref = testref::ear_error_ref(pts, boundary[i], boundary[j]);
        CHECK(std::abs(impl - ref) <= 1e-9);
    }
}

TEST_CASE("error_ear on convex-position boundary pairs equals brute force") {
    Rng rng(550);
    for (int trial = 0; trial < 50; ++trial) {
        auto pts = testref::random_convex_position(rng, 30);
        auto boundary = boundary_points_2d(pts);
        REQUIRE(boundary.size() >= 4);
        std::size_t i = rng.below(boundary.size());
        std::size_t len = 1 + rng.below(boundary.size() - 1);
        Vec2 q1 = boundary[i], q2 = boundary[(i + len) % boundary.size()];
        double impl = error_ear(pts, q1, q2);
        double ref = testref::ear_error_ref(pts, q1, q2);
        CHECK(std::abs(impl - ref) <= 1e-9);
    }
}

TEST_CASE("ear monotonicity: nested clockwise quadruples") {
    Rng rng(661);
    for (int trial = 0; trial < 500; ++trial) {
        auto pts = testref::random_convex_position(rng, 16);
        auto boundary = boundary_points_2d(pts);  // CCW cycle
        std::size_t h = boundary.size();
        if (h < 4) continue;
        // nested quadruple along the cycle; clockwise order is q, qp, pp, p
        std::size_t start = rng.below(h);
        std::size_t g1 = 1 + rng.below(h - 3);
        std::size_t g2 = 1 + rng.below(h - g1 - 2);
        std::size_t g3 = 1 + rng.below(h - g1 - g2 - 1);
        Vec2 p = boundary[start];
        Vec2 pp = boundary[(start + g1) % h];
        Vec2 qp = boundary[(start + g1 + g2) % h];
        Vec2 q = boundary[(start + g1 + g2 + g3) % h];
        // clockwise order along the boundary: q, qp, pp, p
        double outer = error_ear(pts, q, p);
        double inner = error_ear(pts, qp, pp);
        CHECK(inner <= outer + 1e-9);
    }
}

TEST_CASE("multipass on square corners at eps 1 stays within 3 passes") {
    std::vector<Vec2> pts = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    auto norm_pts = normalize_diameter(pts);
    auto res = multipass_run(norm_pts, 1.0);
    CHECK(res.passes <= 3);
    auto rep = is_eps_hull_2d(norm_pts, res.hull, 1.0);
    CHECK(rep.is_valid);
}

TEST_CASE("multipass rejects bad inputs") {
    std::vector<Vec2> pts = {{0, 0}};
    CHECK_THROWS_AS(multipass_run(pts, 0.0), InvalidInputError);
    CHECK_THROWS_AS(multipass_run(std::vector<Vec2>{}, 0.5), InvalidInputError);
}

TEST_CASE("multipass on identical points returns the single point") {
    std::vector<Vec2> pts(10, Vec2{0.3, 0.7});
    auto res = multipass_run(pts, 0.5);
    REQUIRE(res.hull.size() == 1);
    CHECK(res.hull[0] == Vec2{0.3, 0.7});
    CHECK(res.passes == 2);
}

TEST_CASE("multipass pass bound and validity on random normalized streams") {
    Rng rng(31337);
    for (double eps : {1.0, 0.5, 0.1, 0.02}) {
        for (int trial = 0; trial < 8; ++trial) {
            StreamSpec spec;
            spec.kind = (trial % 2 == 0) ? StreamKind::Disk : StreamKind::Circle;
            spec.n = 200;
            spec.seed = 42 + trial;
            auto pts = normalize_diameter(generate_2d(spec));
            auto res = multipass_run(pts, eps);
            CHECK(res.passes <= pass_bound(eps) + 1);  // +1: diameter-constant slop
            auto rep = is_eps_hull_2d(pts, res.hull, eps);
            CHECK(rep.is_valid);
        }
    }
}

TEST_CASE("multipass cardinality and words on brute-force instances") {
    Rng rng(7777);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 6 + rng.below(9);
        auto pts = testref::random_points_square(rng, n);
        double eps = 0.1;
        auto res = multipass_run(pts, eps);
        auto opt = opt_brute_force(to_pointn(pts), eps, false);
        CHECK(res.hull.size() <= 6 * opt.size);
        CHECK(res.peak_words <= 24 * opt.size + 16);
        CHECK(is_eps_hull_2d(pts, res.hull, eps).is_valid);
    }
}

TEST_CASE("multipass directions stay on the dyadic grid of the pass depth") {
    Rng rng(100);
    for (int trial = 0; trial < 10; ++trial) {
        StreamSpec spec;
        spec.kind = StreamKind::Circle;
        spec.n = 120;
        spec.seed = 900 + trial;
        auto pts = normalize_diameter(generate_2d(spec));
        auto res = multipass_run(pts, 0.05);
        REQUIRE(static_cast<int>(res.max_level_per_pass.size()) == res.passes);
        for (std::size_t p = 0; p < res.max_level_per_pass.size(); ++p)
            CHECK(res.max_level_per_pass[p] <= static_cast<int>(p) + 1);
    }
}

TEST_CASE("multipass handles directions sharing one witness point") {
    // Two directions can end up with the same extreme point; the degenerate
    // chord must not certify a deletion that leaves points uncovered.
    std::vector<Vec2> pts = {{0.8086113618839309, 0.19758242346467225},
                             {0.72556746390139903, 0.25327730972293494},
                             {0.3951882109968915, 0.11416346697509994},
                             {0.8302367079395222, 0.22915213732318485},
                             {0.0075383449580653794, 0.86113441396259816},
                             {0.89206137615231773, 0.069987623516903463}};
    auto res = multipass_run(pts, 0.1);
    CHECK(is_eps_hull_2d(pts, res.hull, 0.1).is_valid);
    auto opt = opt_brute_force(to_pointn(pts), 0.1, false);
    CHECK(res.hull.size() <= 6 * opt.size);
}

TEST_CASE("multipass covers a vertical segment despite seed-direction ties") {
    // Both seed directions tie on x and return the same first-arrival point;
    // the sector check must still discover the far endpoint.
    std::vector<Vec2> pts = {{0, 0}, {0, 1}};
    auto res = multipass_run(pts, 0.05);
    CHECK(is_eps_hull_2d(pts, res.hull, 0.05).is_valid);
    REQUIRE(res.hull.size() == 2);
}

TEST_CASE("multipass stays valid on degenerate stream shapes") {
    Rng rng(9001);
    for (int shape = 0; shape < 5; ++shape) {
        std::vector<Vec2> pts;
        switch (shape) {
            case 0:  // two tight clusters
                for (int i = 0; i < 20; ++i)
                    pts.push_back({0.001 * rng.uniform01(), 0.001 * rng.uniform01()});
                for (int i = 0; i < 20; ++i)
                    pts.push_back({1.0 + 0.001 * rng.uniform01(), 0.001 * rng.uniform01()});
                break;
            case 1:  // diagonal collinear
                for (int i = 0; i < 15; ++i) pts.push_back({i / 14.0, i / 14.0});
                break;
            case 2:  // vertical collinear with duplicates
                for (int i = 0; i < 10; ++i) pts.push_back({0.5, (i % 5) / 4.0});
                break;
            case 3:  // triangle corners repeated
                for (int i = 0; i < 12; ++i)
                    pts.push_back(std::vector<Vec2>{{0, 0}, {1, 0}, {0.5, 1}}[i % 3]);
                break;
            default:  // tiny eps on a circle
                for (int i = 0; i < 64; ++i) {
                    double a = 2 * testref::kPi * i / 64;
                    pts.push_back({0.5 * std::cos(a), 0.5 * std::sin(a)});
                }
                break;
        }
        double eps = (shape == 4) ? 0.004 : 0.05;
        auto res = multipass_run(pts, eps);
        auto rep = is_eps_hull_2d(pts, res.hull, eps);
        CAPTURE(shape);
        CHECK(rep.is_valid);
        CHECK(res.passes <= 3 + static_cast<int>(std::ceil(std::log2(1.0 / eps))) + 1);
    }
}

TEST_CASE("multipass gives deterministic results and counts rewinds") {
    StreamSpec spec;
    spec.kind = StreamKind::Disk;
    spec.n = 150;
    spec.seed = 4;
    auto pts = normalize_diameter(generate_2d(spec));
    auto a = multipass_run(pts, 0.1);
    auto b = multipass_run(pts, 0.1);
    CHECK(a.passes == b.passes);
    REQUIRE(a.hull.size() == b.hull.size());
    for (std::size_t i = 0; i < a.hull.size(); ++i) CHECK(a.hull[i] == b.hull[i]);
}
