#include <cmath>

#include "doctest.h"
#include "vflock/errors.hpp"
#include "vflock/metrics.hpp"
#include "vflock/rng.hpp"

using namespace vflock;

TEST_CASE("polarization fixtures") {
    CHECK(polarization(std::vector<double>(10, 0.7)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(polarization({0.0, pi})) < 1e-15);
    CHECK(std::abs(polarization({0.0, pi / 2.0, pi, 3.0 * pi / 2.0})) < 1e-15);
    CHECK(polarization({1.234}) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("polarization is invariant under global heading rotation") {
    Rng rng(11);
    std::vector<double> psi(8);
    for (auto& a : psi) a = rng.uniform(0.0, two_pi);
    const double base = polarization(psi);
    for (double shift : {0.3, 1.7, 4.4}) {
        auto rotated = psi;
        for (auto& a : rotated) a += shift;
        CHECK(polarization(rotated) == doctest::Approx(base).epsilon(1e-12));
    }
}

TEST_CASE("mean pairwise distance fixtures") {
    Arena walls;
    walls.boundary = Boundary::reflective;
    CHECK(mean_iid({Vec2{0, 0}, Vec2{3, 4}}, walls) == 5.0);

    Arena torus; // 900 x 900 periodic
    CHECK(mean_iid({Vec2{10, 0}, Vec2{890, 0}}, torus) == 20.0);

    CHECK(mean_iid({Vec2{0, 0}, Vec2{10, 0}, Vec2{20, 0}}, walls) == 40.0 / 3.0);

    CHECK_THROWS_AS(mean_iid({Vec2{1, 1}}, walls), DegenerateInput);
}

TEST_CASE("distance matrix is symmetric with zero diagonal") {
    Arena arena;
    Rng rng(3);
    std::vector<Vec2> pos(6);
    for (auto& p : pos) p = {rng.uniform(0.0, 900.0), rng.uniform(0.0, 900.0)};
    const auto d = distance_matrix(pos, arena);
    for (int i = 0; i < 6; ++i) {
        CHECK(d[i * 6 + i] == 0.0);
        for (int j = 0; j < 6; ++j) CHECK(d[i * 6 + j] == d[j * 6 + i]);
    }
}

TEST_CASE("overlap counting uses strict 2R") {
    Arena arena;
    const double r = 5.5;
    CHECK(count_overlapping({Vec2{0, 0}, Vec2{11.0, 0}}, arena, r) == 0); // exactly 2R apart
    CHECK(count_overlapping({Vec2{0, 0}, Vec2{10.9, 0}}, arena, r) == 2);
    CHECK(count_overlapping({Vec2{0, 0}, Vec2{10.9, 0}, Vec2{500, 500}}, arena, r) == 2);
}

TEST_CASE("overlap ratio printed-formula fixtures") {
    Arena arena;
    const double r = 5.5;

    // all 10 agents mutually overlapping at every record -> 50 exactly
    std::vector<Vec2> heap(10);
    for (int i = 0; i < 10; ++i) heap[i] = {450.0 + 0.1 * i, 450.0};
    const std::vector<std::vector<Vec2>> always(7, heap);
    CHECK(overlap_ratio(always, arena, r) == 50.0);

    // one pair overlapping for half the records, N = 10 -> 5 exactly
    std::vector<Vec2> spread(10);
    for (int i = 0; i < 10; ++i) spread[i] = {50.0 * i, 200.0};
    std::vector<Vec2> touch = spread;
    touch[1] = {spread[0].x + 2.0, 200.0};
    std::vector<std::vector<Vec2>> frames;
    for (int t = 0; t < 10; ++t) frames.push_back(t < 5 ? touch : spread);
    CHECK(overlap_ratio(frames, arena, r) == 5.0);

    CHECK(overlap_ratio({spread}, arena, r) == 0.0);
}

TEST_CASE("circularity fixtures") {
    // unit square: RCA = 4 * 1 / (pi * 2)
    const std::vector<Vec2> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(std::abs(circularity(square) - 2.0 / pi) < 1e-9);

    // collinear points span no area
    std::vector<Vec2> line(10);
    for (int i = 0; i < 10; ++i) line[i] = {double(i), 2.0 * i};
    CHECK(circularity(line) == 0.0);

    CHECK_THROWS_AS(circularity({Vec2{0, 0}, Vec2{1, 1}}), DegenerateInput);
}

TEST_CASE("circularity of regular n-gons approaches 1") {
    double prev = 0.0;
    for (int n : {8, 16, 64, 256}) {
        std::vector<Vec2> ring(n);
        for (int i = 0; i < n; ++i) {
            const double a = two_pi * i / n;
            ring[i] = {10.0 * std::cos(a), 10.0 * std::sin(a)};
        }
        const double rca = circularity(ring);
        CHECK(rca > prev);
        CHECK(rca <= 1.0);
        // even n-gon: area n r^2 sin(2pi/n)/2, diameter 2r across
        const double expect = n * std::sin(two_pi / n) / (2.0 * pi);
        CHECK(rca == doctest::Approx(expect).epsilon(1e-12));
        prev = rca;
    }
}

TEST_CASE("hull diameter skips adjacent vertices on 4+ vertex hulls") {
    // trapezoid whose longest edge (10) beats both diagonals (sqrt 82): the
    // non-adjacency rule must pick the diagonal, not the edge
    const std::vector<Vec2> trap{{0, 0}, {10, 0}, {9, 1}, {1, 1}};
    const double expect = 4.0 * 9.0 / (pi * 82.0);
    CHECK(circularity(trap) == doctest::Approx(expect).epsilon(1e-12));

    // triangles fall back to the max pairwise distance
    const std::vector<Vec2> tri{{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0}};
    CHECK(circularity(tri) == doctest::Approx(std::sqrt(3.0) / pi).epsilon(1e-12));
}

TEST_CASE("circularity ignores interior points and caps at 1") {
    std::vector<Vec2> ring(40);
    for (int i = 0; i < 40; ++i) {
        const double a = two_pi * i / 40.0;
        ring[i] = {10.0 * std::cos(a), 10.0 * std::sin(a)};
    }
    const double hollow = circularity(ring);
    auto filled = ring;
    filled.push_back({0.0, 0.0});
    filled.push_back({1.0, 2.0});
    CHECK(circularity(filled) == hollow);

    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Vec2> pts(10);
        for (auto& p : pts) p = {rng.uniform(0.0, 100.0), rng.uniform(0.0, 100.0)};
        const double rca = circularity(pts);
        CHECK(rca >= 0.0);
        CHECK(rca <= 1.0);
    }
}

TEST_CASE("circularity is rigid-motion invariant") {
    Rng rng(23);
    std::vector<Vec2> pts(8);
    for (auto& p : pts) p = {rng.uniform(0.0, 100.0), rng.uniform(0.0, 100.0)};
    const double base = circularity(pts);
    const double th = 0.77;
    auto moved = pts;
    for (auto& p : moved) {
        const Vec2 q{p.x * std::cos(th) - p.y * std::sin(th) + 31.0,
                     p.x * std::sin(th) + p.y * std::cos(th) - 12.0};
        p = q;
    }
    CHECK(circularity(moved) == doctest::Approx(base).epsilon(1e-9));
}

TEST_CASE("convex hull is CCW and drops collinear vertices") {
    const std::vector<Vec2> pts{{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 0}, {1, 1}};
    const auto hull = convex_hull(pts);
    REQUIRE(hull.size() == 4);
    // vertices must be the four corners, counter-clockwise
    double area2 = 0.0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Vec2& p = pts[hull[i]];
        const Vec2& q = pts[hull[(i + 1) % hull.size()]];
        area2 += p.x * q.y - q.x * p.y;
    }
    CHECK(area2 == 8.0); // positive orientation, area 4
    for (int corner : {0, 1, 2, 3})
        CHECK(std::find(hull.begin(), hull.end(), corner) != hull.end());
}
