#include <cmath>

#include "doctest.h"
#include "vflock/environment.hpp"
#include "vflock/model.hpp"
#include "vflock/rng.hpp"

using namespace vflock;

TEST_CASE("periodic wrap maps into [0, W) x [0, H)") {
    Arena arena;
    const Vec2 a = wrap_periodic(Vec2{905, 450}, arena);
    CHECK(a.x == 5.0);
    CHECK(a.y == 450.0);

    const Vec2 b = wrap_periodic(Vec2{-1, -1}, arena);
    CHECK(b.x == 899.0);
    CHECK(b.y == 899.0);

    const Vec2 c = wrap_periodic(Vec2{123.25, 877.5}, arena);
    CHECK(c.x == 123.25);
    CHECK(c.y == 877.5);

    // idempotence over random points
    Rng rng(1);
    for (int i = 0; i < 200; ++i) {
        const Vec2 p{rng.uniform(-3000.0, 3000.0), rng.uniform(-3000.0, 3000.0)};
        const Vec2 once = wrap_periodic(p, arena);
        const Vec2 twice = wrap_periodic(once, arena);
        CHECK(once.x == twice.x);
        CHECK(once.y == twice.y);
        CHECK(once.x >= 0.0);
        CHECK(once.x < arena.width);
        CHECK(once.y >= 0.0);
        CHECK(once.y < arena.height);
    }
}

TEST_CASE("head-on wall hit turns +pi/2 first") {
    Arena arena;
    arena.boundary = Boundary::reflective;
    AgentState s;
    s.x = 899.5;
    s.y = 450.0;
    s.psi = 0.0;
    s.v = 1.0;

    AgentState tentative = s;
    tentative.v = 1.0;
    tentative.x = 900.5; // out through x = W
    const AgentState out = reflect_if_needed(s, tentative.v, tentative, arena, 1.0);
    CHECK(out.psi == doctest::Approx(pi / 2.0).epsilon(1e-15));
    CHECK(out.x == 899.5);
    CHECK(out.y == 451.0);
}

TEST_CASE("in-bounds tentative state passes through untouched") {
    Arena arena;
    arena.boundary = Boundary::reflective;
    AgentState s;
    s.x = 10;
    s.y = 10;
    AgentState tentative;
    tentative.x = 11;
    tentative.y = 10.5;
    tentative.psi = 1.25;
    tentative.v = 0.9;
    const AgentState out = reflect_if_needed(s, tentative.v, tentative, arena, 1.0);
    CHECK(out.x == tentative.x);
    CHECK(out.y == tentative.y);
    CHECK(out.psi == tentative.psi);
    CHECK(out.v == tentative.v);
}

TEST_CASE("corner approach falls back to full reversal") {
    Arena arena;
    arena.boundary = Boundary::reflective;
    AgentState s;
    s.x = 899.9;
    s.y = 899.9;
    s.psi = pi / 4.0; // aimed at the (W, H) corner
    s.v = 1.0;

    AgentState tentative = s;
    tentative.x = s.x + std::cos(s.psi);
    tentative.y = s.y + std::sin(s.psi);
    const AgentState out = reflect_if_needed(s, 1.0, tentative, arena, 1.0);
    // +pi/2 runs out through y = H, -pi/2 through x = W; reversal stays in
    CHECK(out.psi == doctest::Approx(pi / 4.0 + pi).epsilon(1e-15));
    CHECK(out.x < arena.width);
    CHECK(out.y < arena.height);
}

TEST_CASE("reflection overrides the turn but keeps the speed update") {
    Arena arena;
    arena.boundary = Boundary::reflective;
    AgentState s;
    s.x = 0.5;
    s.y = 400.0;
    s.psi = pi; // heading -x into the x = 0 wall
    s.v = 1.0;

    // pretend vision produced some big turn and an accelerated speed
    AgentState tentative;
    tentative.v = 1.7;
    tentative.psi = wrap_2pi(s.psi + 0.4);
    tentative.x = s.x + tentative.v * std::cos(tentative.psi);
    tentative.y = s.y + tentative.v * std::sin(tentative.psi);
    REQUIRE(tentative.x < 0.0);

    const AgentState out = reflect_if_needed(s, tentative.v, tentative, arena, 1.0);
    CHECK(out.v == 1.7);                                      // speed stands
    CHECK(out.psi == doctest::Approx(3.0 * pi / 2.0).epsilon(1e-15)); // psi + pi/2 wrapped
    CHECK(out.x == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(out.y == doctest::Approx(400.0 - 1.7).epsilon(1e-12));
}

TEST_CASE("containment holds for arbitrary force sequences") {
    Arena arena;
    arena.boundary = Boundary::reflective;
    arena.width = 50.0;
    arena.height = 30.0;
    ModelParams p;
    Rng rng(4242);
    AgentState s;
    s.x = 25;
    s.y = 15;
    s.v = 1.0;
    for (int t = 0; t < 2000; ++t) {
        const ForcePair f{rng.uniform(-0.5, 0.5), rng.uniform(-1.5, 1.5)};
        const AgentState next = integrate_step(s, f, individual_force(s.v, p), 1.0);
        s = reflect_if_needed(s, next.v, next, arena, 1.0);
        CHECK(s.x >= 0.0);
        CHECK(s.x <= arena.width);
        CHECK(s.y >= 0.0);
        CHECK(s.y <= arena.height);
    }
}
