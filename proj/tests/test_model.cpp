#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "vflock/errors.hpp"
#include "vflock/model.hpp"
#include "vflock/rng.hpp"

using namespace vflock;

namespace {

VisualField random_field(Rng& rng, int n, double fill = 0.3) {
    VisualField f(n);
    for (auto& v : f.values) v = rng.uniform() < fill ? 1 : 0;
    return f;
}

VisualField blob_about(double center, int width_px, int n) {
    // contiguous blob of width_px pixels whose pixel-index span is centered
    // on the pixel nearest `center`
    VisualField f(n);
    const double dphi = two_pi / n;
    const int mid = static_cast<int>(std::lround((center + pi) / dphi - 0.5));
    for (int k = 0; k < width_px; ++k) {
        int idx = (mid - width_px / 2 + k) % n;
        if (idx < 0) idx += n;
        f.values[idx] = 1;
    }
    return f;
}

VisualField mirrored(const VisualField& f) {
    VisualField m(f.n());
    for (int k = 0; k < f.n(); ++k) m.values[k] = f.values[f.n() - 1 - k];
    return m;
}

} // namespace

TEST_CASE("individual force is linear relaxation toward v0") {
    ModelParams p;
    CHECK(individual_force(1.0, p) == 0.0);
    CHECK(individual_force(0.0, p) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(individual_force(3.0, p) == doctest::Approx(-0.2).epsilon(1e-15));
}

TEST_CASE("field derivative vanishes on constant fields") {
    VisualField zeros(320), ones(320);
    for (auto& v : ones.values) v = 1;
    for (double d : field_derivative(zeros)) CHECK(d == 0.0);
    for (double d : field_derivative(ones)) CHECK(d == 0.0);
}

TEST_CASE("field derivative marks blob edges at +-1/dphi") {
    VisualField f(320);
    for (int k = 100; k < 106; ++k) f.values[k] = 1;
    const auto d = field_derivative(f);
    const double expect = 320.0 / two_pi;
    int nonzero = 0;
    for (int k = 0; k < 320; ++k)
        if (d[k] != 0.0) ++nonzero;
    CHECK(nonzero == 2);
    CHECK(d[99] == expect);
    CHECK(d[105] == -expect);
}

TEST_CASE("social forces vanish on the empty field") {
    ModelParams p;
    const ForcePair f = social_forces(VisualField(320), p);
    CHECK(f.dv == 0.0);
    CHECK(f.dpsi == 0.0);
}

TEST_CASE("social forces nearly vanish on the full-circle field") {
    ModelParams p;
    VisualField ones(320);
    for (auto& v : ones.values) v = 1;
    const ForcePair f = social_forces(ones, p);
    CHECK(f.dpsi == 0.0); // antisymmetric pair sums cancel exactly
    CHECK(std::abs(f.dv) < 1e-12);
}

TEST_CASE("frontal blob: dpsi exactly zero, dv sign flips with width") {
    ModelParams p;
    double prev_dv = 0.0;
    int sign_changes = 0;
    for (int w = 2; w <= 160; w += 2) {
        const ForcePair f = social_forces(blob_about(0.0, w, 320), p);
        CHECK(f.dpsi == 0.0); // field is mirror-symmetric
        if (w > 2 && std::signbit(f.dv) != std::signbit(prev_dv)) ++sign_changes;
        prev_dv = f.dv;
    }
    CHECK(sign_changes == 1);
    CHECK(social_forces(blob_about(0.0, 2, 320), p).dv > 0.0);    // far -> attract
    CHECK(social_forces(blob_about(0.0, 160, 320), p).dv < 0.0);  // near -> repel
}

TEST_CASE("narrow blob dead behind decelerates") {
    ModelParams p;
    const ForcePair f = social_forces(blob_about(pi, 4, 320), p);
    CHECK(f.dv < 0.0);
}

TEST_CASE("forces match the direct-summation reference") {
    ModelParams p;
    p.alpha0 = 1.3;
    p.beta0 = 0.7;
    Rng rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const VisualField f = random_field(rng, 320);
        const ForcePair got = social_forces(f, p);
        const ForcePair ref = oracles::oracle_forces(f, p);
        CHECK(std::abs(got.dv - ref.dv) <= 1e-12 * (1.0 + std::abs(ref.dv)));
        CHECK(std::abs(got.dpsi - ref.dpsi) <= 1e-12 * (1.0 + std::abs(ref.dpsi)));
    }
}

TEST_CASE("mirror symmetry holds bitwise on random fields") {
    ModelParams p;
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const VisualField f = random_field(rng, 320);
        const ForcePair a = social_forces(f, p);
        const ForcePair b = social_forces(mirrored(f), p);
        CHECK(a.dv == b.dv);
        CHECK(a.dpsi == -b.dpsi);
    }
}

TEST_CASE("prefactor scaling is linear") {
    ModelParams p;
    Rng rng(99);
    const VisualField f = random_field(rng, 320);
    const ForcePair base = social_forces(f, p);

    ModelParams doubled = p;
    doubled.alpha0 *= 2.0;
    doubled.beta0 *= 2.0;
    const ForcePair two = social_forces(f, doubled);
    CHECK(two.dv == 2.0 * base.dv); // power-of-two scaling is exact
    CHECK(two.dpsi == 2.0 * base.dpsi);

    ModelParams odd = p;
    odd.alpha0 *= 3.7;
    odd.beta0 *= 3.7;
    const ForcePair scaled = social_forces(f, odd);
    CHECK(std::abs(scaled.dv - 3.7 * base.dv) <= 1e-12 * (1.0 + std::abs(base.dv)));
    CHECK(std::abs(scaled.dpsi - 3.7 * base.dpsi) <= 1e-12 * (1.0 + std::abs(base.dpsi)));
}

TEST_CASE("integrate_step examples") {
    ModelParams p;

    AgentState s;
    s.v = 1.0;
    const AgentState moved = integrate_step(s, ForcePair{}, individual_force(s.v, p), 1.0);
    CHECK(moved.x == 1.0);
    CHECK(moved.y == 0.0);
    CHECK(moved.v == 1.0);

    AgentState t;
    t.psi = 7.0 * pi / 4.0;
    const AgentState turned = integrate_step(t, ForcePair{0.0, pi / 2.0}, 0.0, 1.0);
    CHECK(turned.psi == doctest::Approx(pi / 4.0).epsilon(1e-14));

    AgentState u;
    u.v = 1.0;
    for (int i = 0; i < 10; ++i) u = integrate_step(u, ForcePair{-0.3, 0.0}, 0.0, 1.0);
    CHECK(u.v == doctest::Approx(-2.0).epsilon(1e-13)); // negative speed permitted
}

TEST_CASE("heading stays in [0, 2pi) under arbitrary turning") {
    ModelParams p;
    Rng rng(5);
    AgentState s;
    for (int i = 0; i < 1000; ++i) {
        s = integrate_step(s, ForcePair{0.0, rng.uniform(-10.0, 10.0)}, 0.0, 1.0);
        CHECK(s.psi >= 0.0);
        CHECK(s.psi < two_pi);
    }
}

TEST_CASE("equilibrium distance matches the frozen fixture on both axes") {
    ModelParams p; // table defaults: alpha1 = beta1 = 0.09, R = 5.5, n_ret = 320
    const double fb = find_equilibrium_distance(EquilibriumAxis::front_back, p);
    const double lr = find_equilibrium_distance(EquilibriumAxis::left_right, p);
    CHECK(fb == doctest::Approx(62.328334649).epsilon(1e-6));
    CHECK(lr == doctest::Approx(62.328334649).epsilon(1e-6));
}

TEST_CASE("equilibrium distance ignores the global prefactors") {
    ModelParams p;
    const double base = find_equilibrium_distance(EquilibriumAxis::front_back, p);
    ModelParams big = p;
    big.alpha0 *= 2.0;
    CHECK(find_equilibrium_distance(EquilibriumAxis::front_back, big) == base);

    const double lr = find_equilibrium_distance(EquilibriumAxis::left_right, p);
    ModelParams bigb = p;
    bigb.beta0 *= 10.0;
    CHECK(find_equilibrium_distance(EquilibriumAxis::left_right, bigb) == lr);
}

TEST_CASE("pure repulsion has no interior equilibrium") {
    ModelParams p;
    p.alpha1 = 0.0; // kill the attraction term entirely
    CHECK_THROWS_AS(find_equilibrium_distance(EquilibriumAxis::front_back, p), NoSignChange);
}

TEST_CASE("bisection agrees with an independent oracle bisection") {
    ModelParams p;
    const double lib = find_equilibrium_distance(EquilibriumAxis::front_back, p);

    // same canonical scene, but force evaluation by the reference summation
    auto field_at = [&](double d) {
        AgentState focal;
        const BlobInterval blob = angular_interval(focal, Vec2{d, 0.0}, p.radius);
        return rasterize(apply_visibility_cutoff({blob}, p), p.n_ret);
    };
    double a = 2.0 * p.radius + 1e-6, b = p.vision_range;
    auto f = [&](double d) { return oracles::oracle_forces(field_at(d), p).dv; };
    // bracket by scan
    double step = (b - a) / 4096.0, x = a, fx = f(x);
    double lo = 0, hi = 0, flo = 0;
    for (int i = 1; i <= 4096; ++i) {
        const double y = a + step * i, fy = f(y);
        if (fx != 0.0 && fy != 0.0 && std::signbit(fx) != std::signbit(fy)) {
            lo = x;
            hi = y;
            flo = fx;
            break;
        }
        x = y;
        fx = fy;
    }
    REQUIRE(hi > 0.0);
    while (hi - lo > 1e-7) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0 || std::signbit(fm) == std::signbit(flo)) lo = mid;
        else hi = mid;
    }
    CHECK(lib == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-6));
}
