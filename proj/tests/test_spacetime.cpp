#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "scot/qsim.hpp"
#include "scot/spacetime.hpp"

using namespace scot::spacetime;

TEST_CASE("interval examples") {
    CHECK(interval_squared({0, 0, 0, 0}, {1, 1, 0, 0}) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(interval_squared({0, 0, 0, 0}, {2, 0, 0, 0}) == doctest::Approx(4.0));
    CHECK(interval_squared({1, -1, 0, 0}, {1, 1, 0, 0}) == doctest::Approx(-4.0));
}

TEST_CASE("causal relation examples") {
    CHECK(causal_relation({0, 0, 0, 0}, {1, -1, 0, 0}) == CausalRelation::LightlikeFuture);
    CHECK(causal_relation({1, -1, 0, 0}, {1, 1, 0, 0}) == CausalRelation::Spacelike);
    const Event a{0.3, -0.2, 0.7, 1.1};
    CHECK(causal_relation(a, a) == CausalRelation::Coincident);
    CHECK(causal_relation({0, 0, 0, 0}, {2, 0.5, 0, 0}) == CausalRelation::TimelikeFuture);
    CHECK(causal_relation({2, 0.5, 0, 0}, {0, 0, 0, 0}) == CausalRelation::TimelikePast);
}

TEST_CASE("antisymmetry on random pairs") {
    scot::qsim::Rng rng(21);
    for (int i = 0; i < 2000; ++i) {
        const Event a{rng.uniform() * 4 - 2, rng.uniform() * 4 - 2, rng.uniform() * 4 - 2,
                      rng.uniform() * 4 - 2};
        const Event b{rng.uniform() * 4 - 2, rng.uniform() * 4 - 2, rng.uniform() * 4 - 2,
                      rng.uniform() * 4 - 2};
        CHECK(causal_relation(b, a) == causal_inverse(causal_relation(a, b)));
    }
}

TEST_CASE("future cone transitivity on random chains") {
    scot::qsim::Rng rng(22);
    for (int i = 0; i < 2000; ++i) {
        const Event a{rng.uniform(), rng.uniform(), rng.uniform(), rng.uniform()};
        // b strictly inside a's future cone, c inside b's
        const auto forward = [&](const Event& e) {
            const double dx = rng.uniform() - 0.5, dy = rng.uniform() - 0.5,
                         dz = rng.uniform() - 0.5;
            const double len = std::sqrt(dx * dx + dy * dy + dz * dz);
            const double dt = len * (1.0 + rng.uniform());
            return Event{e.t + dt, e.x + dx, e.y + dy, e.z + dz};
        };
        const Event b = forward(a);
        const Event c = forward(b);
        REQUIRE(in_future_cone(a, b));
        REQUIRE(in_future_cone(b, c));
        CHECK(in_future_cone(a, c));
    }
}

TEST_CASE("region containment examples") {
    const auto r0 = OutputRegion::standard(0, 1.0, 0.1);
    CHECK(region_contains(r0, {1, -1, 0, 0}));
    CHECK(region_contains(r0, {1.05, -1, 0, 0}));
    CHECK_FALSE(region_contains(r0, {1, 1, 0, 0}));
}

TEST_CASE("region containment implies cone membership") {
    const auto r1 = OutputRegion::standard(1, 1.0, 0.4);
    const Event apex{1, 1, 0, 0};
    scot::qsim::Rng rng(23);
    int contained = 0;
    for (int i = 0; i < 20000; ++i) {
        const Event e{1.0 + rng.uniform(), 1.0 + (rng.uniform() - 0.5),
                      rng.uniform() - 0.5, rng.uniform() - 0.5};
        if (!region_contains(r1, e)) continue;
        ++contained;
        CHECK(interval_squared(apex, e) >= -kLightlikeTol);
        CHECK(e.t >= apex.t);
    }
    CHECK(contained > 100);  // the sample actually exercises the region
}

TEST_CASE("earliest common future") {
    const Event q = earliest_common_future({1, -1, 0, 0}, {1, 1, 0, 0});
    CHECK(q.t == doctest::Approx(2.0));
    CHECK(q.x == doctest::Approx(0.0));
    const Event a{0.5, 0.25, -1, 2};
    const Event same = earliest_common_future(a, a);
    CHECK(same.t == doctest::Approx(a.t));
    CHECK(same.x == doctest::Approx(a.x));
    const Event mid = earliest_common_future({0, -2, 0, 0}, {0, 2, 0, 0});
    CHECK(mid.t == doctest::Approx(2.0));
    CHECK(mid.x == doctest::Approx(0.0));
    CHECK_THROWS_AS((void)earliest_common_future({0, 0, 0, 0}, {3, 0, 0, 0}),
                    std::invalid_argument);
}

TEST_CASE("geometry validation") {
    ProtocolGeometry g;
    g.h = 1.0;
    g.v = 0.1;
    CHECK(validate_geometry(g).ok);
    g.v = 1.0;
    CHECK_FALSE(validate_geometry(g).ok);
    ProtocolGeometry pb;
    pb.variant = GeometryVariant::PerBitPoints;
    pb.h = 1.0;
    pb.delta = 0.1;
    pb.n = 5;
    CHECK(validate_geometry(pb).ok);
    pb.delta = 0.6;  // (n-1)*delta = 2.4 >= 2h
    CHECK_FALSE(validate_geometry(pb).ok);
}

TEST_CASE("sampled region pairs of a valid geometry are spacelike") {
    ProtocolGeometry g;
    g.h = 1.0;
    g.v = 0.5;
    REQUIRE(validate_geometry(g).ok);
    const auto r0 = g.region(0);
    const auto r1 = g.region(1);
    scot::qsim::Rng rng(24);
    int pairs = 0;
    while (pairs < 10000) {
        const auto sample = [&](const OutputRegion& r) {
            return Event{r.apex.t + rng.uniform() * r.v, r.apex.x + (rng.uniform() - 0.5) * 2 * r.v,
                         (rng.uniform() - 0.5) * 2 * r.v, (rng.uniform() - 0.5) * 2 * r.v};
        };
        const Event e0 = sample(r0);
        const Event e1 = sample(r1);
        if (!region_contains(r0, e0) || !region_contains(r1, e1)) continue;
        ++pairs;
        CHECK(causal_relation(e0, e1) == CausalRelation::Spacelike);
    }
}
