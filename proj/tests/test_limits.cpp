#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

using namespace rising;
using testing::pt;
using testing::q;

TEST_CASE("orbit examples") {
    const SquareMap<Rational> f(testing::six_points_config().families, 4);
    const auto top = orbit(f, pt(q(7, 10), q(1)), 100, Direction::forward);
    REQUIRE(top.points.size() == 101);
    for (const auto& p : top.points) CHECK(p == top.start);
    CHECK(top.status == OrbitStatus::completed);

    const auto side = orbit(f, pt(q(-1), q(0)), 2, Direction::forward);
    CHECK(side.points[1].y.ordinate() == q(1, 2));
    CHECK(side.points[2].y.ordinate() == q(3, 4));
    CHECK(side.points[2].r == q(-1));

    const auto d0 = orbit(f, pt(q(3, 10), q(-1, 5)), 1, Direction::forward);
    CHECK(d0.points[1] == pt(q(3, 10), q(3, 10)));
}

TEST_CASE("orbit strips advance by one") {
    const SquareMap<double> f(testing::six_points_config().families, 12);
    const auto o = orbit(f, pt(0.1, 0.4), 120, Direction::forward);
    for (std::size_t i = 1; i < o.points.size(); ++i) CHECK(o.points[i].y.strip == o.points[i - 1].y.strip + 1);
    const auto back = orbit(f, o.points.back(), 120, Direction::backward);
    CHECK(point_distance(back.points.back(), o.start) < 1e-12);
}

TEST_CASE("orbit stops at the cap") {
    const SquareMap<double> f(testing::six_points_config().families, 2);
    const auto o = orbit(f, pt(0.1, 0.4), 50, Direction::forward);
    CHECK(o.status == OrbitStatus::cap_reached);
    CHECK(o.points.size() < 51);
}

TEST_CASE("degenerate limits") {
    const SquareMap<double> f(testing::six_points_config().families, 16);
    for (double r : {-0.4, 0.0, 0.8}) {
        const auto up = estimate_omega(f, pt(r, 1.0), 10);
        CHECK(up.lo == r);
        CHECK(up.hi == r);
        const auto down = estimate_alpha(f, pt(r, -1.0), 10);
        CHECK(down.lo == r);
        CHECK(down.hi == r);
    }
    const auto w = estimate_omega(f, pt(-1.0, 0.2), 10);
    CHECK(w.lo == -1.0);
    CHECK(w.hi == -1.0);
    CHECK(w.edge == Edge::top);
    const auto a = estimate_alpha(f, pt(1.0, 0.2), 10);
    CHECK(a.lo == 1.0);
    CHECK(a.hi == 1.0);
    CHECK(a.edge == Edge::bottom);
}

TEST_CASE("identity profile limits") {
    const SquareMap<double> f(testing::identity_config(32).families, 32);
    const double bound = 12.0 / 47.0;
    CHECK(residual_bound(20) == doctest::Approx(bound));
    const auto w = estimate_omega(f, pt(0.25, 0.5), 20);
    CHECK(w.lo <= w.hi);
    CHECK(w.lo >= 0.25 - bound);
    CHECK(w.hi <= 0.25 + bound);
    REQUIRE(w.block_ends.size() >= 2);
    CHECK(std::fabs(w.block_ends.back() - 0.25) <= std::fabs(w.block_ends.front() - 0.25));
    const auto a = estimate_alpha(f, pt(0.25, -0.5), 20);
    CHECK(a.edge == Edge::bottom);
    CHECK(a.lo >= 0.25 - bound);
    CHECK(a.hi <= 0.25 + bound);
    const auto d = estimate_alpha_direct(f, pt(0.25, -0.5), 20);
    CHECK(d.lo == doctest::Approx(a.lo));
    CHECK(d.hi == doctest::Approx(a.hi));
}

TEST_CASE("six-points omega limits") {
    const SquareMap<double> f(testing::six_points_config().families, 64);
    const SquarePoint<double> starts[] = {pt(0.1, 0.4), pt(-0.5, 0.4), pt(0.1, 1.0 / 3.0)};
    const double targets[] = {0.0, -0.5, 0.5};
    for (int i = 0; i < 3; ++i) {
        const auto e = estimate_omega(f, starts[i], 30);
        CHECK(std::fabs(e.lo - targets[i]) <= e.residual);
        CHECK(std::fabs(e.hi - targets[i]) <= e.residual);
    }
}

TEST_CASE("classification") {
    const SquareMap<double> f(testing::six_points_config().families, 128);
    CHECK(classify_square_orbit(f, pt(0.3, 1.0), Direction::forward).kind == OrbitClass::fixed);
    CHECK(classify_square_orbit(f, pt(0.3, -1.0), Direction::backward).kind == OrbitClass::fixed);
    CHECK(classify_square_orbit(f, pt(0.2, 0.1), Direction::forward).kind == OrbitClass::top_edge_limit);
    CHECK(classify_square_orbit(f, pt(0.2, 0.1), Direction::backward).kind == OrbitClass::bottom_edge_limit);
    CHECK(parse_direction("bwd") == Direction::backward);
    CHECK(testing::error_kind_of([] { parse_direction("up"); }) == ErrorKind::ParseError);
}

TEST_CASE("limit properties") {
    const Config cfg = testing::six_points_config();
    const SquareMap<double> f(cfg.families, 64);
    for (const auto& c : verify_limits(f, cfg)) testing::require_ok(c);
}
