#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <cmath>

using namespace rising;
using testing::pt;
using testing::q;

namespace {

const PlanePipeline<double>& pipeline() {
    static const PlanePipeline<double> pipe(build_six_points<double>(128), DiskSpec::unit_disk());
    return pipe;
}

double dist(const PlanePoint& a, const PlanePoint& b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace

TEST_CASE("quotient map values") {
    const QuotientMap<Rational> xi;
    CHECK(xi.eval(pt(q(1, 2), q(1))) == pt(q(1, 2), q(3, 4)));
    CHECK(xi.eval(pt(q(1, 5), q(0))) == pt(q(1, 5), q(0)));
    CHECK(xi.eval(pt(q(-3, 4), q(1))) == pt(q(-1, 2), q(1)));
    CHECK(xi.eval(pt(q(-1, 2), q(-1))) == pt(q(-1, 2), q(-3, 4)));
}

TEST_CASE("quotient preimages") {
    const QuotientMap<Rational> xi;
    const auto id = xi.invert(pt(q(1, 5), q(0)));
    REQUIRE(id.size() == 1);
    CHECK(id[0] == pt(q(1, 5), q(0)));

    const auto x3 = xi.invert(pt(q(1, 2), q(3, 4)));
    REQUIRE(x3.size() == 1);
    CHECK(x3[0] == pt(q(1, 2), q(1)));

    CHECK(xi.on_slit(pt(q(1, 2), q(7, 8))));
    auto two = xi.invert(pt(q(1, 2), q(7, 8)));
    REQUIRE(two.size() == 2);
    if (two[1].r < two[0].r) std::swap(two[0], two[1]);
    for (const auto& p : two) {
        CHECK(p.y.kind == Level<Rational>::Kind::top);
        CHECK(xi.eval(p) == pt(q(1, 2), q(7, 8)));
    }
    CHECK(two[0].r > q(1, 4));
    CHECK(two[0].r < q(1, 2));
    CHECK(two[1].r > q(1, 2));
    CHECK(two[1].r < q(3, 4));
}

TEST_CASE("six-points map g") {
    const auto& pipe = pipeline();
    const SquarePoint<double> slit = pt(0.5, 0.875);
    CHECK(pipe.six_points_map(slit, Direction::forward) == slit);
    const auto side = pipe.six_points_map(pt(-1.0, 0.0), Direction::forward);
    CHECK(side.r == -1.0);
    CHECK(side.y.ordinate() == 0.5);
    const auto p = pipe.six_points_map(pt(0.2, 0.0), Direction::forward);
    const auto want = pipe.quotient().eval(pipe.square_map().eval(pt(0.2, 0.0)));
    CHECK(point_distance(p, want) < 1e-15);
    const auto back = pipe.six_points_map(p, Direction::backward);
    CHECK(point_distance(back, pt(0.2, 0.0)) < 1e-12);
}

TEST_CASE("regions of F") {
    CHECK(six_points_region(pt(-0.5, 0.4)) == Region::l1);
    CHECK(six_points_region(pt(0.5, 0.4)) == Region::l2);
    CHECK(six_points_region(pt(0.0, 0.5)) == Region::l2);
    CHECK(six_points_region(pt(0.1, 0.4)) == Region::interior_f);
    CHECK(six_points_region(pt(0.1, 0.9)) == Region::outside_f);
}

TEST_CASE("L1 and L2 under g") {
    const auto& pipe = pipeline();
    const auto& cfg = SixPointsConfig::get();
    const auto l1 = pt(-0.5, 0.4);
    const auto c1 = classify_orbit(pipe.lifted_stepper(l1, Direction::forward), l1);
    CHECK(c1.kind == OrbitClass::interior_limit);
    CHECK(point_distance(c1.limit, pt(to_double(cfg.x[0].r), to_double(cfg.x[0].s))) < 1e-3);
    const auto l2 = pt(0.1, 1.0 / 3.0);
    const auto c2 = classify_orbit(pipe.lifted_stepper(l2, Direction::forward), l2);
    CHECK(c2.kind == OrbitClass::interior_limit);
    CHECK(point_distance(c2.limit, pt(0.5, 0.75)) < 1e-3);
}

TEST_CASE("tangent map") {
    const PlanePoint o = tangent_eval(pt(0.0, 0.0));
    CHECK(o.x == 0.0);
    CHECK(o.y == 0.0);
    const PlanePoint y = tangent_eval(pt(0.5, 1.0 / 3.0));
    CHECK(y.x == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(y.y == doctest::Approx(std::sqrt(3.0) / 3.0).epsilon(1e-15));
    const auto back = tangent_invert<double>({1.0, std::sqrt(3.0) / 3.0});
    CHECK(back.r == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(back.y.ordinate() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(testing::error_kind_of([] { tangent_eval(pt(0.3, 1.0)); }) == ErrorKind::DomainError);
    CHECK(testing::error_kind_of([] { tangent_eval(pt(1.0 - 1e-13, 0.0)); }) == ErrorKind::DomainError);
}

TEST_CASE("disk conjugacy") {
    const PlanePoint c{0.0, (std::sqrt(3.0) / 3.0 + 1.0) / 2.0};
    for (const PlanePoint& p : {PlanePoint{0.3, 0.7}, PlanePoint{-0.9, 0.95}, PlanePoint{4.0, -3.0}}) {
        const PlanePoint g = disk_conjugacy(DiskSpec::reference(), p, Direction::forward);
        CHECK(dist(g, p) < 1e-12);
    }
    const PlanePoint origin = disk_conjugacy(DiskSpec::unit_disk(), c, Direction::forward);
    CHECK(std::hypot(origin.x, origin.y) < 1e-15);
    for (const PlanePoint& p : {PlanePoint{1.0, 0.7}, PlanePoint{-0.2, 1.0}, PlanePoint{0.5, std::sqrt(3.0) / 3.0}}) {
        const PlanePoint e = disk_conjugacy(DiskSpec::unit_disk(), p, Direction::forward);
        CHECK(std::hypot(e.x, e.y) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(dist(disk_conjugacy(DiskSpec::unit_disk(), e, Direction::backward), p) < 1e-12);
    }
    CHECK(testing::error_kind_of([] { DiskSpec::ellipse({0.0, 0.0}, -1.0, 1.0); }) == ErrorKind::InvalidDisk);
    CHECK(testing::error_kind_of([] {
              DiskSpec::star_polygon({0.0, 0.0}, {{1.0, 0.0}, {0.0, 1.0}, {0.5, 0.5}});
          }) == ErrorKind::InvalidDisk);
}

TEST_CASE("plane map") {
    const auto& pipe = pipeline();
    const auto& cfg = SixPointsConfig::get();
    const PlanePoint x1 = pipe.to_plane(pt(to_double(cfg.x[0].r), to_double(cfg.x[0].s)));
    const PlaneStep<double> s = pipe.plane_map(x1, Direction::forward);
    CHECK_FALSE(s.overflow);
    CHECK(dist(s.plane, x1) < 1e-12);
    const PlanePoint y = pipe.to_plane(pt(0.2, -0.3));
    const PlaneStep<double> a = pipe.plane_map(y, Direction::forward);
    const PlaneStep<double> b = pipe.plane_map(a.plane, Direction::backward);
    CHECK(dist(b.plane, y) < 1e-9);
}

TEST_CASE("plane classification") {
    const auto& pipe = pipeline();
    const auto& cfg = SixPointsConfig::get();
    const PlanePoint x1 = pipe.to_plane(pt(to_double(cfg.x[0].r), to_double(cfg.x[0].s)));
    const PlanePoint x3 = pipe.to_plane(pt(to_double(cfg.x[2].r), to_double(cfg.x[2].s)));

    const auto l1 = pipe.classify_square(pt(-0.5, 0.45));
    CHECK(l1.kind == PlaneClass::bounded);
    REQUIRE(l1.forward_limit);
    CHECK(dist(*l1.forward_limit, x1) < 1e-2);

    const auto l2 = pipe.classify_square(pt(0.2, 0.5));
    CHECK(l2.kind == PlaneClass::bounded);
    REQUIRE(l2.forward_limit);
    CHECK(dist(*l2.forward_limit, x3) < 1e-2);

    CHECK(pipe.classify_square(pt(0.1, 0.4)).kind == PlaneClass::doubly_divergent);
    CHECK(pipe.classify(pipe.to_plane(pt(0.3, 0.45))).kind == PlaneClass::doubly_divergent);
}

TEST_CASE("quotient and plane properties") {
    Sampler rng(31);
    for (const auto& c : verify_quotient(rng, 128)) testing::require_ok(c);
    const Config cfg = testing::six_points_config();
    for (const auto& c : verify_plane(pipeline(), cfg, 12, 6, rng)) testing::require_ok(c);
}
