#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "rising/serialize.hpp"

using namespace rising;
using testing::pt;
using testing::q;

namespace {

Config pulled_config() {
    return parse_config(R"({"max_stage": 8,
      "profiles": {"pull": {"lower": [["-1", "-1"], ["0", "-3/10"], ["1", "1"]]}},
      "omega_family": [{"id": 1, "set": {"a": "1/2", "b": "1/2"}, "profile": "pull"}],
      "alpha_family": [{"id": 1, "set": {"a": "1/2", "b": "1/2"}, "profile": "identity"}]})",
                        "pulled");
}

template <class S>
void check_point(const SquarePoint<S>& got, const S& r, const S& s) {
    CHECK(got.r == r);
    CHECK(got.y.ordinate() == s);
}

}  // namespace

TEST_CASE("stage 0 is f02") {
    const SquareMap<Rational> f(testing::six_points_config().families, 4);
    check_point(f.eval(pt(q(3, 10), q(-1, 5))), q(3, 10), q(3, 10));
    check_point(f.eval(pt(q(-1), q(0))), q(-1), q(1, 2));
    check_point(f.eval(pt(q(3, 10), q(-1, 2))), q(3, 10), q(0));
}

TEST_CASE("stage 1 recurrence") {
    const Config cfg = pulled_config();
    const SquareMap<Rational> f(cfg.families, 8);
    SquarePoint<Rational> p = pt(q(0), q(1, 2));
    p = f.eval(p);
    CHECK(p.y.ordinate() == q(3, 4));
    CHECK(p.r == q(-1, 30));
    p = f.eval(f.eval(p));
    CHECK(p.r == q(-1, 10));

    SquarePoint<Rational> e = pt(q(1), q(1, 2));
    for (int i = 0; i < 3; ++i) {
        e = f.eval(e);
        CHECK(e.r == q(1));
    }
}

TEST_CASE("eval and eval_inverse examples") {
    const SquareMap<Rational> f(testing::six_points_config().families, 4);
    check_point(f.eval(pt(q(7, 10), q(1))), q(7, 10), q(1));
    check_point(f.eval(pt(q(-1), q(9, 10))), q(-1), q(19, 20));
    check_point(f.eval(pt(q(3, 10), q(-1, 5))), q(3, 10), q(3, 10));
    check_point(f.eval_inverse(pt(q(7, 10), q(1))), q(7, 10), q(1));
    check_point(f.eval_inverse(pt(q(3, 10), q(3, 10))), q(3, 10), q(-1, 5));
    check_point(f.eval_inverse(pt(q(-1), q(19, 20))), q(-1), q(9, 10));
}

TEST_CASE("lower half under the identity alpha profile") {
    const SquareMap<Rational> f(testing::identity_config().families, 4);
    const SquarePoint<Rational> p = f.eval(pt(q(3, 10), q(-7, 10)));
    CHECK(p.y.ordinate() == q(-2, 5));
    CHECK(p.r == q(3, 10));
}

TEST_CASE("condition report") {
    const SquareMap<Rational> f(testing::six_points_config().families, 4);
    const ConditionReport r1 = check_conditions(f, 1, 16);
    REQUIRE(!r1.blocks.empty());
    CHECK(r1.blocks[0].m == 1);
    CHECK(r1.blocks[0].bound == doctest::Approx(2.0 / 5.0));
    CHECK(r1.violations == 0);
    // After stage 1 the level t_3 = t_{k^2-1} with k = 2 carries C.3.
    CHECK(r1.level_bound == doctest::Approx(2.0 / 9.0));
    CHECK(r1.c1_ok);
    const ConditionReport r2 = check_conditions(f, 2, 16);
    CHECK(r2.level_bound == doctest::Approx(2.0 / 11.0));
    CHECK(r2.violations == 0);

    const SquareMap<Rational> id(testing::identity_config().families, 4);
    CHECK(check_conditions(id, 1, 16).d0_observed == 0.0);
}

TEST_CASE("stage cap") {
    const SquareMap<double> f(testing::six_points_config().families, 2);
    f.ensure_stage(2);
    CHECK(testing::error_kind_of([&] { f.ensure_stage(3); }) == ErrorKind::CapReached);
    CHECK(testing::error_kind_of([&] { f.upper().advance_stage(); }) == ErrorKind::StageOverflow);
    CHECK(stage_of_strip(0) == 0);
    CHECK(stage_of_strip(1) == 1);
    CHECK(stage_of_strip(3) == 1);
    CHECK(stage_of_strip(4) == 2);
}

TEST_CASE("exact map properties through stage 3") {
    const SquareMap<Rational> f(testing::six_points_config().families, 3);
    f.ensure_stage(3);
    Sampler rng(21);
    testing::require_ok(check_normally_rising(f, 15, 500, rng));
    testing::require_ok(check_monotone(f, 15, 500, rng));
    testing::require_ok(check_round_trip(f, 15, 500, rng));
    testing::require_ok(check_anchor_law(f, 3));
    testing::require_ok(check_mirror(f, 15, 300, rng));
    testing::require_ok(check_stage0(f));
}

TEST_CASE("float map properties through stage 8") {
    const SquareMap<double> f(testing::six_points_config().families, 8);
    f.ensure_stage(8);
    Sampler rng(22);
    testing::require_ok(check_normally_rising(f, 80, 2000, rng));
    testing::require_ok(check_monotone(f, 80, 2000, rng));
    testing::require_ok(check_round_trip(f, 80, 2000, rng));
    testing::require_ok(check_anchor_law(f, 6));
    testing::require_ok(check_mirror(f, 80, 1000, rng));
}

TEST_CASE("serialized map reloads") {
    const Config cfg = testing::six_points_config();
    SquareMap<double> f(cfg.families, 16);
    f.ensure_stage(4);
    const std::string text = serialize_map(f, cfg);
    Config back;
    const SquareMap<double> g = deserialize_map<double>(text, &back);
    CHECK(g.upper().stage() == 4);
    CHECK(serialize_map(g, back) == text);
    Sampler rng(23);
    for (int i = 0; i < 200; ++i) {
        const SquarePoint<double> p{rng.uniform(-1.0, 1.0), rng.level<double>(1, 24)};
        CHECK(f.eval(p) == g.eval(p));
    }
    CHECK(testing::error_kind_of([&] { deserialize_map<Rational>(text); }) == ErrorKind::ValidationError);
    CHECK(testing::error_kind_of([] { deserialize_map<double>("{}"); }) == ErrorKind::ParseError);
}
