#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "rising/serialize.hpp"

#include <string>

using namespace rising;
using testing::error_kind_of;
using testing::q;

#ifndef RISING_CONFIG_DIR
#define RISING_CONFIG_DIR "configs"
#endif

TEST_CASE("bundled config") {
    const Config cfg = load_config(std::string(RISING_CONFIG_DIR) + "/lemma31.json");
    CHECK(cfg.mode == Mode::floating);
    CHECK(cfg.max_stage == 128);
    REQUIRE(cfg.omega.members.size() == 3);
    CHECK(cfg.omega.members[0].set.a == q(1, 3));
    CHECK(cfg.omega.members[0].set.is_point());
    CHECK(cfg.omega.members[1].set.a_open);
    CHECK(cfg.omega.members[1].set.b_open);
    CHECK(cfg.omega.members[2].set.a == q(1, 2));
    REQUIRE(cfg.families.omega.members.size() == 3);
    CHECK(cfg.families.omega.members[0].set.a == q(1, 2));
    CHECK(cfg.disk.kind() == DiskSpec::Kind::ellipse);
    CHECK(cfg.estimation.stage_budget == 30);

    const Config builtin = parse_config(six_points_config_text());
    CHECK(builtin.text == cfg.text);
}

TEST_CASE("malformed configs") {
    CHECK(error_kind_of([] { parse_config(""); }) == ErrorKind::ParseError);
    CHECK(error_kind_of([] { parse_config("{\"omega_family\": [}"); }) == ErrorKind::ParseError);
    CHECK(error_kind_of([] { parse_config("{}"); }) == ErrorKind::ParseError);
    CHECK(error_kind_of([] { parse_config(R"({"mode": "fast", "omega_family": []})"); }) == ErrorKind::ParseError);
    CHECK(error_kind_of([] {
              parse_config(R"({"omega_family": [{"set": {"a": "1/3", "b": "1/2"}, "profile": "nope"}]})");
          }) == ErrorKind::ParseError);
    CHECK(error_kind_of([] { load_config("/nonexistent/config.json"); }) == ErrorKind::IoError);
    try {
        parse_config("{\n  \"mode\": \"float\",\n  oops\n}", "bad.json");
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("validation errors") {
    try {
        parse_config(R"({"omega_family": [
            {"set": {"a": "0.1", "b": "0.2", "a_open": true, "b_open": true}, "profile": "identity"},
            {"set": {"a": "0.15", "b": "0.3", "a_open": true, "b_open": true}, "profile": "identity"}]})");
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ValidationError);
        CHECK(std::string(e.what()).find("OverlapError") != std::string::npos);
    }
    CHECK(error_kind_of([] {
              parse_config(R"({"profiles": {"p": {"lower": [["-1", "0"], ["1", "1"]]}},
                "omega_family": [{"set": ["1/2", "1/2"], "profile": "p"}]})");
          }) == ErrorKind::ValidationError);
    CHECK(error_kind_of([] {
              parse_config(R"({"omega_family": [{"set": ["1/2", "1/2"], "profile": "identity"}],
                "disk": {"kind": "ellipse", "a": 0, "b": 1}})");
          }) == ErrorKind::ValidationError);
}

TEST_CASE("numbers") {
    CHECK(parse_rational("3/9") == q(1, 3));
    CHECK(parse_rational("0.375") == q(3, 8));
    CHECK(parse_rational("-1e-3") == q(-1, 1000));
    CHECK(error_kind_of([] { parse_rational("1/0"); }) == ErrorKind::ParseError);
    CHECK(error_kind_of([] { parse_rational("x"); }) == ErrorKind::ParseError);
    CHECK(to_double(q(1, 10)) == 0.1);
    CHECK(to_double(q(1, 3)) == 1.0 / 3.0);
    CHECK(parse_mode("exact") == Mode::exact);
    CHECK(parse_mode("float") == Mode::floating);
}

TEST_CASE("exact map file round trip") {
    const Config cfg = testing::six_points_config();
    SquareMap<Rational> f(cfg.families, 8);
    f.ensure_stage(2);
    const std::string text = serialize_map(f, cfg);
    const SquareMap<Rational> g = deserialize_map<Rational>(text);
    CHECK(g.upper().stage() == 2);
    CHECK(g.lower().stage() == 2);
    Sampler rng(41);
    for (int i = 0; i < 100; ++i) {
        const SquarePoint<Rational> p{rng.uniform<Rational>(q(-1), q(1), 12), rng.level<Rational>(1, 8, 12)};
        CHECK(f.eval(p) == g.eval(p));
        CHECK(f.eval_inverse(p) == g.eval_inverse(p));
    }
}
