#pragma once

#include "rising/config.hpp"
#include "rising/verify.hpp"

#include <doctest.h>

namespace testing {

using rising::Rational;

inline Rational q(long p, long d = 1) {
    Rational r(p, d);
    r.canonicalize();
    return r;
}

/// Single-member families {1/2} with identity envelopes on both sides.
inline rising::Config identity_config(long max_stage = 64) {
    const std::string text = R"({"max_stage": )" + std::to_string(max_stage) + R"(,
      "omega_family": [{"id": 1, "set": {"a": "1/2", "b": "1/2"}, "profile": "identity"}],
      "alpha_family": [{"id": 1, "set": {"a": "1/2", "b": "1/2"}, "profile": "identity"}]})";
    return rising::parse_config(text, "identity");
}

inline rising::Config six_points_config() { return rising::parse_config(rising::six_points_config_text(), "bundled"); }

template <class S>
rising::SquarePoint<S> pt(const S& r, const S& s) {
    return rising::make_point(r, s);
}

inline void require_ok(const rising::CheckResult& c) {
    INFO(c.module << "/" << c.name << ": " << c.detail);
    CHECK(c.ok);
}

template <class F>
rising::ErrorKind error_kind_of(F&& f) {
    try {
        f();
    } catch (const rising::Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return rising::ErrorKind::IoError;
}

}  // namespace testing
