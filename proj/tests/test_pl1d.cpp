#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

using namespace rising;
using testing::q;

TEST_CASE("f01 at the figure labels") {
    CHECK(f01_eval(q(0)) == q(1, 2));
    CHECK(f01_eval(q(-1, 2)) == q(0));
    const Rational in[] = {q(-1), q(-3, 4), q(-1, 2), q(0), q(1, 2), q(1)};
    const Rational out[] = {q(-1), q(-1, 2), q(0), q(1, 2), q(3, 4), q(1)};
    for (int i = 0; i < 6; ++i) CHECK(f01_eval(in[i]) == out[i]);
    CHECK(f01_eval(0.0) == 0.5);
}

TEST_CASE("f01 inverse") {
    CHECK(f01_invert(q(1, 2)) == q(0));
    CHECK(f01_invert(q(-1, 2)) == q(-3, 4));
    CHECK(f01_invert(q(3, 4)) == q(1, 2));
}

TEST_CASE("identity map") {
    const auto id = MonotonePL1D<double>::identity(-1.0, 1.0);
    CHECK(eval_pl(id, 0.37) == 0.37);
    CHECK(invert_pl(id, 0.37) == 0.37);
    const auto idq = MonotonePL1D<Rational>::identity(q(-1), q(1));
    CHECK(eval_pl(idq, q(37, 100)) == q(37, 100));
    CHECK(invert_pl(idq, q(37, 100)) == q(37, 100));
}

TEST_CASE("PL map errors") {
    using testing::error_kind_of;
    CHECK(error_kind_of([] { MonotonePL1D<double>({0.0, 0.0}, {0.0, 1.0}); }) == ErrorKind::NotIncreasing);
    CHECK(error_kind_of([] { MonotonePL1D<double>({0.0, 1.0}, {1.0, 0.0}); }) == ErrorKind::NotIncreasing);
    const MonotonePL1D<double> m({0.0, 1.0}, {0.0, 2.0});
    CHECK(error_kind_of([&] { m.eval(1.5); }) == ErrorKind::DomainError);
    CHECK(error_kind_of([&] { m.invert(3.0); }) == ErrorKind::RangeError);
    const MonotonePL1D<double> flat({0.0, 1.0, 2.0}, {0.0, 1.0, 1.0}, Strictness::non_decreasing);
    CHECK(error_kind_of([&] { flat.invert(1.0); }) == ErrorKind::NotInvertible);
}

TEST_CASE("levels t_n") {
    CHECK(level<Rational>(0) == q(0));
    CHECK(level<Rational>(1) == q(1, 2));
    CHECK(level<Rational>(2) == q(3, 4));
    CHECK(level<Rational>(-2) == q(-3, 4));
    CHECK(level<double>(-1) == -0.5);
}

TEST_CASE("strip_of") {
    CHECK(strip_of(0.4).n == 1);
    CHECK(strip_of(q(1, 2)).n == 2);
    CHECK(strip_of(-0.6).n == -1);
    const auto s = strip_of(q(-6, 10));
    CHECK(s.lower == q(-3, 4));
    CHECK(s.upper == q(-1, 2));
    CHECK(testing::error_kind_of([] { strip_of(1.0); }) == ErrorKind::DomainError);
}

TEST_CASE("levels keep their ordinate") {
    for (const Rational& s : {q(-7, 8), q(-1, 2), q(-1, 5), q(0), q(1, 3), q(1, 2), q(15, 16)}) {
        const auto y = Level<Rational>::from_ordinate(s);
        CHECK(y.ordinate() == s);
        CHECK(y.next().ordinate() == f01_eval(s));
        CHECK(y.next().prev() == y);
        CHECK(y.reflect().ordinate() == -s);
    }
    CHECK(Level<double>::from_ordinate(0.2).ordinate() == 0.2);
    CHECK(Level<double>::from_ordinate(1.0).kind == Level<double>::Kind::top);
    CHECK(Level<double>::from_ordinate(-1.0).kind == Level<double>::Kind::bottom);
}

TEST_CASE("f02 acts on the ordinate") {
    const auto p = f02(testing::pt(q(3, 10), q(-1, 5)));
    CHECK(p.r == q(3, 10));
    CHECK(p.y.ordinate() == q(3, 10));
}

TEST_CASE("pl1d properties") {
    Sampler rng(11);
    for (const auto& c : verify_pl1d(rng)) testing::require_ok(c);
}
