#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

using namespace rising;
using testing::error_kind_of;
using testing::q;

namespace {

Envelope omega2() {
    return Envelope({EnvelopeNode{q(-1), q(-1), q(-1), q(-1)}, EnvelopeNode{q(-1, 2), q(-1, 2), q(-1, 2), q(0)},
                     EnvelopeNode{q(1, 2), q(0), q(1, 2), q(1, 2)}, EnvelopeNode{q(1), q(1), q(1), q(1)}});
}

FamilyMember member(int id, IntervalSet set) {
    return FamilyMember{id, set, identity_profile(Side::omega), "identity"};
}

}  // namespace

TEST_CASE("identity profile") {
    const LimitProfile p = make_profile(Envelope::identity(), Envelope::identity(), Side::omega);
    CHECK(p.lower.is_identity());
    CHECK(profile_target(p, q(3, 10), 1) == q(3, 10));
    CHECK(profile_target(p, 0.3, 2) == 0.3);
}

TEST_CASE("omega_2 of the six-points map") {
    const LimitProfile p = make_profile(omega2(), omega2(), Side::omega);
    CHECK(profile_target(p, q(1, 10), 2) == q(0));
    CHECK(profile_target(p, q(-1, 2), 1) == q(-1, 2));
    CHECK(profile_target(p, q(1, 2), 1) == q(1, 2));
    for (int b : {1, 2}) {
        CHECK(profile_target(p, q(1), b) == q(1));
        CHECK(profile_target(p, q(-1), b) == q(-1));
    }
    CHECK(p.lower.left_limit(q(1, 2)) == q(0));
    CHECK(p.lower.right_limit(q(-1, 2)) == q(0));
}

TEST_CASE("profile errors") {
    // A non-decreasing step that starts at 0 instead of -1.
    const Envelope shifted({EnvelopeNode{q(-1), q(0), q(0), q(0)}, EnvelopeNode{q(-1, 2), q(0), q(0), q(0)},
                            EnvelopeNode{q(1, 2), q(0), q(1, 2), q(1, 2)}, EnvelopeNode{q(1), q(1), q(1), q(1)}});
    CHECK(error_kind_of([&] { make_profile(shifted, shifted, Side::omega); }) == ErrorKind::EndpointsNotPreserved);
    // Taken literally (0 at -1, then -1/2) the step decreases.
    CHECK(error_kind_of([] {
              Envelope({EnvelopeNode{q(-1), q(0), q(0), q(0)}, EnvelopeNode{q(-1, 2), q(-1, 2), q(-1, 2), q(-1, 2)},
                        EnvelopeNode{q(1), q(1), q(1), q(1)}});
          }) == ErrorKind::NotIncreasing);
    const Envelope high = Envelope::through({{q(-1), q(-1)}, {q(0), q(1, 2)}, {q(1), q(1)}});
    CHECK(error_kind_of([&] { make_profile(high, Envelope::identity(), Side::omega); }) ==
          ErrorKind::EnvelopeOrderViolated);
}

TEST_CASE("truncation") {
    const ClosedInterval a = truncate(IntervalSet::point(q(1, 2)), 5);
    CHECK(a.lo == q(1, 2));
    CHECK(a.hi == q(1, 2));
    const ClosedInterval b = truncate(IntervalSet{q(1, 3), q(1, 2), true, true}, 2);
    CHECK(b.lo == q(7, 18));
    CHECK(b.hi == q(4, 9));
    const ClosedInterval c = truncate(IntervalSet{q(1, 5), q(2, 5), false, true}, 3);
    CHECK(c.lo == q(1, 5));
    CHECK(c.hi == q(7, 20));
}

TEST_CASE("family normalization") {
    IntervalFamily fam;
    fam.members.push_back(member(1, IntervalSet{q(1, 3), q(1, 2), true, true}));
    const IntervalFamily n = normalize_family(fam, Side::omega);
    REQUIRE(n.members.size() == 2);
    CHECK(n.members[0].set.is_point());
    CHECK(n.members[0].set.a == q(1, 2));
    CHECK(n.members[1].set.a == q(1, 3));
    CHECK(n.members[1].set.b_open);

    const IntervalFamily again = normalize_family(n, Side::omega);
    REQUIRE(again.members.size() == 2);
    CHECK(again.members[0].set.a == q(1, 2));

    IntervalFamily overlap;
    overlap.members.push_back(member(1, IntervalSet{q(1, 10), q(1, 5), true, true}));
    overlap.members.push_back(member(2, IntervalSet{q(3, 20), q(3, 10), true, true}));
    CHECK(error_kind_of([&] { validate_families(overlap, IntervalFamily{}); }) == ErrorKind::OverlapError);

    IntervalFamily outside;
    outside.members.push_back(member(1, IntervalSet{q(0), q(1, 5), false, false}));
    CHECK(error_kind_of([&] { validate_families(outside, IntervalFamily{}); }) == ErrorKind::OutOfRange);
}

TEST_CASE("mirror family") {
    const FamilyReport rep = testing::six_points_config().families;
    const IntervalFamily m = mirror_family(rep.alpha);
    for (const auto& mem : m.members) {
        CHECK_FALSE(mem.set.contains(q(0)));
        CHECK(mem.set.b <= q(1, 2));
    }
}

TEST_CASE("dense grid prefix") {
    const DenseGrid plain;
    const auto r0 = grid_prefix(plain, 0);
    REQUIRE(r0.size() == 2);
    CHECK(r0[0] == q(-1));
    CHECK(r0[1] == q(1));
    const auto r1 = grid_prefix(plain, 1);
    REQUIRE(r1.size() == 3);
    CHECK(r1[2] == q(0));
    const DenseGrid with(std::vector<Rational>{q(-1, 2)});
    const std::vector<Rational> want = {q(-1), q(1), q(-1, 2), q(0)};
    CHECK(grid_prefix(with, 2) == want);
    // Dyadics never repeat a breakpoint.
    const auto r = grid_prefix(with, 40);
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j) CHECK(r[i] != r[j]);
}

TEST_CASE("profile properties on the bundled config") {
    Sampler rng(12);
    for (const auto& c : verify_profiles(testing::six_points_config(), rng)) testing::require_ok(c);
}
