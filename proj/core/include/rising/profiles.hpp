#pragma once

#include "rising/error.hpp"
#include "rising/scalar.hpp"

#include <string>
#include <vector>

namespace rising {

/// One breakpoint of an envelope. `left` and `right` are the one-sided
/// limits; `value` is the function value at x. All three agree unless the
/// envelope jumps at x.
struct EnvelopeNode {
    Rational x;
    Rational left;
    Rational value;
    Rational right;
};

/// A non-decreasing function on J, linear between breakpoints.
class Envelope {
public:
    Envelope() = default;
    explicit Envelope(std::vector<EnvelopeNode> nodes);

    static Envelope identity();
    /// Continuous envelope through the given (x, y) pairs.
    static Envelope through(const std::vector<std::pair<Rational, Rational>>& points);

    const std::vector<EnvelopeNode>& nodes() const { return nodes_; }

    Rational eval(const Rational& r) const;
    double eval(double r) const;
    /// Limit from the left (r > -1) or right (r < 1).
    Rational left_limit(const Rational& r) const;
    Rational right_limit(const Rational& r) const;

    bool is_jump(std::size_t i) const;
    bool is_identity() const;

private:
    std::vector<EnvelopeNode> nodes_;
};

enum class Side { omega, alpha };

const char* side_name(Side side);

struct LimitProfile {
    Envelope lower;
    Envelope upper;
    Side side = Side::omega;
};

/// Validates the pair of envelopes.
/// Throws NotIncreasing, EnvelopeOrderViolated or EndpointsNotPreserved.
LimitProfile make_profile(Envelope lower, Envelope upper, Side side);

LimitProfile identity_profile(Side side);

/// xi_1(r) for branch 1, xi_2(r) for branch 2.
Rational profile_target(const LimitProfile& p, const Rational& r, int branch);
double profile_target(const LimitProfile& p, double r, int branch);

/// Connected subset of (0, 1/2] with endpoints a <= b.
struct IntervalSet {
    Rational a;
    Rational b;
    bool a_open = false;
    bool b_open = false;

    static IntervalSet point(const Rational& x) { return IntervalSet{x, x, false, false}; }

    bool is_point() const { return a == b; }
    bool empty() const { return a > b || (a == b && (a_open || b_open)); }
    bool contains(const Rational& x) const;
    bool intersects(const IntervalSet& o) const;
    std::string describe() const;
};

struct ClosedInterval {
    Rational lo;
    Rational hi;
};

/// The stage-k truncation V_k: a closed subinterval growing to V as k grows.
ClosedInterval truncate(const IntervalSet& v, long k);

struct FamilyMember {
    int id = 0;
    IntervalSet set;
    LimitProfile profile;
    std::string profile_name;
};

struct IntervalFamily {
    std::vector<FamilyMember> members;
};

struct FamilyReport {
    IntervalFamily omega;  ///< normalized, members[0].set == {1/2}
    IntervalFamily alpha;  ///< normalized, members[0].set == {1/2}
    std::vector<std::string> notes;
};

/// Checks containment in (0, 1/2] and pairwise disjointness of each family,
/// then normalizes both so that the first member is {1/2}.
/// Throws OverlapError or OutOfRange.
FamilyReport validate_families(const IntervalFamily& omega, const IntervalFamily& alpha);

/// Normalization of a single family; `side` picks the identity profile side.
IntervalFamily normalize_family(const IntervalFamily& family, Side side, std::vector<std::string>* notes = nullptr);

/// The reflected family {1/2 - t : t in W_j} for the lower half, with the
/// level 0 replaced by 1/2. Expects a normalized family.
/// Throws ReflectionCollision if a reflected member meets another one.
IntervalFamily mirror_family(const IntervalFamily& normalized_alpha);

/// The dense grid R = {-1, 1, r1, r2, ...}: envelope breakpoints in
/// ascending order, then dyadic rationals level by level.
class DenseGrid {
public:
    DenseGrid() : DenseGrid(std::vector<Rational>{}) {}
    explicit DenseGrid(std::vector<Rational> breakpoints);
    static DenseGrid for_family(const IntervalFamily& family);

    /// Entry with 0-based position (0 -> -1, 1 -> 1, 2 -> r1, ...).
    const Rational& at(std::size_t index) const;
    /// R_k: the first k+2 entries.
    std::vector<Rational> prefix(long k) const;
    const std::vector<Rational>& breakpoints() const { return breakpoints_; }

private:
    void extend_to(std::size_t count) const;

    std::vector<Rational> breakpoints_;
    mutable std::vector<Rational> values_;
    mutable long dyadic_level_ = 0;
    mutable long dyadic_num_ = 0;
};

std::vector<Rational> grid_prefix(const DenseGrid& grid, long k);

}  // namespace rising
