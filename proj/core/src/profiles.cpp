#include "rising/profiles.hpp"

#include <algorithm>
#include <set>

namespace rising {

namespace {

const Rational kHalf(1, 2);

}  // namespace

const char* side_name(Side side) { return side == Side::omega ? "omega" : "alpha"; }

Envelope::Envelope(std::vector<EnvelopeNode> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.size() < 2) throw Error(ErrorKind::NotIncreasing, "an envelope needs at least two breakpoints");
    nodes_.front().left = nodes_.front().value;
    nodes_.back().right = nodes_.back().value;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const auto& n = nodes_[i];
        if (!(n.left <= n.value && n.value <= n.right))
            throw Error(ErrorKind::NotIncreasing, "envelope decreases across its jump at x = " + to_string(n.x));
        if (i == 0) continue;
        const auto& p = nodes_[i - 1];
        if (!(p.x < n.x)) throw Error(ErrorKind::NotIncreasing, "envelope breakpoints must be strictly increasing");
        if (!(p.right <= n.left))
            throw Error(ErrorKind::NotIncreasing,
                        "envelope decreases between x = " + to_string(p.x) + " and x = " + to_string(n.x));
    }
}

Envelope Envelope::identity() {
    return through({{Rational(-1), Rational(-1)}, {Rational(1), Rational(1)}});
}

Envelope Envelope::through(const std::vector<std::pair<Rational, Rational>>& points) {
    std::vector<EnvelopeNode> nodes;
    nodes.reserve(points.size());
    for (const auto& [x, y] : points) nodes.push_back(EnvelopeNode{x, y, y, y});
    return Envelope(std::move(nodes));
}

Rational Envelope::eval(const Rational& r) const {
    if (r < -1 || r > 1) throw Error(ErrorKind::DomainError, "envelope argument outside J");
    if (r <= nodes_.front().x) return nodes_.front().value;
    if (r >= nodes_.back().x) return nodes_.back().value;
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), r,
                               [](const Rational& x, const EnvelopeNode& n) { return x < n.x; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    if (lo.x == r) return lo.value;
    Rational t = (r - lo.x) / (hi.x - lo.x);
    return lo.right + t * (hi.left - lo.right);
}

double Envelope::eval(double r) const {
    if (r < -1 || r > 1) throw Error(ErrorKind::DomainError, "envelope argument outside J");
    if (r <= to_double(nodes_.front().x)) return to_double(nodes_.front().value);
    if (r >= to_double(nodes_.back().x)) return to_double(nodes_.back().value);
    std::size_t i = 0;
    while (i + 1 < nodes_.size() && to_double(nodes_[i + 1].x) <= r) ++i;
    const auto& lo = nodes_[i];
    const auto& hi = nodes_[i + 1];
    if (to_double(lo.x) == r) return to_double(lo.value);
    if (lo.x == lo.right && hi.x == hi.left) return r;
    double t = (r - to_double(lo.x)) / (to_double(hi.x) - to_double(lo.x));
    return to_double(lo.right) + t * (to_double(hi.left) - to_double(lo.right));
}

Rational Envelope::left_limit(const Rational& r) const {
    for (const auto& n : nodes_)
        if (n.x == r) return n.left;
    return eval(r);
}

Rational Envelope::right_limit(const Rational& r) const {
    for (const auto& n : nodes_)
        if (n.x == r) return n.right;
    return eval(r);
}

bool Envelope::is_jump(std::size_t i) const {
    const auto& n = nodes_[i];
    return n.left != n.value || n.value != n.right;
}

bool Envelope::is_identity() const {
    for (const auto& n : nodes_)
        if (n.left != n.x || n.value != n.x || n.right != n.x) return false;
    return true;
}

LimitProfile make_profile(Envelope lower, Envelope upper, Side side) {
    for (const Envelope* e : {&lower, &upper}) {
        const auto& nodes = e->nodes();
        if (nodes.front().x != -1 || nodes.back().x != 1)
            throw Error(ErrorKind::EndpointsNotPreserved, "envelope must be defined on all of J = [-1, 1]");
        if (nodes.front().value != -1 || nodes.back().value != 1)
            throw Error(ErrorKind::EndpointsNotPreserved, "envelope must fix the endpoints -1 and 1");
    }
    std::set<Rational> xs;
    for (const auto& n : lower.nodes()) xs.insert(n.x);
    for (const auto& n : upper.nodes()) xs.insert(n.x);
    for (const auto& x : xs) {
        bool ok = lower.eval(x) <= upper.eval(x) && lower.left_limit(x) <= upper.left_limit(x) &&
                  lower.right_limit(x) <= upper.right_limit(x);
        if (!ok)
            throw Error(ErrorKind::EnvelopeOrderViolated, "lower envelope exceeds upper envelope at x = " + to_string(x));
    }
    return LimitProfile{std::move(lower), std::move(upper), side};
}

LimitProfile identity_profile(Side side) { return make_profile(Envelope::identity(), Envelope::identity(), side); }

Rational profile_target(const LimitProfile& p, const Rational& r, int branch) {
    return branch == 1 ? p.lower.eval(r) : p.upper.eval(r);
}

double profile_target(const LimitProfile& p, double r, int branch) {
    return branch == 1 ? p.lower.eval(r) : p.upper.eval(r);
}

bool IntervalSet::contains(const Rational& x) const {
    if (x < a || x > b) return false;
    if (x == a && a_open) return false;
    if (x == b && b_open) return false;
    return true;
}

bool IntervalSet::intersects(const IntervalSet& o) const {
    if (empty() || o.empty()) return false;
    const bool this_lo = a > o.a || (a == o.a && a_open);
    const Rational& lo = this_lo ? a : o.a;
    const bool lo_open = a == o.a ? (a_open || o.a_open) : (this_lo ? a_open : o.a_open);
    const bool this_hi = b < o.b || (b == o.b && b_open);
    const Rational& hi = this_hi ? b : o.b;
    const bool hi_open = b == o.b ? (b_open || o.b_open) : (this_hi ? b_open : o.b_open);
    if (lo < hi) return true;
    return lo == hi && !lo_open && !hi_open;
}

std::string IntervalSet::describe() const {
    if (is_point()) return "{" + to_string(a) + "}";
    return std::string(a_open ? "(" : "[") + to_string(a) + ", " + to_string(b) + (b_open ? ")" : "]");
}

ClosedInterval truncate(const IntervalSet& v, long k) {
    const Rational kk(k);
    if (v.is_point() || (!v.a_open && !v.b_open)) return ClosedInterval{v.a, v.b};
    Rational lo = v.a_open ? Rational((kk * v.a + v.b) / (kk + 1)) : v.a;
    Rational hi = v.b_open ? Rational((v.a + kk * v.b) / (kk + 1)) : v.b;
    lo.canonicalize();
    hi.canonicalize();
    return ClosedInterval{lo, hi};
}

IntervalFamily normalize_family(const IntervalFamily& family, Side side, std::vector<std::string>* notes) {
    const auto& ms = family.members;
    for (const auto& m : ms) {
        if (m.set.empty()) throw Error(ErrorKind::OutOfRange, "member " + std::to_string(m.id) + " is empty");
        bool inside = m.set.a >= 0 && (m.set.a > 0 || m.set.a_open) && m.set.b <= kHalf;
        if (!inside)
            throw Error(ErrorKind::OutOfRange,
                        "member " + std::to_string(m.id) + " " + m.set.describe() + " leaves (0, 1/2]");
    }
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (ms[i].set.intersects(ms[j].set))
                throw Error(ErrorKind::OverlapError, "members " + std::to_string(ms[i].id) + " " +
                                                         ms[i].set.describe() + " and " + std::to_string(ms[j].id) +
                                                         " " + ms[j].set.describe() + " intersect");

    IntervalFamily out;
    std::vector<FamilyMember> rest;
    bool have_half = false;
    for (const auto& m : ms) {
        if (!m.set.contains(kHalf)) {
            rest.push_back(m);
            continue;
        }
        have_half = true;
        FamilyMember head = m;
        head.set = IntervalSet::point(kHalf);
        out.members.push_back(head);
        if (!m.set.is_point()) {
            FamilyMember tail = m;
            tail.set.b_open = true;
            rest.push_back(tail);
            if (notes) notes->push_back("split {1/2} off member " + std::to_string(m.id));
        }
    }
    if (!have_half) {
        int id = 0;
        for (const auto& m : ms) id = std::max(id, m.id);
        FamilyMember head{id + 1, IntervalSet::point(kHalf), identity_profile(side), "identity"};
        out.members.push_back(head);
        if (notes) notes->push_back("added {1/2} with the identity profile as member " + std::to_string(id + 1));
    }
    for (auto& m : rest) out.members.push_back(std::move(m));
    return out;
}

FamilyReport validate_families(const IntervalFamily& omega, const IntervalFamily& alpha) {
    FamilyReport report;
    report.omega = normalize_family(omega, Side::omega, &report.notes);
    report.alpha = normalize_family(alpha, Side::alpha, &report.notes);
    return report;
}

IntervalFamily mirror_family(const IntervalFamily& normalized) {
    IntervalFamily out;
    for (const auto& m : normalized.members) {
        FamilyMember r = m;
        if (m.set.is_point() && m.set.a == kHalf) {
            r.set = IntervalSet::point(kHalf);
        } else {
            r.set = IntervalSet{kHalf - m.set.b, kHalf - m.set.a, m.set.b_open, m.set.a_open};
            if (r.set.contains(Rational(0)))
                throw Error(ErrorKind::ReflectionCollision,
                            "reflected member " + std::to_string(m.id) + " reaches the level 0");
        }
        out.members.push_back(std::move(r));
    }
    const auto& ms = out.members;
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (ms[i].set.intersects(ms[j].set))
                throw Error(ErrorKind::ReflectionCollision,
                            "reflected members " + std::to_string(ms[i].id) + " and " + std::to_string(ms[j].id) +
                                " collide");
    return out;
}

DenseGrid::DenseGrid(std::vector<Rational> breakpoints) {
    std::set<Rational> unique;
    for (auto& x : breakpoints)
        if (x > -1 && x < 1) unique.insert(x);
    breakpoints_.assign(unique.begin(), unique.end());
    values_.push_back(Rational(-1));
    values_.push_back(Rational(1));
    for (const auto& x : breakpoints_) values_.push_back(x);
}

DenseGrid DenseGrid::for_family(const IntervalFamily& family) {
    std::vector<Rational> xs;
    for (const auto& m : family.members) {
        for (const auto& n : m.profile.lower.nodes()) xs.push_back(n.x);
        for (const auto& n : m.profile.upper.nodes()) xs.push_back(n.x);
    }
    return DenseGrid(std::move(xs));
}

void DenseGrid::extend_to(std::size_t count) const {
    while (values_.size() < count) {
        Rational x;
        if (dyadic_level_ == 0) {
            x = 0;
            dyadic_level_ = 1;
            dyadic_num_ = -1;
        } else {
            const long den = 1L << dyadic_level_;
            x = Rational(dyadic_num_, den);
            x.canonicalize();
            dyadic_num_ += 2;
            if (dyadic_num_ >= den) {
                ++dyadic_level_;
                dyadic_num_ = -(1L << dyadic_level_) + 1;
            }
        }
        if (!std::binary_search(breakpoints_.begin(), breakpoints_.end(), x)) values_.push_back(x);
    }
}

const Rational& DenseGrid::at(std::size_t index) const {
    extend_to(index + 1);
    return values_[index];
}

std::vector<Rational> DenseGrid::prefix(long k) const {
    extend_to(static_cast<std::size_t>(k + 2));
    return std::vector<Rational>(values_.begin(), values_.begin() + k + 2);
}

std::vector<Rational> grid_prefix(const DenseGrid& grid, long k) { return grid.prefix(k); }

}  // namespace rising
