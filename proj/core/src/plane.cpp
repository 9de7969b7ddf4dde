#include "rising/plane.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace rising {

namespace {

template <class S>
S from_double(double x) {
    if constexpr (is_exact_v<S>)
        return Rational(x);
    else
        return x;
}

Rational q(long n, long d = 1) { return Rational(n, d); }

}  // namespace

const SixPointsConfig& SixPointsConfig::get() {
    static const SixPointsConfig cfg = [] {
        SixPointsConfig c;
        c.u = {RPoint{q(-1, 2), q(1)}, RPoint{q(0), q(1)}, RPoint{q(1, 2), q(1)},
               RPoint{q(-1, 2), q(-1)}, RPoint{q(0), q(-1)}, RPoint{q(1, 2), q(-1)}};
        c.v = {RPoint{q(-1), q(1)}, RPoint{q(1), q(1)}, RPoint{q(-1), q(-1)}, RPoint{q(1), q(-1)}};
        c.w = {RPoint{q(-3, 4), q(1)},  RPoint{q(-1, 4), q(1)},  RPoint{q(1, 4), q(1)},  RPoint{q(3, 4), q(1)},
               RPoint{q(-3, 4), q(-1)}, RPoint{q(-1, 4), q(-1)}, RPoint{q(1, 4), q(-1)}, RPoint{q(3, 4), q(-1)}};
        c.x = {RPoint{q(-1, 2), q(3, 4)},  RPoint{q(0), q(3, 4)},  RPoint{q(1, 2), q(3, 4)},
               RPoint{q(-1, 2), q(-3, 4)}, RPoint{q(0), q(-3, 4)}, RPoint{q(1, 2), q(-3, 4)}};
        return c;
    }();
    return cfg;
}

FamilyReport six_points_families() {
    const Rational half(1, 2);
    const Rational third(1, 3);
    // Envelope of u3 on [-1/2, 1/2], continued linearly to the corners.
    Envelope to_u3 = Envelope::through({{q(-1), q(-1)}, {-half, half}, {half, half}, {q(1), q(1)}});
    Envelope step({EnvelopeNode{q(-1), q(-1), q(-1), q(-1)}, EnvelopeNode{-half, -half, -half, q(0)},
                   EnvelopeNode{half, q(0), half, half}, EnvelopeNode{q(1), q(1), q(1), q(1)}});
    auto family = [&](Side side) {
        IntervalFamily fam;
        fam.members.push_back(FamilyMember{1, IntervalSet::point(third), make_profile(to_u3, to_u3, side), "u3"});
        fam.members.push_back(FamilyMember{2, IntervalSet{third, half, true, true}, make_profile(step, step, side), "step"});
        fam.members.push_back(FamilyMember{3, IntervalSet::point(half), make_profile(to_u3, to_u3, side), "u3"});
        return fam;
    };
    return validate_families(family(Side::omega), family(Side::alpha));
}

template <class S>
SquareMap<S> build_six_points(long max_stage) {
    return SquareMap<S>(six_points_families(), max_stage);
}

const char* region_name(Region r) {
    switch (r) {
        case Region::l1: return "L1";
        case Region::l2: return "L2";
        case Region::interior_f: return "F-interior";
        case Region::outside_f: return "outside-F";
    }
    return "outside-F";
}

template <class S>
Region six_points_region(const SquarePoint<S>& p, double tol) {
    if (p.y.is_edge()) return Region::outside_f;
    const double r = to_double(p.r);
    const double s = to_double(p.y.ordinate());
    const double lo = 1.0 / 3.0, hi = 0.5;
    if (r < -0.5 - tol || r > 0.5 + tol || s < lo - tol || s > hi + tol) return Region::outside_f;
    const bool left = std::fabs(r + 0.5) <= tol;
    const bool right = std::fabs(r - 0.5) <= tol;
    const bool bottom = std::fabs(s - lo) <= tol;
    const bool top = std::fabs(s - hi) <= tol;
    if (left && !bottom && !top) return Region::l1;
    if (left || right || bottom || top) return Region::l2;
    if (tol == 0.0 && is_exact_v<S>) {
        // Exact coordinates: decide the edges without rounding.
        const S ps = p.y.ordinate();
        if (p.r == from_int<S>(-1, 2) && ps != from_int<S>(1, 3) && ps != from_int<S>(1, 2)) return Region::l1;
        if (p.r == from_int<S>(1, 2) || ps == from_int<S>(1, 3) || ps == from_int<S>(1, 2)) return Region::l2;
    }
    return Region::interior_f;
}

// ---- quotient map ----------------------------------------------------------

template <class S>
QuotientMap<S>::QuotientMap() {
    using V = std::array<Rational, 2>;
    const V P{q(1, 4), q(1, 4)}, A{q(0), q(0)}, B{q(1, 4), q(0)}, C{q(1, 2), q(0)}, G{q(1, 2), q(1, 2)},
        F{q(0), q(1, 2)}, Q{q(3, 4), q(1, 4)}, D{q(3, 4), q(0)}, E{q(1), q(0)}, H{q(1), q(1, 2)};
    const V x3{q(1, 2), q(1, 4)};
    tris_ = {
        {{P, A, B}, {P, A, C}}, {{P, B, C}, {P, C, x3}}, {{P, C, G}, {P, x3, G}}, {{P, G, F}, {P, G, F}},
        {{P, F, A}, {P, F, A}}, {{Q, C, D}, {Q, x3, C}}, {{Q, D, E}, {Q, C, E}}, {{Q, E, H}, {Q, E, H}},
        {{Q, H, G}, {Q, H, G}}, {{Q, G, C}, {Q, G, x3}},
    };
    for (const auto& t : tris_) {
        std::array<std::array<S, 2>, 3> a, b;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 2; ++j) {
                a[i][j] = from_rational<S>(t.src[i][j]);
                b[i][j] = from_rational<S>(t.dst[i][j]);
            }
        src_.push_back(a);
        dst_.push_back(b);
    }
}

template <class S>
typename QuotientMap<S>::Frame QuotientMap<S>::to_local(const SquarePoint<S>& p) const {
    Frame f;
    const Level<S>& y = p.y;
    if (y.kind == Level<S>::Kind::top) {
        f.q.e = S(0);
    } else if (y.kind == Level<S>::Kind::bottom) {
        f.flip_v = true;
        f.q.e = S(0);
    } else if (y.strip == 0 || y.strip == 1) {
        f.identity = true;
        return f;
    } else if (y.strip >= 2) {
        f.q.e = y.gap();
    } else {
        f.flip_v = true;
        f.q.e = y.reflect().gap();
    }
    f.flip_r = p.r < S(0);
    f.q.r = f.flip_r ? -p.r : p.r;
    return f;
}

template <class S>
SquarePoint<S> QuotientMap<S>::from_local(const Frame& f, const Local& loc) const {
    S r = std::clamp(loc.r, S(0), S(1));
    S e = std::clamp(loc.e, S(0), from_int<S>(1, 2));
    Level<S> y = e == S(0) ? Level<S>::top() : Level<S>::from_gap_top(e);
    if (f.flip_v) y = y.reflect();
    if (f.flip_r && r != S(0)) r = -r;
    return SquarePoint<S>{r, y};
}

template <class S>
bool QuotientMap<S>::map_through(const Local& p, bool forward, Local& out) const {
    const S tol = is_exact_v<S> ? S(0) : from_double<S>(1e-14);
    for (std::size_t t = 0; t < src_.size(); ++t) {
        const auto& V = forward ? src_[t] : dst_[t];
        const auto& W = forward ? dst_[t] : src_[t];
        // Origin at a vertex on the top edge when there is one, so that small
        // gaps survive the affine arithmetic.
        int o = 0;
        for (int i = 0; i < 3; ++i)
            if (V[i][1] == S(0)) {
                o = i;
                break;
            }
        const int i1 = (o + 1) % 3, i2 = (o + 2) % 3;
        const S ur = V[i1][0] - V[o][0], ue = V[i1][1] - V[o][1];
        const S wr = V[i2][0] - V[o][0], we = V[i2][1] - V[o][1];
        const S dr = p.r - V[o][0], de = p.e - V[o][1];
        const S det = ur * we - ue * wr;
        const S l1 = (dr * we - de * wr) / det;
        const S l2 = (ur * de - ue * dr) / det;
        const S l0 = S(1) - l1 - l2;
        if (l0 < -tol || l1 < -tol || l2 < -tol) continue;
        out.r = W[o][0] + l1 * (W[i1][0] - W[o][0]) + l2 * (W[i2][0] - W[o][0]);
        out.e = W[o][1] + l1 * (W[i1][1] - W[o][1]) + l2 * (W[i2][1] - W[o][1]);
        return true;
    }
    return false;
}

template <class S>
SquarePoint<S> QuotientMap<S>::eval(const SquarePoint<S>& p) const {
    if (p.r < S(-1) || p.r > S(1)) throw Error(ErrorKind::DomainError, "point outside J^2");
    const Frame f = to_local(p);
    if (f.identity) return p;
    Local out;
    if (!map_through(f.q, true, out)) throw Error(ErrorKind::DomainError, "point outside the quotient fan");
    return from_local(f, out);
}

template <class S>
bool QuotientMap<S>::on_slit(const SquarePoint<S>& p) const {
    if (p.r < S(-1) || p.r > S(1)) return false;
    const Frame f = to_local(p);
    if (f.identity) return false;
    const S half = from_int<S>(1, 2);
    bool at_half;
    if constexpr (is_exact_v<S>)
        at_half = f.q.r == half;
    else
        at_half = std::fabs(f.q.r - half) <= 1e-12;
    return at_half && f.q.e < from_int<S>(1, 4);
}

template <class S>
std::vector<SquarePoint<S>> QuotientMap<S>::invert(const SquarePoint<S>& p) const {
    if (p.r < S(-1) || p.r > S(1)) throw Error(ErrorKind::DomainError, "point outside J^2");
    const Frame f = to_local(p);
    if (f.identity) return {p};
    if (on_slit(p)) {
        // The edges [w3 u3] and [u3 w4] both fold onto [u3 x3].
        const S t = f.q.e * 4;
        Local a{from_int<S>(1, 4) + t / 4, S(0)};
        Local b{from_int<S>(3, 4) - t / 4, S(0)};
        return {from_local(f, a), from_local(f, b)};
    }
    Local out;
    if (!map_through(f.q, false, out)) throw Error(ErrorKind::NotInImage, "point is not in the image of the quotient map");
    return {from_local(f, out)};
}

// ---- tangent ---------------------------------------------------------------

template <class S>
PlanePoint tangent_eval(const SquarePoint<S>& p) {
    if (p.y.is_edge()) throw Error(ErrorKind::DomainError, "tangent map is undefined on the horizontal edges");
    const double r = to_double(p.r);
    if (!(1.0 - std::fabs(r) >= kDeltaTan))
        throw Error(ErrorKind::DomainError, "abscissa within the tangent overflow guard");
    const double gap = to_double(p.y.gap());
    if (!(gap >= kDeltaTan)) throw Error(ErrorKind::DomainError, "ordinate within the tangent overflow guard");
    const double half_pi = std::numbers::pi / 2.0;
    PlanePoint out;
    out.x = std::tan(half_pi * r);
    if (gap >= 0.5)
        out.y = std::tan(half_pi * to_double(p.y.ordinate()));
    else
        out.y = p.y.upper_half() ? 1.0 / std::tan(half_pi * gap) : -1.0 / std::tan(half_pi * gap);
    return out;
}

template <class S>
SquarePoint<S> tangent_invert(const PlanePoint& y) {
    if (!std::isfinite(y.x) || !std::isfinite(y.y)) throw Error(ErrorKind::DomainError, "plane point is not finite");
    const double k = 2.0 / std::numbers::pi;
    SquarePoint<S> out;
    out.r = from_double<S>(k * std::atan(y.x));
    if (y.y >= 0.0)
        out.y = Level<S>::from_gap_top(from_double<S>(k * std::atan2(1.0, y.y)));
    else
        out.y = Level<S>::from_gap_bottom(from_double<S>(k * std::atan2(1.0, -y.y)));
    return out;
}

// ---- disks -----------------------------------------------------------------

DiskSpec DiskSpec::rectangle(PlanePoint center, double half_width, double half_height) {
    DiskSpec d;
    d.kind_ = Kind::rectangle;
    d.center_ = center;
    d.a_ = half_width;
    d.b_ = half_height;
    d.validate();
    return d;
}

DiskSpec DiskSpec::ellipse(PlanePoint center, double a, double b) {
    DiskSpec d;
    d.kind_ = Kind::ellipse;
    d.center_ = center;
    d.a_ = a;
    d.b_ = b;
    d.validate();
    return d;
}

DiskSpec DiskSpec::star_polygon(PlanePoint center, std::vector<PlanePoint> vertices) {
    DiskSpec d;
    d.kind_ = Kind::star_polygon;
    d.center_ = center;
    d.vertices_ = std::move(vertices);
    d.validate();
    double turn = 0.0;
    const std::size_t n = d.vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const PlanePoint& p = d.vertices_[i];
        const PlanePoint& q = d.vertices_[(i + 1) % n];
        turn += (p.x - center.x) * (q.y - center.y) - (p.y - center.y) * (q.x - center.x);
    }
    if (turn < 0) std::reverse(d.vertices_.begin(), d.vertices_.end());
    return d;
}

DiskSpec DiskSpec::reference() {
    const double lo = std::sqrt(3.0) / 3.0;
    return rectangle({0.0, (lo + 1.0) / 2.0}, 1.0, (1.0 - lo) / 2.0);
}

const char* DiskSpec::kind_name() const {
    switch (kind_) {
        case Kind::rectangle: return "rectangle";
        case Kind::ellipse: return "ellipse";
        case Kind::star_polygon: return "star-polygon";
    }
    return "ellipse";
}

void DiskSpec::validate() const {
    if (!std::isfinite(center_.x) || !std::isfinite(center_.y)) throw Error(ErrorKind::InvalidDisk, "disk center is not finite");
    if (kind_ != Kind::star_polygon) {
        if (!(a_ > 0.0) || !(b_ > 0.0) || !std::isfinite(a_) || !std::isfinite(b_))
            throw Error(ErrorKind::InvalidDisk, std::string(kind_name()) + " needs positive finite extents");
        return;
    }
    const std::size_t n = vertices_.size();
    if (n < 3) throw Error(ErrorKind::InvalidDisk, "star polygon needs at least 3 vertices");
    int sign = 0;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double px = vertices_[i].x - center_.x, py = vertices_[i].y - center_.y;
        const double qx = vertices_[(i + 1) % n].x - center_.x, qy = vertices_[(i + 1) % n].y - center_.y;
        if (!std::isfinite(px) || !std::isfinite(py)) throw Error(ErrorKind::InvalidDisk, "vertex is not finite");
        const double cr = px * qy - py * qx;
        const int sg = cr > 0 ? 1 : cr < 0 ? -1 : 0;
        if (sg == 0 || (sign != 0 && sg != sign))
            throw Error(ErrorKind::InvalidDisk, "polygon is not strictly star-shaped about its center");
        sign = sg;
        total += std::atan2(cr, px * qx + py * qy);
    }
    if (std::fabs(std::fabs(total) - 2.0 * std::numbers::pi) > 1e-9)
        throw Error(ErrorKind::InvalidDisk, "polygon winds around its center more than once");
}

double DiskSpec::radius(double ux, double uy) const {
    switch (kind_) {
        case Kind::rectangle: {
            const double inf = std::numeric_limits<double>::infinity();
            const double rx = std::fabs(ux) > 0 ? a_ / std::fabs(ux) : inf;
            const double ry = std::fabs(uy) > 0 ? b_ / std::fabs(uy) : inf;
            return std::min(rx, ry);
        }
        case Kind::ellipse: return 1.0 / std::sqrt(ux * ux / (a_ * a_) + uy * uy / (b_ * b_));
        case Kind::star_polygon: {
            double best = 0.0;
            const std::size_t n = vertices_.size();
            for (std::size_t i = 0; i < n; ++i) {
                const double px = vertices_[i].x - center_.x, py = vertices_[i].y - center_.y;
                const double dx = vertices_[(i + 1) % n].x - vertices_[i].x;
                const double dy = vertices_[(i + 1) % n].y - vertices_[i].y;
                const double denom = ux * dy - uy * dx;
                if (denom == 0.0) continue;
                const double t = (px * dy - py * dx) / denom;
                const double w = (px * uy - py * ux) / denom;
                if (t > 0 && w >= -1e-12 && w <= 1 + 1e-12) best = std::max(best, t);
            }
            return best;
        }
    }
    return 1.0;
}

PlanePoint DiskConjugacy::radial(const DiskSpec& from, const DiskSpec& to, const PlanePoint& p) {
    const double dx = p.x - from.center().x, dy = p.y - from.center().y;
    const double s = std::hypot(dx, dy);
    if (s == 0.0) return to.center();
    const double ux = dx / s, uy = dy / s;
    const double rf = from.radius(ux, uy), rt = to.radius(ux, uy);
    const double sigma = s <= rf ? s * rt / rf : rt + (s - rf);
    return PlanePoint{to.center().x + sigma * ux, to.center().y + sigma * uy};
}

PlanePoint DiskConjugacy::forward(const PlanePoint& p) const { return radial(g_, e_, p); }
PlanePoint DiskConjugacy::backward(const PlanePoint& q) const { return radial(e_, g_, q); }

PlanePoint disk_conjugacy(const DiskSpec& spec, const PlanePoint& p, Direction direction) {
    DiskConjugacy z(spec);
    return direction == Direction::forward ? z.forward(p) : z.backward(p);
}

// ---- pipeline --------------------------------------------------------------

const char* plane_class_name(PlaneClass c) {
    switch (c) {
        case PlaneClass::bounded: return "bounded";
        case PlaneClass::positively_divergent: return "positively-divergent";
        case PlaneClass::negatively_divergent: return "negatively-divergent";
        case PlaneClass::doubly_divergent: return "doubly-divergent";
        case PlaneClass::undetermined: return "undetermined";
    }
    return "undetermined";
}

template <class S>
PlanePipeline<S>::PlanePipeline(SquareMap<S> f, DiskSpec disk)
    : f_(std::move(f)), zeta_(std::move(disk)), g_rect_(DiskSpec::reference()) {}

template <class S>
SquarePoint<S> PlanePipeline<S>::six_points_map(const SquarePoint<S>& p, Direction direction) const {
    const auto pre = xi_.invert(p);
    if (pre.size() == 2) return p;
    const SquarePoint<S> q = direction == Direction::forward ? f_.eval(pre[0]) : f_.eval_inverse(pre[0]);
    return xi_.eval(q);
}

template <class S>
Stepper<S> PlanePipeline<S>::lifted_stepper(const SquarePoint<S>& start, Direction direction) const {
    const auto pre = xi_.invert(start);
    if (pre.size() == 2) return [](const SquarePoint<S>& p) { return p; };
    struct State {
        SquarePoint<S> lift;
        SquarePoint<S> cur;
    };
    auto state = std::make_shared<State>(State{pre[0], start});
    return [this, state, direction](const SquarePoint<S>& p) {
        if (!(p == state->cur)) {
            const auto pr = xi_.invert(p);
            if (pr.size() == 2) return p;
            state->lift = pr[0];
        }
        state->lift = direction == Direction::forward ? f_.eval(state->lift) : f_.eval_inverse(state->lift);
        state->cur = xi_.eval(state->lift);
        return state->cur;
    };
}

template <class S>
SquarePoint<S> PlanePipeline<S>::to_square(const PlanePoint& y) const {
    return tangent_invert<S>(zeta_.backward(y));
}

template <class S>
PlanePoint PlanePipeline<S>::to_plane(const SquarePoint<S>& x) const {
    return zeta_.forward(tangent_eval(x));
}

template <class S>
PlaneStep<S> PlanePipeline<S>::plane_map(const PlanePoint& y, Direction direction) const {
    PlaneStep<S> out;
    out.square = six_points_map(to_square(y), direction);
    try {
        out.plane = to_plane(out.square);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::DomainError) throw;
        out.overflow = true;
    }
    return out;
}

template <class S>
PlaneClassification<S> PlanePipeline<S>::classify_square(const SquarePoint<S>& x, const ClassifyParams& params) const {
    PlaneClassification<S> out;
    out.square_start = x;
    out.forward = classify_orbit(lifted_stepper(x, Direction::forward), x, params);
    out.backward = classify_orbit(lifted_stepper(x, Direction::backward), x, params);
    auto settles = [](const Classification<S>& c) {
        return c.kind == OrbitClass::interior_limit || c.kind == OrbitClass::fixed;
    };
    auto escapes = [](const Classification<S>& c) {
        return c.kind == OrbitClass::top_edge_limit || c.kind == OrbitClass::bottom_edge_limit;
    };
    auto image = [this](const Classification<S>& c) -> std::optional<PlanePoint> {
        try {
            return to_plane(c.limit);
        } catch (const Error&) {
            return std::nullopt;
        }
    };
    const bool fs = settles(out.forward), bs = settles(out.backward);
    const bool fe = escapes(out.forward), be = escapes(out.backward);
    if (fs && bs)
        out.kind = PlaneClass::bounded;
    else if (fe && be)
        out.kind = PlaneClass::doubly_divergent;
    else if (fe && bs)
        out.kind = PlaneClass::positively_divergent;
    else if (fs && be)
        out.kind = PlaneClass::negatively_divergent;
    else
        out.kind = PlaneClass::undetermined;
    if (fs) out.forward_limit = image(out.forward);
    if (bs) out.backward_limit = image(out.backward);
    return out;
}

template <class S>
PlaneClassification<S> PlanePipeline<S>::classify(const PlanePoint& y, const ClassifyParams& params) const {
    return classify_square(to_square(y), params);
}

template <class S>
PushforwardReport pushforward_check(const PlanePipeline<S>& pipe, const SquarePoint<S>& x, long stage_budget,
                                    Side side) {
    const bool fwd = side == Side::omega;
    const SquareMap<S>& f = pipe.square_map();
    const LimitEstimate<S> est = fwd ? estimate_omega(f, x, stage_budget) : estimate_alpha(f, x, stage_budget);

    std::vector<SquarePoint<S>> ends;
    SquarePoint<S> y = pipe.quotient().eval(x);
    Level<S> lift_level = x.y;
    const Direction dir = fwd ? Direction::forward : Direction::backward;
    const Stepper<S> g = pipe.lifted_stepper(y, dir);
    while (static_cast<long>(ends.size()) < est.blocks) {
        y = g(y);
        lift_level = fwd ? lift_level.next() : lift_level.prev();
        const long strip = fwd ? lift_level.strip : lift_level.reflect().strip;
        const long j = stage_of_strip(strip);
        if (j >= 2 && j * j == strip) ends.push_back(y);
    }
    const std::size_t tail = (ends.size() + 3) / 4;
    std::vector<SquarePoint<S>> samples(ends.end() - static_cast<std::ptrdiff_t>(tail), ends.end());

    std::vector<SquarePoint<S>> target;
    const Level<S> edge = fwd ? Level<S>::top() : Level<S>::bottom();
    const int n = 1024;
    for (int i = 0; i <= n; ++i) {
        const S r = est.lo + (est.hi - est.lo) * from_int<S>(i, n);
        target.push_back(pipe.quotient().eval(SquarePoint<S>{r, edge}));
    }
    auto dist_to = [](const SquarePoint<S>& p, const std::vector<SquarePoint<S>>& set) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& q : set) best = std::min(best, point_distance(p, q));
        return best;
    };
    PushforwardReport rep;
    rep.residual = est.residual;
    rep.samples = static_cast<long>(samples.size());
    for (const auto& p : samples) rep.hausdorff = std::max(rep.hausdorff, dist_to(p, target));
    if (!samples.empty())
        for (const auto& t : target) rep.hausdorff = std::max(rep.hausdorff, dist_to(t, samples));
    rep.ok = !samples.empty() && rep.hausdorff <= rep.residual;
    return rep;
}

#define RISING_PLANE(S)                                                                                      \
    template SquareMap<S> build_six_points<S>(long);                                                        \
    template Region six_points_region<S>(const SquarePoint<S>&, double);                                    \
    template class QuotientMap<S>;                                                                          \
    template PlanePoint tangent_eval<S>(const SquarePoint<S>&);                                             \
    template SquarePoint<S> tangent_invert<S>(const PlanePoint&);                                           \
    template class PlanePipeline<S>;                                                                        \
    template PushforwardReport pushforward_check<S>(const PlanePipeline<S>&, const SquarePoint<S>&, long, Side);

RISING_PLANE(double)
RISING_PLANE(Rational)

}  // namespace rising
