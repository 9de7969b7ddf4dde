#include "rising/limits.hpp"

#include <algorithm>
#include <cmath>

namespace rising {

const char* direction_name(Direction d) { return d == Direction::forward ? "fwd" : "bwd"; }

Direction parse_direction(const std::string& text) {
    if (text == "fwd" || text == "forward") return Direction::forward;
    if (text == "bwd" || text == "backward") return Direction::backward;
    throw Error(ErrorKind::ParseError, "direction must be fwd or bwd, got '" + text + "'");
}

const char* orbit_status_name(OrbitStatus s) { return s == OrbitStatus::completed ? "completed" : "cap-reached"; }
const char* edge_name(Edge e) { return e == Edge::top ? "top" : "bottom"; }

const char* orbit_class_name(OrbitClass c) {
    switch (c) {
        case OrbitClass::interior_limit: return "interior-limit";
        case OrbitClass::top_edge_limit: return "top-edge-limit";
        case OrbitClass::bottom_edge_limit: return "bottom-edge-limit";
        case OrbitClass::fixed: return "fixed";
        case OrbitClass::undetermined: return "undetermined";
    }
    return "undetermined";
}

double residual_bound(long k) { return 12.0 / (2.0 * static_cast<double>(k) + 7.0); }

template <class S>
OrbitRecord<S> orbit(const SquareMap<S>& map, const SquarePoint<S>& start, long steps, Direction direction) {
    if (steps < 0) throw Error(ErrorKind::DomainError, "steps must be non-negative");
    if (start.r < S(-1) || start.r > S(1)) throw Error(ErrorKind::DomainError, "start outside J^2");
    OrbitRecord<S> rec;
    rec.start = start;
    rec.direction = direction;
    rec.points.push_back(start);
    SquarePoint<S> p = start;
    for (long n = 0; n < steps; ++n) {
        try {
            p = direction == Direction::forward ? map.eval(p) : map.eval_inverse(p);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::CapReached) throw;
            rec.status = OrbitStatus::cap_reached;
            break;
        }
        rec.points.push_back(p);
    }
    return rec;
}

namespace {

long perfect_root(long n) {
    if (n < 1) return 0;
    const long k = stage_of_strip(n);
    return k * k == n ? k : 0;
}

template <class S>
void summarize(LimitEstimate<S>& est) {
    est.blocks = static_cast<long>(est.block_ends.size());
    if (est.block_ends.empty()) return;
    const std::size_t tail = (est.block_ends.size() + 3) / 4;
    auto first = est.block_ends.end() - static_cast<std::ptrdiff_t>(tail);
    est.lo = *std::min_element(first, est.block_ends.end());
    est.hi = *std::max_element(first, est.block_ends.end());
    est.samples = static_cast<long>(tail);
    est.residual = residual_bound(est.last_stage);
}

template <class S>
bool degenerate_start(const SquarePoint<S>& start) {
    return start.y.is_edge() || start.r == S(-1) || start.r == S(1);
}

// Iterates `step` and collects the abscissa whenever block_root() of the new
// level reports the end of a stage block.
template <class S, class Step, class Root>
LimitEstimate<S> collect(const SquarePoint<S>& start, long budget, Edge edge, Step step, Root block_root) {
    LimitEstimate<S> est;
    est.edge = edge;
    if (degenerate_start(start)) {
        est.lo = est.hi = start.r;
        if (start.y.kind == Level<S>::Kind::top) est.edge = Edge::top;
        if (start.y.kind == Level<S>::Kind::bottom) est.edge = Edge::bottom;
        est.block_ends.push_back(start.r);
        est.blocks = 0;
        est.samples = 1;
        est.residual = 0.0;
        return est;
    }
    SquarePoint<S> p = start;
    while (static_cast<long>(est.block_ends.size()) < budget) {
        try {
            p = step(p);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::CapReached) throw;
            est.status = OrbitStatus::cap_reached;
            break;
        }
        const long j = block_root(p.y);
        if (j >= 2) {
            est.block_ends.push_back(p.r);
            est.last_stage = j - 1;
        }
    }
    summarize(est);
    return est;
}

}  // namespace

template <class S>
LimitEstimate<S> estimate_omega(const SquareMap<S>& map, const SquarePoint<S>& start, long stage_budget) {
    if (stage_budget < 1) throw Error(ErrorKind::DomainError, "stage budget must be positive");
    return collect<S>(start, stage_budget, Edge::top, [&](const SquarePoint<S>& p) { return map.eval(p); },
                      [](const Level<S>& y) { return y.is_edge() ? 0L : perfect_root(y.strip); });
}

template <class S>
LimitEstimate<S> estimate_alpha(const SquareMap<S>& map, const SquarePoint<S>& start, long stage_budget) {
    LimitEstimate<S> est = estimate_omega(map.reflected(), reflect_v(start), stage_budget);
    if (start.y.kind == Level<S>::Kind::top)
        est.edge = Edge::top;
    else
        est.edge = Edge::bottom;
    return est;
}

template <class S>
LimitEstimate<S> estimate_alpha_direct(const SquareMap<S>& map, const SquarePoint<S>& start, long stage_budget) {
    if (stage_budget < 1) throw Error(ErrorKind::DomainError, "stage budget must be positive");
    return collect<S>(start, stage_budget, Edge::bottom, [&](const SquarePoint<S>& p) { return map.eval_inverse(p); },
                      [](const Level<S>& y) { return y.is_edge() ? 0L : perfect_root(y.reflect().strip); });
}

template <class S>
double top_gap(const Level<S>& y) {
    switch (y.kind) {
        case Level<S>::Kind::top: return 0.0;
        case Level<S>::Kind::bottom: return 2.0;
        case Level<S>::Kind::interior: break;
    }
    if (y.strip >= 1) return to_double(y.gap());
    return 1.0 - to_double(y.ordinate());
}

template <class S>
double bottom_gap(const Level<S>& y) {
    switch (y.kind) {
        case Level<S>::Kind::top: return 2.0;
        case Level<S>::Kind::bottom: return 0.0;
        case Level<S>::Kind::interior: break;
    }
    if (y.strip <= 0) return to_double(y.gap());
    return 1.0 + to_double(y.ordinate());
}

template <class S>
double point_distance(const SquarePoint<S>& a, const SquarePoint<S>& b) {
    const double dr = std::fabs(to_double(a.r) - to_double(b.r));
    double ds;
    if (a.y.upper_half() && b.y.upper_half())
        ds = std::fabs(top_gap(a.y) - top_gap(b.y));
    else
        ds = std::fabs(bottom_gap(a.y) - bottom_gap(b.y));
    return std::max(dr, ds);
}

template <class S>
Classification<S> classify_orbit(const Stepper<S>& step, const SquarePoint<S>& start, const ClassifyParams& params) {
    Classification<S> out;
    out.limit = start;
    SquarePoint<S> p = start;
    SquarePoint<S> q;
    try {
        q = step(p);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::CapReached) throw;
        return out;
    }
    if (q == p) {
        out.kind = OrbitClass::fixed;
        return out;
    }
    long still = 0;    // consecutive steps below delta_cauchy
    long rising = 0;   // consecutive steps towards the top edge
    long falling = 0;
    for (long n = 1; n <= params.max_steps; ++n) {
        const double d = point_distance(p, q);
        still = d < params.delta_cauchy ? still + 1 : 0;
        const double gt0 = top_gap(p.y), gt1 = top_gap(q.y);
        const double gb0 = bottom_gap(p.y), gb1 = bottom_gap(q.y);
        rising = gt1 < gt0 ? rising + 1 : 0;
        falling = gb1 < gb0 ? falling + 1 : 0;
        out.steps = n;
        out.limit = q;
        if (gt1 < params.delta_edge && rising >= params.window) {
            out.kind = OrbitClass::top_edge_limit;
            return out;
        }
        if (gb1 < params.delta_edge && falling >= params.window) {
            out.kind = OrbitClass::bottom_edge_limit;
            return out;
        }
        if (still >= params.window && gt1 > params.delta_edge && gb1 > params.delta_edge) {
            out.kind = OrbitClass::interior_limit;
            return out;
        }
        p = q;
        try {
            q = step(p);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::CapReached) throw;
            break;
        }
    }
    out.kind = OrbitClass::undetermined;
    return out;
}

template <class S>
Classification<S> classify_square_orbit(const SquareMap<S>& map, const SquarePoint<S>& start, Direction direction,
                                        const ClassifyParams& params) {
    Stepper<S> step;
    if (direction == Direction::forward)
        step = [&map](const SquarePoint<S>& p) { return map.eval(p); };
    else
        step = [&map](const SquarePoint<S>& p) { return map.eval_inverse(p); };
    return classify_orbit(step, start, params);
}

#define RISING_LIMITS(S)                                                                                   \
    template OrbitRecord<S> orbit<S>(const SquareMap<S>&, const SquarePoint<S>&, long, Direction);        \
    template LimitEstimate<S> estimate_omega<S>(const SquareMap<S>&, const SquarePoint<S>&, long);        \
    template LimitEstimate<S> estimate_alpha<S>(const SquareMap<S>&, const SquarePoint<S>&, long);        \
    template LimitEstimate<S> estimate_alpha_direct<S>(const SquareMap<S>&, const SquarePoint<S>&, long); \
    template double top_gap<S>(const Level<S>&);                                                          \
    template double bottom_gap<S>(const Level<S>&);                                                       \
    template double point_distance<S>(const SquarePoint<S>&, const SquarePoint<S>&);                      \
    template Classification<S> classify_orbit<S>(const Stepper<S>&, const SquarePoint<S>&, const ClassifyParams&); \
    template Classification<S> classify_square_orbit<S>(const SquareMap<S>&, const SquarePoint<S>&, Direction,     \
                                                        const ClassifyParams&);

RISING_LIMITS(double)
RISING_LIMITS(Rational)

}  // namespace rising
