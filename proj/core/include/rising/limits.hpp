#pragma once

#include "rising/square_map.hpp"

#include <functional>
#include <string>

namespace rising {

enum class Direction { forward, backward };
enum class OrbitStatus { completed, cap_reached };

const char* direction_name(Direction d);
Direction parse_direction(const std::string& text);
const char* orbit_status_name(OrbitStatus s);

template <class S>
struct OrbitRecord {
    SquarePoint<S> start;
    Direction direction = Direction::forward;
    std::vector<SquarePoint<S>> points;  ///< points[0] is the start
    OrbitStatus status = OrbitStatus::completed;
};

template <class S>
OrbitRecord<S> orbit(const SquareMap<S>& map, const SquarePoint<S>& start, long steps, Direction direction);

enum class Edge { top, bottom };
const char* edge_name(Edge e);

template <class S>
struct LimitEstimate {
    Edge edge = Edge::top;
    S lo{};
    S hi{};
    double residual = 0.0;   ///< 12 / (2 k_last + 7)
    long samples = 0;        ///< block ends used for [lo, hi]
    long blocks = 0;         ///< block ends collected
    long last_stage = 0;
    OrbitStatus status = OrbitStatus::completed;
    std::vector<S> block_ends;
};

template <class S>
LimitEstimate<S> estimate_omega(const SquareMap<S>& map, const SquarePoint<S>& start, long stage_budget = 30);
template <class S>
LimitEstimate<S> estimate_alpha(const SquareMap<S>& map, const SquarePoint<S>& start, long stage_budget = 30);
/// Backward iteration of `map` itself, reading block ends at the mirrored
/// strips 1 - j^2. Agrees with estimate_alpha.
template <class S>
LimitEstimate<S> estimate_alpha_direct(const SquareMap<S>& map, const SquarePoint<S>& start, long stage_budget = 30);

double residual_bound(long k);

enum class OrbitClass { interior_limit, top_edge_limit, bottom_edge_limit, fixed, undetermined };
const char* orbit_class_name(OrbitClass c);

struct ClassifyParams {
    double delta_edge = 1e-3;
    double delta_cauchy = 1e-4;
    long window = 200;
    long max_steps = 6000;
};

template <class S>
struct Classification {
    OrbitClass kind = OrbitClass::undetermined;
    SquarePoint<S> limit;
    long steps = 0;
};

template <class S>
using Stepper = std::function<SquarePoint<S>(const SquarePoint<S>&)>;

/// Distance from the top edge, 1 - s, kept accurate near the top.
template <class S>
double top_gap(const Level<S>& y);
/// s + 1, kept accurate near the bottom.
template <class S>
double bottom_gap(const Level<S>& y);
template <class S>
double point_distance(const SquarePoint<S>& a, const SquarePoint<S>& b);

template <class S>
Classification<S> classify_orbit(const Stepper<S>& step, const SquarePoint<S>& start, const ClassifyParams& params = {});

template <class S>
Classification<S> classify_square_orbit(const SquareMap<S>& map, const SquarePoint<S>& start, Direction direction,
                                        const ClassifyParams& params = {});

}  // namespace rising
