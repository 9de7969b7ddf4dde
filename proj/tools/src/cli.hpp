#pragma once

#include "rising/config.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace cli {

using json = nlohmann::ordered_json;

struct Options {
    std::string config;
    std::string mode;
    std::string out;
    std::string map;
    std::vector<std::string> square_points;
    std::vector<std::string> plane_points;
    std::string direction = "fwd";
    bool direction_set = false;
    std::string figure = "square";
    long steps = 20;
    long budget = -1;
    unsigned jobs = 0;
};

/// Config from --config (or the bundled six-points data), with --mode and
/// RISING_ORBITS_MAX_STAGE applied.
rising::Config load(const Options& opt);

int cmd_build(const Options& opt);
int cmd_orbit(const Options& opt);
int cmd_limits(const Options& opt);
int cmd_classify(const Options& opt);
int cmd_verify(const Options& opt);
int cmd_render(const Options& opt);

/// Writes to --out, or stdout when it is empty.
void emit(const Options& opt, const std::string& text);

/// Decimal text with -0 printed as 0.
std::string fmt(double x);
std::string fmt(const rising::Rational& q);

template <class S>
json scalar(const S& x) {
    if constexpr (rising::is_exact_v<S>)
        return fmt(x);
    else
        return x == 0.0 ? 0.0 : x;
}

template <class S>
json point_json(const rising::SquarePoint<S>& p) {
    json j;
    j["r"] = scalar(p.r);
    if (p.y.kind == rising::Level<S>::Kind::top)
        j["s"] = 1;
    else if (p.y.kind == rising::Level<S>::Kind::bottom)
        j["s"] = -1;
    else
        j["s"] = scalar(p.y.ordinate());
    if (p.y.is_edge())
        j["strip"] = p.y.kind == rising::Level<S>::Kind::top ? "inf" : "-inf";
    else
        j["strip"] = p.y.strip;
    return j;
}

template <class S>
rising::SquarePoint<S> parse_square_point(const std::string& text);
rising::PlanePoint parse_plane_point(const std::string& text);

}  // namespace cli
