#pragma once

#include "rising/plane.hpp"

#include <map>
#include <string>

namespace rising {

struct EstimationParams {
    long stage_budget = 30;
    double delta_edge = 1e-3;
    double delta_cauchy = 1e-4;
    long window = 200;
    long max_steps = 6000;

    ClassifyParams classify() const { return ClassifyParams{delta_edge, delta_cauchy, window, max_steps}; }
};

struct Config {
    Mode mode = Mode::floating;
    long max_stage = 64;
    std::map<std::string, LimitProfile> profiles;
    IntervalFamily omega;
    IntervalFamily alpha;
    FamilyReport families;  ///< validated and normalized
    DiskSpec disk = DiskSpec::unit_disk();
    EstimationParams estimation;
    std::string output_dir = ".";
    std::string text;  ///< canonical JSON of the parsed configuration
};

/// Throws ParseError (malformed JSON or schema mismatch, with line or field)
/// and ValidationError (profile or family errors).
Config load_config(const std::string& path);
Config parse_config(const std::string& text, const std::string& source = "<config>");

/// The six-points configuration in the config schema.
std::string six_points_config_text();

}  // namespace rising
