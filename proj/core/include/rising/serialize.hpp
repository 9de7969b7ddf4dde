#pragma once

#include "rising/config.hpp"

namespace rising {

inline constexpr int kMapFormatVersion = 1;

/// Writes the header (format, version, mode, stage), the configuration and
/// both band stacks.
template <class S>
std::string serialize_map(const SquareMap<S>& map, const Config& config);

/// Rebuilds the map from the embedded configuration and installs the stored
/// stages without recomputing them. Throws ParseError or ValidationError.
template <class S>
SquareMap<S> deserialize_map(const std::string& text, Config* config_out = nullptr);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace rising
