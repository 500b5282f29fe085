#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace hexdist {

// The ten random-distance configurations the library models. D1..D8 are the
// rhombus-pair cases (within one rhombus, across rhombi of one hexagon, and
// across rhombi of two hexagons); HexInterior and HexAdjacent are the two
// hexagon-level laws obtained from them by probabilistic mixing.
enum class DistanceKind {
  D1,
  D2,
  D3,
  D4,
  D5,
  D6,
  D7,
  D8,
  HexInterior,
  HexAdjacent,
};

inline constexpr std::array<DistanceKind, 10> kAllKinds = {
    DistanceKind::D1, DistanceKind::D2, DistanceKind::D3, DistanceKind::D4,
    DistanceKind::D5, DistanceKind::D6, DistanceKind::D7, DistanceKind::D8,
    DistanceKind::HexInterior, DistanceKind::HexAdjacent};

constexpr std::size_t ordinal(DistanceKind kind) {
  return static_cast<std::size_t>(kind);
}

// Canonical lowercase name: "d1".."d8", "hex-interior", "hex-adjacent".
std::string_view to_string(DistanceKind kind);

// Case-insensitive parse of a canonical name.
std::optional<DistanceKind> parse_distance_kind(std::string_view name);

// Comma-separated list of the valid names, for error messages.
std::string valid_kind_names();

}  // namespace hexdist
