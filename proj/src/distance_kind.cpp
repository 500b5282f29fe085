#include "hexdist/distance_kind.hpp"

#include <algorithm>
#include <cctype>

namespace hexdist {

namespace {
constexpr std::array<std::string_view, 10> kNames = {
    "d1", "d2", "d3", "d4", "d5", "d6", "d7", "d8",
    "hex-interior", "hex-adjacent"};
}  // namespace

std::string_view to_string(DistanceKind kind) { return kNames[ordinal(kind)]; }

std::optional<DistanceKind> parse_distance_kind(std::string_view name) {
  std::string lowered(name);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (lowered == kNames[i]) return kAllKinds[i];
  }
  return std::nullopt;
}

std::string valid_kind_names() {
  std::string out;
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (i != 0) out += ", ";
    out += kNames[i];
  }
  return out;
}

}  // namespace hexdist
