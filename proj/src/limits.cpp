#include "pdiff/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "pdiff/error.hpp"

namespace pdiff {

namespace {

template <typename T>
void override_from(const char* name, T& target) {
  const char* raw = std::getenv(name);
  if (raw == nullptr) return;
  const std::string_view text(raw);
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value <= 0) {
    throw Error(ErrorCode::InvalidArgument, std::string(name) + "='" + std::string(text) + "' is not a positive integer");
  }
  target = value;
}

}  // namespace

Limits Limits::from_environment() {
  Limits limits;
  override_from("PDIFF_ENUM_MAX_N", limits.enumeration_max_n);
  override_from("PDIFF_ORACLE_MAX_CANDIDATES", limits.oracle_max_candidates);
  override_from("PDIFF_BRIDGE_MAX_VERTICES", limits.bridge_max_vertices);
  override_from("PDIFF_BRIDGE_MAX_WINDOW", limits.bridge_max_window);
  return limits;
}

}  // namespace pdiff
