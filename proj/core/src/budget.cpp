#include "kegraph/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace kegraph {

Budget Budget::from_environment() {
  Budget b;
  const char* raw = std::getenv("KEGRAPH_BUDGET");
  if (raw == nullptr) return b;
  std::uint64_t value = 0;
  const char* end = raw + std::strlen(raw);
  const auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec == std::errc() && ptr == end && value > 0) b.max_nodes = value;
  return b;
}

}  // namespace kegraph
