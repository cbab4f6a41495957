#include "latpack/ball.hpp"

namespace latpack::ball {

std::uint64_t count_points(int n, std::int64_t max_norm) {
  std::uint64_t count = 0;
  for_each_point(n, max_norm, [&](std::span<const int>, std::int64_t) { ++count; });
  return count;
}

}  // namespace latpack::ball
