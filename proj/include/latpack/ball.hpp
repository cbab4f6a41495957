#pragma once

// Integer points of Z^n inside a centered ball, by depth-first coordinate
// recursion with radius pruning. The parallel kernels split the first
// coordinate across OpenMP threads and concatenate per-slab results in slab
// order, so their output is identical to the serial reference.

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace latpack::ball {

/// Largest r with r*r <= v, for v >= 0.
inline std::int64_t isqrt(std::int64_t v) {
  if (v <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

namespace detail {

template <class Fn>
void recurse(std::vector<int>& z, int depth, std::int64_t used, std::int64_t max_norm, Fn& fn) {
  const int n = static_cast<int>(z.size());
  if (depth == n) {
    fn(std::span<const int>(z), used);
    return;
  }
  const auto r = isqrt(max_norm - used);
  for (std::int64_t v = -r; v <= r; ++v) {
    z[depth] = static_cast<int>(v);
    recurse(z, depth + 1, used + v * v, max_norm, fn);
  }
  z[depth] = 0;
}

}  // namespace detail

/// Visits every z in Z^n with |z|^2 <= max_norm (including 0) in lexicographic
/// order. fn(std::span<const int> z, std::int64_t norm).
template <class Fn>
void for_each_point(int n, std::int64_t max_norm, Fn&& fn) {
  if (n <= 0 || max_norm < 0) return;
  std::vector<int> z(static_cast<std::size_t>(n), 0);
  detail::recurse(z, 0, 0, max_norm, fn);
}

/// Serial reference: keeps fn(z, norm) results that hold a value, in visiting order.
template <class T, class Fn>
std::vector<T> collect_serial(int n, std::int64_t max_norm, Fn&& fn) {
  std::vector<T> out;
  for_each_point(n, max_norm, [&](std::span<const int> z, std::int64_t norm) {
    if (std::optional<T> v = fn(z, norm)) out.push_back(std::move(*v));
  });
  return out;
}

/// OpenMP kernel with output identical to collect_serial.
template <class T, class Fn>
std::vector<T> collect_parallel(int n, std::int64_t max_norm, Fn&& fn) {
  if (n <= 0 || max_norm < 0) return {};
  const auto r = isqrt(max_norm);
  const auto slabs = static_cast<std::int64_t>(2 * r + 1);
  std::vector<std::vector<T>> parts(static_cast<std::size_t>(slabs));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < slabs; ++i) {
    const std::int64_t first = i - r;
    std::vector<int> z(static_cast<std::size_t>(n), 0);
    z[0] = static_cast<int>(first);
    auto& part = parts[static_cast<std::size_t>(i)];
    auto visit = [&](std::span<const int> p, std::int64_t norm) {
      if (std::optional<T> v = fn(p, norm)) part.push_back(std::move(*v));
    };
    detail::recurse(z, 1, first * first, max_norm, visit);
  }
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  std::vector<T> out;
  out.reserve(total);
  for (auto& p : parts) {
    for (auto& v : p) out.push_back(std::move(v));
  }
  return out;
}

/// Exact number of z in Z^n with |z|^2 <= max_norm, counted by the kernel.
std::uint64_t count_points(int n, std::int64_t max_norm);

}  // namespace latpack::ball
