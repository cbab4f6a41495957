#include "latpack/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace latpack::oracle {

namespace {

// Advances z through [-b, b]^d in odometer order; false after the last point.
bool next_point(std::vector<std::int64_t>& z, std::int64_t b) {
  for (auto& c : z) {
    if (c < b) {
      ++c;
      return true;
    }
    c = -b;
  }
  return false;
}

std::int64_t root(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// Calls fn(norm) for every nonzero lattice vector with |(z_1..z_n)| in the box.
template <class Fn>
void scan(const std::vector<std::int64_t>& s, std::int64_t b, Fn&& fn) {
  const std::size_t n = s.size() - 1;
  std::vector<std::int64_t> z(n, -b);
  if (n == 0) return;
  do {
    std::int64_t z0 = 0, norm = 0;
    bool zero = true;
    for (std::size_t i = 0; i < n; ++i) {
      z0 -= s[i + 1] * z[i];
      norm += z[i] * z[i];
      zero = zero && z[i] == 0;
    }
    if (zero) continue;
    if (!fn(norm + z0 * z0)) return;
  } while (next_point(z, b));
}

}  // namespace

std::int64_t minimum(const SVector& s) {
  const auto v = s.to_int64();
  if (v.size() < 2) throw std::invalid_argument("oracle::minimum: lattice has dimension 0");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 1; i < v.size(); ++i) best = std::min(best, v[i] * v[i] + 1);
  scan(v, root(best), [&](std::int64_t norm) {
    best = std::min(best, norm);
    return true;
  });
  return best;
}

bool has_vector_below(const SVector& s, std::int64_t mu) {
  const auto v = s.to_int64();
  if (v.size() < 2) return false;
  bool found = false;
  scan(v, root(std::max<std::int64_t>(mu - 1, 0)), [&](std::int64_t norm) {
    found = norm < mu;
    return !found;
  });
  return found;
}

std::int64_t gram_minimum(const std::vector<std::vector<std::int64_t>>& g, int bound) {
  const std::size_t d = g.size();
  std::vector<std::int64_t> x(d, -bound);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  do {
    bool zero = std::all_of(x.begin(), x.end(), [](std::int64_t c) { return c == 0; });
    if (zero) continue;
    std::int64_t q = 0;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) q += x[i] * g[i][j] * x[j];
    }
    best = std::min(best, q);
  } while (next_point(x, bound));
  return best;
}

std::int64_t greedy_extend(const SVector& s, std::int64_t mu) {
  for (std::int64_t t = 1;; ++t) {
    if (!has_vector_below(s.extended(t), mu)) return t;
  }
}

std::vector<std::int64_t> greedy_sequence(std::int64_t mu, int dim) {
  SVector s{1};
  for (int n = 1; n <= dim; ++n) s = s.extended(greedy_extend(s, mu));
  return s.to_int64();
}

std::uint64_t ball_count(int n, std::int64_t max_norm) {
  if (n <= 0) return 1;
  const std::int64_t b = root(std::max<std::int64_t>(max_norm, 0));
  std::vector<std::int64_t> z(n, -b);
  std::uint64_t count = 0;
  do {
    std::int64_t norm = 0;
    for (auto c : z) norm += c * c;
    if (norm <= max_norm) ++count;
  } while (next_point(z, b));
  return count;
}

std::vector<std::int64_t> forbidden_values(const SVector& s, std::int64_t mu) {
  const auto v = s.to_int64();
  std::vector<std::int64_t> out;
  if (mu < 3) return out;
  const std::int64_t b = root(mu - 2);
  std::vector<std::int64_t> z(v.size(), -b);
  do {
    std::int64_t norm = 0, dot = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      norm += z[i] * z[i];
      dot += z[i] * v[i];
    }
    if (norm == 0) continue;
    dot = dot < 0 ? -dot : dot;
    for (std::int64_t k = 1; norm + k * k < mu; ++k) {
      if (dot > 0 && dot % k == 0) out.push_back(dot / k);
    }
  } while (next_point(z, b));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BigInt cofactor_determinant(const std::vector<BigVector>& m) {
  const std::size_t d = m.size();
  if (d == 0) return 1;
  if (d == 1) return m[0][0];
  BigInt det = 0;
  for (std::size_t c = 0; c < d; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<BigVector> minor;
    minor.reserve(d - 1);
    for (std::size_t r = 1; r < d; ++r) {
      BigVector row;
      row.reserve(d - 1);
      for (std::size_t k = 0; k < d; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const BigInt sub = cofactor_determinant(minor);
    det += (c % 2 == 0 ? 1 : -1) * m[0][c] * sub;
  }
  return det;
}

}  // namespace latpack::oracle
