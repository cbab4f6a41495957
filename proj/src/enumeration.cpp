#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "latpack/errors.hpp"
#include "latpack/lattice.hpp"
#include "latpack/numth.hpp"

namespace latpack {

namespace {

struct Gso {
  int n = 0;
  std::vector<std::vector<long double>> mu;
  std::vector<long double> b;
};

Gso gso_from_gram(const GramMatrix& g) {
  Gso s;
  s.n = g.dim();
  s.mu.assign(s.n, std::vector<long double>(s.n, 0));
  s.b.assign(s.n, 0);
  for (int i = 0; i < s.n; ++i) {
    for (int j = 0; j < i; ++j) {
      long double v = g(i, j).convert_to<long double>();
      for (int k = 0; k < j; ++k) v -= s.mu[j][k] * s.mu[i][k] * s.b[k];
      s.mu[i][j] = v / s.b[j];
    }
    long double v = g(i, i).convert_to<long double>();
    for (int k = 0; k < i; ++k) v -= s.mu[i][k] * s.mu[i][k] * s.b[k];
    if (!(v > 0)) throw std::domain_error("shortest_vector: Gram-Schmidt degenerated");
    s.b[i] = v;
  }
  return s;
}

// Gaussian-heuristic estimate of the number of tree nodes for radius^2 = r.
double log_node_estimate(const Gso& s, long double r) {
  double best = -std::numeric_limits<double>::infinity();
  double log_prod = 0;
  double total = 0;
  for (int k = 1; k <= s.n; ++k) {
    log_prod += 0.5 * std::log(static_cast<double>(s.b[s.n - k]));
    const double lv = numth::log_ball_volume(k) + 0.5 * k * std::log(static_cast<double>(r)) - log_prod;
    best = std::max(best, lv);
    total += std::exp(std::min(lv, 700.0));
  }
  return std::max(best, std::log(std::max(total, 1.0)));
}

BigInt exact_norm(const GramMatrix& g, const std::vector<std::int64_t>& x) {
  BigInt acc = 0;
  const int n = g.dim();
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    BigInt row = 0;
    for (int j = 0; j < n; ++j)
      if (x[j] != 0) row += g(i, j) * x[j];
    acc += row * x[i];
  }
  return acc;
}

class Enumerator {
 public:
  Enumerator(const GramMatrix& g, const Gso& s, BigInt radius, double budget)
      : g_(g), s_(s), radius_(std::move(radius)), budget_(budget), x_(s.n, 0), partial_(s.n + 1, 0) {
    set_float_radius();
  }

  void run() { descend(s_.n - 1, false); }

  bool found() const { return found_; }
  const BigInt& best() const { return radius_; }
  const std::vector<std::vector<std::int64_t>>& ties() const { return ties_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void set_float_radius() {
    const long double r = radius_.convert_to<long double>();
    radius_f_ = r * (1 + 1e-12L) + 1e-9L;
  }

  void descend(int level, bool free) {
    long double center = 0;
    for (int j = level + 1; j < s_.n; ++j) center -= s_.mu[j][level] * static_cast<long double>(x_[j]);
    const long double room = radius_f_ - partial_[level + 1];
    if (room < 0) return;
    const long double w = std::sqrt(room / s_.b[level]);
    auto lo = static_cast<std::int64_t>(std::ceil(center - w));
    const auto hi = static_cast<std::int64_t>(std::floor(center + w));
    if (!free) lo = std::max<std::int64_t>(lo, 0);
    for (std::int64_t v = lo; v <= hi; ++v) {
      if (++nodes_ > budget_) {
        throw ResourceError("shortest_vector: enumeration exceeded node budget");
      }
      const long double diff = static_cast<long double>(v) - center;
      const long double p = partial_[level + 1] + diff * diff * s_.b[level];
      if (p > radius_f_) continue;
      x_[level] = v;
      partial_[level] = p;
      const bool next_free = free || v != 0;
      if (level > 0) {
        descend(level - 1, next_free);
      } else if (next_free) {
        leaf();
      }
    }
    x_[level] = 0;
  }

  void leaf() {
    BigInt norm = exact_norm(g_, x_);
    if (norm > radius_) return;
    if (!found_ || norm < radius_) {
      found_ = true;
      radius_ = std::move(norm);
      ties_.clear();
      set_float_radius();
    }
    ties_.push_back(x_);
  }

  const GramMatrix& g_;
  const Gso& s_;
  BigInt radius_;
  double budget_;
  std::vector<std::int64_t> x_;
  std::vector<long double> partial_;
  long double radius_f_ = 0;
  bool found_ = false;
  std::vector<std::vector<std::int64_t>> ties_;
  std::uint64_t nodes_ = 0;
};

// Enumerates on an LLL-reduced Gram matrix. `to_output` maps reduced-basis
// coefficients to (coordinates used for the tie-break, coefficients in the
// caller's basis).
using OutputMap = std::function<std::pair<BigVector, BigVector>(const std::vector<std::int64_t>&)>;

ShortestVector enumerate_minimum(const GramMatrix& reduced, const EnumerationOptions& options,
                                 const OutputMap& to_output) {
  const int n = reduced.dim();
  if (n == 0) throw std::invalid_argument("shortest_vector: empty basis");
  const Gso s = gso_from_gram(reduced);

  BigInt diag_min = reduced(0, 0);
  for (int i = 1; i < n; ++i) diag_min = std::min(diag_min, reduced(i, i));

  ShortestVector result;
  BigInt radius = diag_min;
  if (options.upper) {
    if (*options.upper <= diag_min) {
      radius = *options.upper - 1;
      if (radius < 1) {
        result.minimum = *options.upper;
        result.at_least_upper = true;
        return result;
      }
    }
  }
  if (log_node_estimate(s, radius.convert_to<long double>()) > std::log(options.node_budget)) {
    throw ResourceError("shortest_vector: estimated enumeration tree exceeds node budget");
  }

  Enumerator e(reduced, s, radius, options.node_budget);
  e.run();
  result.nodes = e.nodes();
  if (!e.found()) {
    result.minimum = *options.upper;
    result.at_least_upper = true;
    return result;
  }
  result.minimum = e.best();
  bool have = false;
  for (const auto& x : e.ties()) {
    auto [coords, coeffs] = to_output(x);
    auto first = std::find_if(coords.begin(), coords.end(), [](const BigInt& v) { return v != 0; });
    if (first != coords.end() && *first < 0) {
      for (auto& v : coords) v = -v;
      for (auto& v : coeffs) v = -v;
    }
    if (!have || std::lexicographical_compare(result.witness.begin(), result.witness.end(),
                                              coords.begin(), coords.end())) {
      result.witness = std::move(coords);
      result.coefficients = std::move(coeffs);
      have = true;
    }
  }
  return result;
}

BigVector combine(const std::vector<BigVector>& transform, const std::vector<std::int64_t>& x) {
  const std::size_t n = transform.size();
  BigVector c(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] != 0)
      for (std::size_t j = 0; j < n; ++j) c[j] += transform[i][j] * x[i];
  return c;
}

}  // namespace

ShortestVector shortest_vector(const IntegerBasis& basis, const EnumerationOptions& options) {
  const auto red = lll_reduce(gram(basis));
  const auto m = static_cast<std::size_t>(basis.ambient_dim());
  return enumerate_minimum(red.gram, options, [&](const std::vector<std::int64_t>& x) {
    BigVector coeffs = combine(red.transform, x);
    BigVector ambient(m, 0);
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      if (coeffs[j] != 0)
        for (std::size_t c = 0; c < m; ++c) ambient[c] += coeffs[j] * basis.rows[j][c];
    return std::make_pair(std::move(ambient), std::move(coeffs));
  });
}

ShortestVector shortest_vector(const GramMatrix& g, const EnumerationOptions& options) {
  const auto red = lll_reduce(g);
  return enumerate_minimum(red.gram, options, [&](const std::vector<std::int64_t>& x) {
    BigVector coeffs = combine(red.transform, x);
    return std::make_pair(coeffs, coeffs);
  });
}

}  // namespace latpack
