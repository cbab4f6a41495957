#include "latpack/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "latpack/numth.hpp"

namespace latpack {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Nearest integer to a / b for b > 0, halves rounded up.
BigInt round_div(const BigInt& a, const BigInt& b) { return floor_div(2 * a + b, 2 * b); }

}  // namespace

SVector::SVector(BigVector entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("SVector: need at least s_0");
  if (entries_.front() != 1) throw std::invalid_argument("SVector: s_0 must equal 1");
  for (const auto& e : entries_) {
    if (e <= 0) throw std::invalid_argument("SVector: entries must be positive");
  }
}

SVector::SVector(std::initializer_list<long long> entries)
    : SVector(BigVector(entries.begin(), entries.end())) {}

SVector SVector::prefix(int m) const {
  if (m < 0 || m > dim()) throw std::out_of_range("SVector::prefix: m outside [0, n]");
  return SVector(BigVector(entries_.begin(), entries_.begin() + m + 1));
}

SVector SVector::extended(const BigInt& next) const {
  BigVector e = entries_;
  e.push_back(next);
  return SVector(std::move(e));
}

SVector SVector::without(std::size_t i) const {
  if (i == 0 || i >= entries_.size()) throw std::out_of_range("SVector::without: index");
  BigVector e = entries_;
  e.erase(e.begin() + static_cast<std::ptrdiff_t>(i));
  return SVector(std::move(e));
}

std::vector<std::int64_t> SVector::to_int64() const {
  std::vector<std::int64_t> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) {
    if (!fits_int64(e)) throw std::overflow_error("SVector: entry exceeds 64 bits");
    out.push_back(e.convert_to<std::int64_t>());
  }
  return out;
}

GramMatrix GramMatrix::from_ints(const std::vector<std::vector<long long>>& rows) {
  GramMatrix g;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw std::invalid_argument("GramMatrix: not square");
    g.entries.emplace_back(r.begin(), r.end());
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (g.entries[i][j] != g.entries[j][i]) throw std::invalid_argument("GramMatrix: not symmetric");
  return g;
}

GramMatrix gram(const IntegerBasis& basis) {
  const auto r = static_cast<std::size_t>(basis.rank());
  GramMatrix g;
  g.entries.assign(r, BigVector(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      g.entries[i][j] = dot(basis.rows[i], basis.rows[j]);
      g.entries[j][i] = g.entries[i][j];
    }
  }
  return g;
}

BigInt determinant(const std::vector<BigVector>& square) {
  const std::size_t n = square.size();
  if (n == 0) return 1;
  auto m = square;
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: not square");
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

BigInt determinant(const GramMatrix& g) { return determinant(g.entries); }

bool is_positive_definite(const GramMatrix& g) {
  for (int k = 1; k <= g.dim(); ++k) {
    std::vector<BigVector> minor(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) minor[i].assign(g.entries[i].begin(), g.entries[i].begin() + k);
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

IntegerBasis basis_from_s(const SVector& s) {
  const int n = s.dim();
  IntegerBasis b;
  b.rows.assign(static_cast<std::size_t>(n), BigVector(static_cast<std::size_t>(n + 1), 0));
  for (int i = 1; i <= n; ++i) {
    b.rows[i - 1][0] = s[i];
    b.rows[i - 1][i] = -1;
  }
  return b;
}

BigInt determinant(const SVector& s) {
  BigInt acc = 0;
  for (const auto& e : s.entries()) acc += e * e;
  return acc;
}

LllResult lll_reduce(const GramMatrix& input, const LllParams& params) {
  const int n = input.dim();
  if (params.delta_denominator <= 0 || params.delta_numerator <= params.delta_denominator / 4 ||
      params.delta_numerator >= params.delta_denominator) {
    throw std::invalid_argument("lll_reduce: delta must lie in (1/4, 1)");
  }
  LllResult out;
  out.gram = input;
  out.transform.assign(static_cast<std::size_t>(n), BigVector(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) out.transform[i][i] = 1;
  if (n == 0) return out;

  auto& G = out.gram.entries;
  auto& H = out.transform;
  // 1-based Gram-Schmidt data: d[0] = 1, d[i] = det of the leading i x i Gram block.
  std::vector<BigInt> d(static_cast<std::size_t>(n + 1), 0);
  std::vector<BigVector> lam(static_cast<std::size_t>(n + 1), BigVector(static_cast<std::size_t>(n + 1), 0));
  const BigInt num = params.delta_numerator;
  const BigInt den = params.delta_denominator;

  auto g = [&](int i, int j) -> BigInt& { return G[i - 1][j - 1]; };

  auto reduce = [&](int k, int l) {
    if (2 * abs(lam[k][l]) <= d[l]) return;
    const BigInt q = round_div(lam[k][l], d[l]);
    // b_k <- b_k - q b_l
    const BigInt old_kl = g(k, l);
    const BigInt old_kk = g(k, k);
    for (int j = 1; j <= n; ++j) {
      if (j == k) continue;
      g(k, j) -= q * g(l, j);
      g(j, k) = g(k, j);
    }
    g(k, k) = old_kk - 2 * q * old_kl + q * q * g(l, l);
    for (int j = 0; j < n; ++j) H[k - 1][j] -= q * H[l - 1][j];
    lam[k][l] -= q * d[l];
    for (int i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };

  auto swap = [&](int k, int kmax) {
    std::swap(G[k - 1], G[k - 2]);
    for (auto& row : G) std::swap(row[k - 1], row[k - 2]);
    std::swap(H[k - 1], H[k - 2]);
    for (int j = 1; j <= k - 2; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    const BigInt l = lam[k][k - 1];
    const BigInt b = (d[k - 2] * d[k] + l * l) / d[k - 1];
    for (int i = k + 1; i <= kmax; ++i) {
      const BigInt t = lam[i][k];
      lam[i][k] = (d[k] * lam[i][k - 1] - l * t) / d[k - 1];
      lam[i][k - 1] = (b * t + l * lam[i][k]) / d[k];
    }
    d[k - 1] = b;
    ++out.swaps;
  };

  d[0] = 1;
  d[1] = g(1, 1);
  if (d[1] <= 0) throw std::domain_error("lll_reduce: zero or non-positive first vector");
  int k = 2;
  int kmax = 1;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (int j = 1; j <= k; ++j) {
        BigInt u = g(k, j);
        for (int i = 1; i < j; ++i) u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
        if (j < k) {
          lam[k][j] = u;
        } else {
          if (u <= 0) throw std::domain_error("lll_reduce: rows are linearly dependent");
          d[k] = u;
        }
      }
    }
    reduce(k, k - 1);
    if (den * d[k] * d[k - 2] < num * d[k - 1] * d[k - 1] - den * lam[k][k - 1] * lam[k][k - 1]) {
      swap(k, kmax);
      k = std::max(2, k - 1);
    } else {
      for (int l = k - 2; l >= 1; --l) reduce(k, l);
      ++k;
    }
  }
  return out;
}

LllBasisResult lll_reduce(const IntegerBasis& basis, const LllParams& params) {
  const auto res = lll_reduce(gram(basis), params);
  LllBasisResult out;
  out.transform = res.transform;
  const auto r = static_cast<std::size_t>(basis.rank());
  const auto m = static_cast<std::size_t>(basis.ambient_dim());
  out.basis.rows.assign(r, BigVector(m, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (res.transform[i][j] != 0)
        for (std::size_t c = 0; c < m; ++c) out.basis.rows[i][c] += res.transform[i][j] * basis.rows[j][c];
  return out;
}

bool is_lll_reduced(const GramMatrix& g, double delta, double eps) {
  const int n = g.dim();
  std::vector<std::vector<long double>> mu(n, std::vector<long double>(n, 0));
  std::vector<long double> b(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      long double v = g(i, j).convert_to<long double>();
      for (int k = 0; k < j; ++k) v -= mu[j][k] * mu[i][k] * b[k];
      mu[i][j] = v / b[j];
    }
    long double v = g(i, i).convert_to<long double>();
    for (int k = 0; k < i; ++k) v -= mu[i][k] * mu[i][k] * b[k];
    b[i] = v;
    if (b[i] <= 0) return false;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (std::fabs(static_cast<double>(mu[i][j])) > 0.5 + eps) return false;
  for (int i = 1; i < n; ++i) {
    const long double rhs = (delta - mu[i][i - 1] * mu[i][i - 1]) * b[i - 1];
    if (b[i] < rhs * (1 - eps)) return false;
  }
  return true;
}

bool has_minimum_at_least(const SVector& s, const BigInt& mu, const EnumerationOptions& options) {
  EnumerationOptions opts = options;
  opts.upper = mu;
  return shortest_vector(basis_from_s(s), opts).at_least_upper;
}

DensityReport density_report(int dim, const BigInt& minimum, const BigInt& det) {
  if (dim < 1 || minimum <= 0 || det <= 0) throw std::invalid_argument("density_report: invalid data");
  DensityReport r;
  r.dim = dim;
  r.minimum = minimum;
  r.determinant = det;
  const double n = dim;
  r.log_center_density = 0.5 * n * log_big(minimum) - n * std::log(2.0) - 0.5 * log_big(det);
  r.center_density = std::exp(r.log_center_density);
  r.density = std::exp(r.log_center_density + numth::log_ball_volume(dim));
  r.hermite = 4.0 * std::exp(2.0 / n * r.log_center_density);
  return r;
}

DensityReport density_report(const SVector& s, const EnumerationOptions& options) {
  EnumerationOptions opts = options;
  opts.upper.reset();
  const auto sv = shortest_vector(basis_from_s(s), opts);
  return density_report(s.dim(), sv.minimum, determinant(s));
}

}  // namespace latpack
