#include "latpack/approx.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "latpack/numth.hpp"

namespace latpack::approx {

TargetGram TargetGram::from_matrix(const Eigen::MatrixXd& g) {
  if (g.rows() == 0 || g.rows() != g.cols()) throw std::invalid_argument("gram: matrix must be square and nonempty");
  if (!g.allFinite()) throw std::invalid_argument("gram: entries must be finite");
  if ((g - g.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, g.cwiseAbs().maxCoeff())) {
    throw std::invalid_argument("gram: matrix must be symmetric");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  if (llt.info() != Eigen::Success) throw std::invalid_argument("gram: matrix is not positive definite");
  return {g, llt.matrixL()};
}

TargetGram parse_gram_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("gram: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("gram")) {
    throw std::invalid_argument("gram: expected {\"n\": int, \"gram\": [[...]]}");
  }
  const int n = j.at("n").get<int>();
  const auto& rows = j.at("gram");
  if (n < 1 || !rows.is_array() || static_cast<int>(rows.size()) != n) {
    throw std::invalid_argument("gram: row count does not match n");
  }
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n) {
      throw std::invalid_argument("gram: row " + std::to_string(i) + " has the wrong length");
    }
    for (int k = 0; k < n; ++k) g(i, k) = rows[i][k].get<double>();
  }
  return TargetGram::from_matrix(g);
}

TargetGram load_gram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("gram: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_gram_json(ss.str());
}

namespace {

BigInt round_half_even(double x) {
  const double r = std::nearbyint(x);  // default rounding mode: ties to even
  if (!(std::fabs(r) < 9.2e18)) throw std::overflow_error("approximate: kappa * L entry out of range");
  return BigInt(static_cast<long long>(r));
}

}  // namespace

double gram_error(const TargetGram& target, const std::vector<BigVector>& b, double kappa) {
  const int n = target.n();
  const double k2 = kappa * kappa;
  double s = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double e = to_double(dot(b[i], b[j])) / k2 - target.g(i, j);
      s += e * e;
    }
  }
  return std::sqrt(s);
}

ApproximationResult approximate(const TargetGram& target, double kappa) {
  if (!(kappa >= 1) || !std::isfinite(kappa)) throw std::invalid_argument("approximate: kappa must be >= 1");
  const int n = target.n();
  ApproximationResult r;
  r.kappa = kappa;
  r.l_tilde.assign(n, BigVector(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) r.l_tilde[i][j] = round_half_even(kappa * target.l(i, j));
  }
  r.b.assign(n, BigVector(n + 1, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) r.b[i][j] = r.l_tilde[i][j];
    r.b[i][i + 1] = 1;
  }
  r.v.assign(n + 1, 0);
  r.v[0] = 1;
  for (int i = 0; i < n; ++i) {
    BigInt acc = 0;
    for (int j = 0; j <= i; ++j) acc += r.l_tilde[i][j] * r.v[j];
    r.v[i + 1] = -acc;
  }
  BigVector s(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (r.v[i] == 0) throw std::domain_error("approximate: kernel entry " + std::to_string(i) + " is zero");
    s[i] = abs(r.v[i]);
  }
  r.s = SVector(std::move(s));
  r.gram_error = gram_error(target, r.b, kappa);
  return r;
}

bool kernel_holds(const ApproximationResult& r) {
  for (const auto& row : r.b) {
    if (dot(row, r.v) != 0) return false;
  }
  return r.v.empty() || r.v[0] == 1;
}

bool rounding_holds(const TargetGram& target, const ApproximationResult& r) {
  const int n = target.n();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double want = j <= i ? r.kappa * target.l(i, j) : 0.0;
      if (std::fabs(to_double(r.l_tilde[i][j]) - want) > 0.5) return false;
    }
  }
  return true;
}

BigInt saturation_determinant(const ApproximationResult& r) {
  std::vector<BigVector> m;
  m.reserve(r.b.size());
  for (const auto& row : r.b) m.emplace_back(row.begin() + 1, row.end());
  return determinant(m);
}

double real_minimum(const TargetGram& target) {
  const int n = target.n();
  const Eigen::MatrixXd rr = target.l.transpose();  // upper triangular, g = rr^t rr
  double best = target.g.diagonal().minCoeff();
  std::vector<double> x(n, 0.0);
  // level i picks x_i given x_{i+1..n-1}; partial holds the norm of levels > i
  std::function<void(int, double)> rec = [&](int i, double partial) {
    double tail = 0;
    for (int j = i + 1; j < n; ++j) tail += rr(i, j) * x[j];
    const double rii = rr(i, i);
    const double c = -tail / rii;
    const double room = best * (1 + 1e-12) - partial;
    if (room < 0) return;
    const double w = std::sqrt(room) / std::fabs(rii);
    for (double xi = std::ceil(c - w); xi <= std::floor(c + w); ++xi) {
      const double t = rii * xi + tail;
      const double q = partial + t * t;
      if (q > best * (1 + 1e-12)) continue;
      x[i] = xi;
      if (i == 0) {
        bool zero = true;
        for (double v : x) zero = zero && v == 0;
        if (!zero && q < best) best = q;
      } else {
        rec(i - 1, q);
      }
    }
    x[i] = 0;
  };
  rec(n - 1, 0.0);
  return best;
}

ApproximationReport verify_approximation(const TargetGram& target, const ApproximationResult& r,
                                         const EnumerationOptions& options) {
  ApproximationReport rep;
  const int n = target.n();
  rep.gram_error = gram_error(target, r.b, r.kappa);
  rep.kernel_ok = kernel_holds(r);
  rep.rounding_ok = rounding_holds(target, r);
  const BigInt sat = saturation_determinant(r);
  rep.saturated = sat == 1 || sat == -1;
  const double m = real_minimum(target);
  const double log_delta = 0.5 * (n * std::log(m / 4) - std::log(target.g.determinant()));
  rep.target_density = std::exp(log_delta + numth::log_ball_volume(n));
  if (n <= 8 && r.kappa <= 1e4) {
    const DensityReport d = density_report(r.s, options);
    rep.lattice_density = d.density;
    rep.lattice_minimum = d.minimum;
  }
  return rep;
}

}  // namespace latpack::approx
