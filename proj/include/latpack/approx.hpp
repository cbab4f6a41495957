#pragma once

// Approximating an arbitrary positive definite Gram matrix, up to scaling,
// by the orthogonal lattice of an integer vector s: round kappa * L from the
// Cholesky factor, append a unit superdiagonal and take the kernel vector.

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "latpack/bigint.hpp"
#include "latpack/lattice.hpp"

namespace latpack::approx {

struct TargetGram {
  Eigen::MatrixXd g;
  Eigen::MatrixXd l;  ///< lower triangular, g = l l^t

  int n() const { return static_cast<int>(g.rows()); }

  /// Throws std::invalid_argument unless g is square, symmetric and positive definite.
  static TargetGram from_matrix(const Eigen::MatrixXd& g);
};

/// {"n": int, "gram": [[...], ...]}
TargetGram parse_gram_json(const std::string& text);
TargetGram load_gram_file(const std::string& path);

struct ApproximationResult {
  double kappa = 0;
  std::vector<BigVector> l_tilde;  ///< n x n lower triangular
  std::vector<BigVector> b;        ///< n x (n + 1)
  BigVector v;                     ///< length n + 1, b v = 0, v[0] = 1
  SVector s{1};                    ///< |v|
  double gram_error = 0;           ///< || b b^t / kappa^2 - g ||_F
};

/// kappa >= 1. Rounds half to even. Throws std::domain_error when a kernel
/// entry vanishes, since s must stay positive.
ApproximationResult approximate(const TargetGram& target, double kappa);

double gram_error(const TargetGram& target, const std::vector<BigVector>& b, double kappa);

/// Exact check that b v = 0.
bool kernel_holds(const ApproximationResult& r);

/// |l_tilde - kappa l| <= 1/2 entrywise.
bool rounding_holds(const TargetGram& target, const ApproximationResult& r);

/// Determinant of b with its first column deleted (unit lower triangular, so +-1).
BigInt saturation_determinant(const ApproximationResult& r);

/// Minimum of x^t g x over nonzero integer x, by enumeration on the Cholesky factor.
double real_minimum(const TargetGram& target);

struct ApproximationReport {
  double gram_error = 0;
  bool kernel_ok = false;
  bool rounding_ok = false;
  bool saturated = false;
  double target_density = 0;
  std::optional<double> lattice_density;  ///< only for n <= 8 and kappa <= 1e4
  std::optional<BigInt> lattice_minimum;
};

ApproximationReport verify_approximation(const TargetGram& target, const ApproximationResult& r,
                                         const EnumerationOptions& options = {});

}  // namespace latpack::approx
