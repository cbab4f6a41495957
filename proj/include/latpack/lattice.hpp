#pragma once

// Lattices Lambda_n = s^perp ∩ Z^{n+1} for integer vectors s with s_0 = 1:
// explicit kernel bases, exact determinants, LLL reduction, exact minima.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "latpack/bigint.hpp"

namespace latpack {

/// (s_0, ..., s_n) with s_0 = 1 and every entry positive. dim() is n, the
/// dimension of the orthogonal lattice; (1) alone is the empty start of a
/// mu-sequence.
class SVector {
 public:
  explicit SVector(BigVector entries);
  SVector(std::initializer_list<long long> entries);

  const BigVector& entries() const { return entries_; }
  const BigInt& operator[](std::size_t i) const { return entries_[i]; }
  std::size_t size() const { return entries_.size(); }
  int dim() const { return static_cast<int>(entries_.size()) - 1; }

  /// (s_0, ..., s_m).
  SVector prefix(int m) const;
  /// Appends s_{n+1} = next.
  SVector extended(const BigInt& next) const;
  /// Drops entry i (1 <= i <= n).
  SVector without(std::size_t i) const;

  /// Entries as int64; throws std::overflow_error when one does not fit.
  std::vector<std::int64_t> to_int64() const;

  friend bool operator==(const SVector&, const SVector&) = default;

 private:
  BigVector entries_;
};

/// Rows b_1..b_r of integer vectors in Z^m.
struct IntegerBasis {
  std::vector<BigVector> rows;

  int rank() const { return static_cast<int>(rows.size()); }
  int ambient_dim() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
};

/// Exact symmetric Gram matrix G_ij = <b_i, b_j>.
struct GramMatrix {
  std::vector<BigVector> entries;

  int dim() const { return static_cast<int>(entries.size()); }
  const BigInt& operator()(int i, int j) const { return entries[i][j]; }
  static GramMatrix from_ints(const std::vector<std::vector<long long>>& rows);
};

GramMatrix gram(const IntegerBasis& basis);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const GramMatrix& g);
BigInt determinant(const std::vector<BigVector>& square);

/// All leading principal minors strictly positive.
bool is_positive_definite(const GramMatrix& g);

/// Rows b_i = s_i e_0 - e_i, i = 1..n.
IntegerBasis basis_from_s(const SVector& s);

/// det(Lambda_n) = sum s_i^2.
BigInt determinant(const SVector& s);

struct LllParams {
  // delta = numerator / denominator, exact.
  int delta_numerator = 99;
  int delta_denominator = 100;
};

struct LllResult {
  GramMatrix gram;                  ///< Gram matrix of the reduced basis
  std::vector<BigVector> transform; ///< reduced_i = sum_j transform[i][j] * input_j
  std::uint64_t swaps = 0;
};

/// Exact integral LLL on a Gram matrix. Throws std::domain_error when the
/// generating vectors are linearly dependent.
LllResult lll_reduce(const GramMatrix& g, const LllParams& params = {});

/// LLL on explicit rows; the unimodular transform is applied to the rows.
struct LllBasisResult {
  IntegerBasis basis;
  std::vector<BigVector> transform;
};
LllBasisResult lll_reduce(const IntegerBasis& basis, const LllParams& params = {});

/// Size reduction |mu_ij| <= 1/2 + eps and the Lovasz condition with the given
/// delta, checked on floating Gram-Schmidt data.
bool is_lll_reduced(const GramMatrix& g, double delta, double eps = 1e-9);

struct EnumerationOptions {
  /// Maximum number of enumeration-tree nodes.
  double node_budget = 1e8;
  /// When set, only vectors of norm < upper are searched for.
  std::optional<BigInt> upper;
};

struct ShortestVector {
  /// Exact minimum; equals *upper when at_least_upper is set.
  BigInt minimum;
  /// Canonical minimal vector in ambient coordinates (coefficient coordinates
  /// for the Gram overload). Empty when at_least_upper is set.
  BigVector witness;
  /// Coefficients of the witness in the input basis.
  BigVector coefficients;
  /// No nonzero vector of norm < upper exists.
  bool at_least_upper = false;
  std::uint64_t nodes = 0;
};

/// Exact minimum by LLL preconditioning plus Fincke-Pohst enumeration, each
/// floating candidate re-verified in exact arithmetic. Ties are broken by
/// taking, among minimal vectors whose first nonzero coordinate is positive,
/// the lexicographically largest. Throws ResourceError when the estimated or
/// actual tree size exceeds the node budget.
ShortestVector shortest_vector(const IntegerBasis& basis, const EnumerationOptions& options = {});
ShortestVector shortest_vector(const GramMatrix& g, const EnumerationOptions& options = {});

/// True when Lambda(s) has minimum >= mu.
bool has_minimum_at_least(const SVector& s, const BigInt& mu, const EnumerationOptions& options = {});

struct DensityReport {
  int dim = 0;
  BigInt minimum;
  BigInt determinant;
  double density = 0;         ///< Delta = delta * V_n
  double center_density = 0;  ///< delta = sqrt(min^n / (4^n det))
  double hermite = 0;         ///< gamma = 4 delta^(2/n)
  double log_center_density = 0;
};

DensityReport density_report(int dim, const BigInt& minimum, const BigInt& determinant);
DensityReport density_report(const SVector& s, const EnumerationOptions& options = {});

}  // namespace latpack
