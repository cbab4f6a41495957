#pragma once

// mu-sequences: integer vectors (1, s_1, s_2, ...) whose orthogonal lattices
// all have minimum >= mu. Greedy extension through the forbidden set, and the
// interval obstruction sets I_k / X_k(a) with their primitivity counts.

#include <cstdint>
#include <optional>
#include <vector>

#include "latpack/bigint.hpp"
#include "latpack/lattice.hpp"

namespace latpack::museq {

enum class Exec { serial, parallel };

struct Options {
  /// Cap on the Lemma-1 style count bound of ball points to enumerate.
  double ball_budget = 1e8;
  EnumerationOptions enumeration{};
  Exec exec = Exec::parallel;
};

struct MuSequence {
  std::int64_t mu = 0;
  SVector s;
  bool certified = false;
};

/// Returns {log of the first bound, log of the second bound} on the greedy
/// entry s_n:  1 + sqrt(mu-2) sqrt(mu-1+n/4)^n V_n  and  sqrt(mu) sqrt(mu+n/4)^n V_n.
std::pair<double, double> log_greedy_entry_bounds(std::int64_t mu, int n);

/// Lower bound on the density of a lattice built from a greedy mu-sequence:
/// (1 + n/(4 mu))^(-n/2) / (2^n sqrt((n+1) mu)).
double greedy_density_floor(std::int64_t mu, int n);

/// All a > 0 such that a k = |<z, s>| for some z in Z^{n} \ {0}, k >= 1,
/// |z|^2 + k^2 < mu. Sorted, without duplicates.
std::vector<BigInt> forbidden_values(const SVector& s, std::int64_t mu, const Options& options = {});

/// Smallest t >= 1 outside forbidden_values(s, mu).
BigInt greedy_extend(const SVector& s, std::int64_t mu, const Options& options = {});

/// Lexicographically first mu-sequence of length dim + 1, certified by SVP.
/// Throws std::logic_error if an entry violates the greedy bounds or the
/// certification fails.
MuSequence greedy_sequence(std::int64_t mu, int dim, const Options& options = {});

/// Checks that Lambda(s) has minimum >= mu.
MuSequence certify(const SVector& s, std::int64_t mu, const Options& options = {});

/// Candidate interval [lo, hi] for the next entry.
struct IntervalSpec {
  double lo = 0;
  double hi = 0;
  double sigma = 0;        ///< hi = sigma * mu^(n/2) * V_n
  double sigma_tilde = 0;  ///< lo = sigma_tilde * mu^(n/2) * V_n
  double epsilon = 0;      ///< sigma / sigma_tilde - 1

  /// n is the dimension of the extended lattice (current s has n entries).
  static IntervalSpec from_sigmas(double sigma_tilde, double sigma, std::int64_t mu, int n);
  static IntervalSpec from_bounds(double lo, double hi, std::int64_t mu, int n);

  /// Integer range [ceil(max(lo,1)), floor(hi)]; empty when first > last.
  std::pair<std::int64_t, std::int64_t> integer_range() const;
};

struct KObstruction {
  int k = 0;
  std::vector<std::int64_t> obstructed;  ///< I_k, sorted
  std::uint64_t witnesses = 0;           ///< #X_k(0)
  std::uint64_t primitive_witnesses = 0; ///< #X_k(0)_p
  std::vector<std::uint64_t> residue_counts;  ///< #X_k(j), j = 0..k-1
  std::uint64_t total = 0;                    ///< #X_k(*)
  /// max_j |#X_k(j) - #X_k(*)/k|
  double residue_spread = 0;
};

struct ObstructionReport {
  int k_max = 0;             ///< floor(sqrt(mu - 1))
  std::int64_t cutoff_a = 0; ///< the asymptotic cutoff, for comparison only
  std::vector<KObstruction> per_k;
  std::vector<std::int64_t> union_set;  ///< union of the I_k, sorted
  std::uint64_t union_size = 0;
  std::uint64_t interval_size = 0;  ///< #(I ∩ N)

  /// #I_k <= #X_k(0) for all k, and union_size <= sum_k #X_k(0)_p.
  bool invariants_hold() const;
};

ObstructionReport interval_obstructions(const SVector& s, std::int64_t mu, const IntervalSpec& interval,
                                        const Options& options = {});

/// Smallest t in the interval outside the union of the I_k, certified by SVP;
/// nullopt when the interval is fully obstructed.
std::optional<std::int64_t> extend_in_interval(const SVector& s, std::int64_t mu, const IntervalSpec& interval,
                                               const Options& options = {});

}  // namespace latpack::museq
