#pragma once

// Brute-force reference computations over integer boxes. Slow, simple, and
// sharing no code with the enumeration kernels they are used to check.

#include <cstdint>
#include <vector>

#include "latpack/bigint.hpp"
#include "latpack/lattice.hpp"

namespace latpack::oracle {

/// min |z|^2 over nonzero z in Lambda(s), scanning (z_1..z_n) in a box whose
/// half-width is the square root of the shortest basis-row norm.
std::int64_t minimum(const SVector& s);

/// min x^t G x over nonzero x in [-bound, bound]^d.
std::int64_t gram_minimum(const std::vector<std::vector<std::int64_t>>& g, int bound);

/// Some nonzero z in Lambda(s) has |z|^2 < mu.
bool has_vector_below(const SVector& s, std::int64_t mu);

/// Smallest t >= 1 with min Lambda(s, t) >= mu, trying t = 1, 2, ...
std::int64_t greedy_extend(const SVector& s, std::int64_t mu);

/// The greedy mu-sequence of length dim + 1 built from greedy_extend.
std::vector<std::int64_t> greedy_sequence(std::int64_t mu, int dim);

/// Number of z in Z^n with |z|^2 <= max_norm.
std::uint64_t ball_count(int n, std::int64_t max_norm);

/// Positive a with a k = |<z, s>|, z != 0, k >= 1, |z|^2 + k^2 < mu. Sorted, unique.
std::vector<std::int64_t> forbidden_values(const SVector& s, std::int64_t mu);

/// Determinant by cofactor expansion. Exponential; for d <= 8 only.
BigInt cofactor_determinant(const std::vector<BigVector>& m);

}  // namespace latpack::oracle
