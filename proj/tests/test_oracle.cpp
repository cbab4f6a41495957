#include <doctest.h>

#include "latpack/oracle.hpp"

using namespace latpack;

TEST_CASE("oracle minimum on hand-checked lattices") {
  CHECK(oracle::minimum(SVector{1, 1}) == 2);
  CHECK(oracle::minimum(SVector{1, 1, 1}) == 2);
  CHECK(oracle::minimum(SVector{1, 2, 3}) == 3);
  // (1, 5)^perp is spanned by (5, -1)
  CHECK(oracle::minimum(SVector{1, 5}) == 26);
  CHECK_THROWS(oracle::minimum(SVector{1}));
}

TEST_CASE("oracle short-vector test") {
  CHECK(oracle::has_vector_below(SVector{1, 2, 3}, 4));
  CHECK_FALSE(oracle::has_vector_below(SVector{1, 2, 3}, 3));
  CHECK_FALSE(oracle::has_vector_below(SVector{1}, 100));
}

TEST_CASE("oracle greedy") {
  CHECK(oracle::greedy_sequence(2, 4) == std::vector<std::int64_t>{1, 1, 1, 1, 1});
  CHECK(oracle::greedy_sequence(3, 3) == std::vector<std::int64_t>{1, 2, 3, 4});
  CHECK(oracle::greedy_extend(SVector{1, 2}, 3) == 3);
}

TEST_CASE("oracle counts and determinants") {
  CHECK(oracle::ball_count(1, 4) == 5);
  CHECK(oracle::ball_count(2, 2) == 9);
  CHECK(oracle::ball_count(0, 3) == 1);
  CHECK(oracle::gram_minimum({{2, 1}, {1, 2}}, 3) == 2);
  CHECK(oracle::cofactor_determinant({{5, 6}, {6, 10}}) == 14);
  CHECK(oracle::cofactor_determinant({{2, 0, 0}, {0, 3, 0}, {0, 0, 4}}) == 24);
  CHECK(oracle::forbidden_values(SVector{1, 2}, 3) == std::vector<std::int64_t>{1, 2});
}
