#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "hofc/permutation.hpp"

namespace hofc {

// A pair (V, pi) with every cycle of pi inside a block of V.
class PartitionedPermutation {
 public:
  PartitionedPermutation() = default;
  PartitionedPermutation(SetPartition V, Permutation pi);  // checks V >= 0_pi
  static PartitionedPermutation disc(const Permutation& pi);  // (0_pi, pi)
  static PartitionedPermutation identity(int n);               // (0_n, e)

  const SetPartition& partition() const { return V_; }
  const Permutation& perm() const { return pi_; }
  int size() const { return pi_.size(); }
  // |(V, pi)| = 2|V| - |pi|
  int length() const { return 2 * V_.length() - pi_.length(); }

  std::string to_string() const;
  auto operator<=>(const PartitionedPermutation&) const = default;

 private:
  SetPartition V_;
  Permutation pi_;
};

using PP = PartitionedPermutation;

// Result of a product: either a partitioned permutation or the explicit zero
// produced when lengths do not add up.
class ProductResult {
 public:
  static ProductResult zero() { return ProductResult(); }
  explicit ProductResult(PP value) : value_(std::move(value)) {}
  bool is_zero() const { return !value_; }
  const PP& value() const;
  bool operator==(const ProductResult&) const = default;

 private:
  ProductResult() = default;
  std::optional<PP> value_;
};

// (V, pi)(W, sigma) = (V v W, pi sigma) when the lengths add, zero otherwise.
ProductResult multiply(const PP& a, const PP& b);

// The four join conditions characterising a non-zero product:
//  |pi| + |sigma| + |pi sigma| = 2|pi v sigma|
//  |V| + |pi v sigma| = |pi| + |V v sigma|
//  |W| + |pi v sigma| = |sigma| + |pi v W|
//  |V v sigma| + |pi v W| = |V v W| + |pi v sigma|
std::array<bool, 4> geodesic_conditions(const PP& a, const PP& b);

struct Classification {
  bool disc = false;           // V = 0_pi
  bool tunnel = false;         // |V| = |pi| + 1
  bool gamma_planar = false;   // |pi| + |pi^{-1} gamma| + |gamma| = 2|pi v gamma|
  bool gamma_minimal = false;  // |V v gamma| - |pi v gamma| = |V| - |pi|
};
Classification classify(const PP& a, const Permutation& gamma);

// |pi v gamma| with the join taken on orbits.
int join_length(const Permutation& pi, const Permutation& gamma);
bool is_gamma_planar(const Permutation& pi, const Permutation& gamma);

// All partitioned permutations of n points (bounded by 8).
std::vector<PP> enumerate_ps(int n, int bound = 8);

}  // namespace hofc
