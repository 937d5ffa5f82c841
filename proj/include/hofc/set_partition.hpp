#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hofc/scalar.hpp"

namespace hofc {

// Partition of {0..n-1}, stored as a restricted growth string: element i lies
// in block label(i), and labels appear in order of first occurrence.
class SetPartition {
 public:
  SetPartition() = default;
  // Arbitrary integer labels; relabeled canonically.
  static SetPartition from_labels(const std::vector<int>& labels);
  // 1-based blocks; they must cover 1..n exactly once.
  static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks1);
  static SetPartition finest(int n);    // 0_n
  static SetPartition coarsest(int n);  // 1_n

  int size() const { return static_cast<int>(label_.size()); }
  int block_count() const { return blocks_; }
  // |V| = n - #V
  int length() const { return size() - blocks_; }
  int block_of(int i) const { return label_[i]; }
  const std::vector<int>& labels() const { return label_; }
  // 0-based blocks, each sorted, ordered by smallest element.
  std::vector<std::vector<int>> blocks() const;
  std::vector<int> block_sizes() const;

  SetPartition join(const SetPartition& other) const;
  SetPartition meet(const SetPartition& other) const;
  // this <= other: every block of this lies inside a block of other.
  bool leq(const SetPartition& other) const;

  // 1-based "{1,3}{2}".
  std::string to_string() const;
  std::uint64_t key() const;

  auto operator<=>(const SetPartition&) const = default;

 private:
  std::vector<int> label_;
  int blocks_ = 0;
};

std::vector<SetPartition> enumerate_partitions(int n);
// Partitions U with lower <= U <= upper.
std::vector<SetPartition> interval(const SetPartition& lower, const SetPartition& upper);
// Moebius function of the partition lattice; requires U <= W.
Scalar partition_moebius(const SetPartition& U, const SetPartition& W);

}  // namespace hofc
