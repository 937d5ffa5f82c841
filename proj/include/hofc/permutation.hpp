#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hofc/set_partition.hpp"
#include "hofc/young_diagram.hpp"

namespace hofc {

// Permutation of {0..n-1}. Products compose right to left: (p*q)(i) = p(q(i)).
// Text I/O is 1-based cycle notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  // 1-based cycles; unmentioned points are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles1);
  // "(1,3)(2)". With n == 0 the size is the largest point mentioned.
  static Permutation parse(std::string_view text, int n = 0);
  // gamma_{n1,...,nr} = (1..n1)(n1+1..n1+n2)...
  static Permutation gamma(const std::vector<int>& profile);
  // Standard representative of a cycle type.
  static Permutation of_type(const YoungDiagram& type);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  bool is_identity() const;
  // 0-based cycles, each starting at its smallest point, sorted by that point.
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const;
  // |p| = n - #cycles
  int length() const { return size() - cycle_count(); }
  YoungDiagram cycle_type() const;
  SetPartition orbits() const;
  // Cycles stay inside the blocks of V.
  bool within(const SetPartition& V) const;
  // Restriction to a p-invariant subset, relabeled in increasing order.
  Permutation restrict_to(const std::vector<int>& subset) const;
  // q^{-1} p q
  Permutation conjugate_by(const Permutation& q) const;

  std::string to_string() const;
  std::uint64_t key() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

Permutation operator*(const Permutation& p, const Permutation& q);

// Orbit partition of the group generated by the given permutations.
SetPartition orbit_join(const Permutation& a, const Permutation& b);

// Every permutation of {0..n-1} in lexicographic order of images.
std::vector<Permutation> all_permutations(int n);
// Permutations whose cycles lie inside the blocks of V.
std::vector<Permutation> permutations_within(const SetPartition& V);

}  // namespace hofc
