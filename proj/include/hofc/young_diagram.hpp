#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hofc/scalar.hpp"

namespace hofc {

// Integer partition with parts stored in non-increasing order.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  // Parts in any order; zeros are rejected.
  explicit YoungDiagram(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // Number of permutations of this cycle type.
  Integer class_size() const;
  // "(3,1)"; the empty diagram prints as "()".
  std::string to_string() const;
  static YoungDiagram parse(const std::string& text);

  auto operator<=>(const YoungDiagram&) const = default;

 private:
  std::vector<int> parts_;
};

// All diagrams of n, ordered by number of parts then lexicographically descending.
std::vector<YoungDiagram> diagrams_of(int n);
// All diagrams of size 1..n in the order used by triangular solves.
std::vector<YoungDiagram> diagrams_up_to(int n);

}  // namespace hofc
