#include "hofc/partitioned_permutation.hpp"

#include "hofc/errors.hpp"

namespace hofc {

PartitionedPermutation::PartitionedPermutation(SetPartition V, Permutation pi)
    : V_(std::move(V)), pi_(std::move(pi)) {
  require(V_.size() == pi_.size(), "partition and permutation sizes differ");
  require(pi_.within(V_), "partition must be coarser than the cycles of the permutation");
}

PartitionedPermutation PartitionedPermutation::disc(const Permutation& pi) { return {pi.orbits(), pi}; }

PartitionedPermutation PartitionedPermutation::identity(int n) {
  return {SetPartition::finest(n), Permutation::identity(n)};
}

std::string PartitionedPermutation::to_string() const {
  return "(" + V_.to_string() + ", " + pi_.to_string() + ")";
}

const PP& ProductResult::value() const {
  require(value_.has_value(), "product is zero");
  return *value_;
}

ProductResult multiply(const PP& a, const PP& b) {
  require(a.size() == b.size(), "product of partitioned permutations of different sizes");
  PP c(a.partition().join(b.partition()), a.perm() * b.perm());
  if (a.length() + b.length() != c.length()) return ProductResult::zero();
  return ProductResult(std::move(c));
}

int join_length(const Permutation& pi, const Permutation& gamma) { return orbit_join(pi, gamma).length(); }

bool is_gamma_planar(const Permutation& pi, const Permutation& gamma) {
  return pi.length() + (pi.inverse() * gamma).length() + gamma.length() == 2 * join_length(pi, gamma);
}

std::array<bool, 4> geodesic_conditions(const PP& a, const PP& b) {
  const auto& V = a.partition();
  const auto& W = b.partition();
  const auto& pi = a.perm();
  const auto& sigma = b.perm();
  auto P = pi.orbits(), S = sigma.orbits();
  int pis = P.join(S).length();
  int vs = V.join(S).length(), pw = P.join(W).length(), vw = V.join(W).length();
  return {pi.length() + sigma.length() + (pi * sigma).length() == 2 * pis,
          V.length() + pis == pi.length() + vs,
          W.length() + pis == sigma.length() + pw,
          vs + pw == vw + pis};
}

Classification classify(const PP& a, const Permutation& gamma) {
  require(a.size() == gamma.size(), "classify: size mismatch");
  Classification c;
  const auto& V = a.partition();
  const auto& pi = a.perm();
  c.disc = V == pi.orbits();
  c.tunnel = V.length() == pi.length() + 1;
  c.gamma_planar = is_gamma_planar(pi, gamma);
  auto G = gamma.orbits();
  c.gamma_minimal = V.join(G).length() - pi.orbits().join(G).length() == V.length() - pi.length();
  return c;
}

std::vector<PP> enumerate_ps(int n, int bound) {
  require(n >= 0 && n <= bound, "enumerate_ps: n exceeds the enumeration bound");
  std::vector<PP> out;
  for (const auto& pi : all_permutations(n))
    for (const auto& V : interval(pi.orbits(), SetPartition::coarsest(n))) out.emplace_back(V, pi);
  return out;
}

}  // namespace hofc
