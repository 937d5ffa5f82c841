#pragma once

#include <utility>
#include <vector>

#include "hofc/partitioned_permutation.hpp"

namespace hofc {

using Factorization = std::pair<PP, PP>;

// Coarsenings V of 0_pi with V <= bound and |V v gamma| - |pi v gamma| = |V| - |pi|.
// Each block of such a V takes pi-cycles from distinct components of pi v gamma,
// and the block/component incidence graph is a forest.
std::vector<SetPartition> minimal_coarsenings(const Permutation& pi, const Permutation& gamma,
                                              const SetPartition& bound);

// All pairs (a, b) with a * b = target, by pruned enumeration: pi ranges over
// gamma-planar permutations inside the blocks of U, sigma = pi^{-1} gamma,
// and both partitions range over gamma-minimal coarsenings.
std::vector<Factorization> factorizations2(const PP& target);
// Same set by scanning PS(n) x PS(n); n <= 5.
std::vector<Factorization> factorizations_bruteforce(const PP& target);
// Memoised variant for repeated targets in convolutions.
const std::vector<Factorization>& factorizations_cached(const PP& target);

// {(V, pi) : (V, pi)(0, pi^{-1} gamma) = (U, gamma)}
std::vector<PP> ps_nc(const SetPartition& U, const Permutation& gamma);

// The factorizations of (1, gamma) for a profile of one or two circles, split into
//  (a) disc * disc with pi non-crossing on all circles,
//  (b) disc * tunnel with pi non-crossing on each circle separately,
//  (c) tunnel * disc.
struct DiscTunnelFamilies {
  std::vector<Factorization> a, b, c;
  std::size_t total() const { return a.size() + b.size() + c.size(); }
};
DiscTunnelFamilies factorizations_disc_tunnel(const std::vector<int>& profile);

}  // namespace hofc
