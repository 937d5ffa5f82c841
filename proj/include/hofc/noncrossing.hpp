#pragma once

#include <vector>

#include "hofc/permutation.hpp"

namespace hofc {

// pi^{-1} gamma
Permutation kreweras_complement(const Permutation& pi, const Permutation& gamma);

// pi and gamma generate a transitive group.
bool is_connected(const Permutation& pi, const Permutation& gamma);

// Disc non-crossing w.r.t. the single cycle (1..n): |pi| + |gamma pi^{-1}| = n - 1.
bool is_disc_noncrossing(const Permutation& pi);

// Non-crossing on r circles given by the profile (r = 1 is the disc case):
// pi connects the circles and |pi| + |pi^{-1} gamma| = |gamma| + 2(r - 1).
bool is_noncrossing(const Permutation& pi, const std::vector<int>& profile);
bool is_annular_noncrossing(const Permutation& pi, int m, int n);

// All permutations that are non-crossing on the circles of the profile.
std::vector<Permutation> enumerate_snc(const std::vector<int>& profile);
std::vector<Permutation> enumerate_nc(int n);

}  // namespace hofc
