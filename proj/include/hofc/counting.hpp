#pragma once

#include <vector>

#include "hofc/multfn.hpp"

namespace hofc {

// zeta^{*p}(target): number of p-tuples of disc factors multiplying to target.
Integer zeta_power(int p, const PP& target);
// Same count on (1_n, gamma_profile).
Integer zeta_power(int p, const std::vector<int>& profile);

// p [(p-1)n-1]! / [(p-1)n-r+2]! prod_i n_i binom(p n_i - 1, n_i), for p >= 2.
Integer zeta_power_closed_form(int p, const std::vector<int>& profile);

// Catalan numbers and the annular count 2mn/(m+n) binom(2m-1,m) binom(2n-1,n).
Integer catalan(int n);
Integer annular_count(int m, int n);

// Recursion on the first circle of an arbitrary number of circles.
// c_0 = 1; a zero entry among two or more circles gives 0.
Integer count_recursive(const std::vector<int>& profile);
// Two-circle recursion:
//  c_{m,n} = sum_{k=1}^n (c_{k-1} c_{m,n-k} + c_{m,k-1} c_{n-k}) + m c_{m+n-1}.
Integer count_recursive2(int m, int n);

// zeta*zeta(U, gamma) by removing the point 1 and summing over the split
// partitions it produces; gamma = e uses prod_B (|B|-1)!.
Integer count_rec_fact(const PP& target);

// Number of permutations non-crossing on the circles of the profile.
Integer count_snc_bruteforce(const std::vector<int>& profile);

}  // namespace hofc
