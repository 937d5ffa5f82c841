#pragma once

#include "hofc/multfn.hpp"

namespace hofc {

// Three independent computations of the inverse of zeta under convolution.

// Triangular solve of mu * zeta = delta, diagrams ordered by size then parts.
MultFn moebius_table(int n);

// mu = delta - (zeta - delta) * mu unrolled over chains of non-identity disc
// factors, memoised on partitioned permutations.
MultFn moebius_geometric(int n);

// mu(U, gamma) = - sum_{k != 1} mu(X) over (0, (1,k)) X = (U, gamma), valid when
// gamma(1) != 1; targets fixing 1 are conjugated first. The diagram 1^n has no
// such representative and uses sum_pi mu(1_n, pi) = 0 instead.
MultFn moebius_recursion(int n);

// Conjugate by the transposition (i j): points i and j swap labels.
PP swap_points(const PP& x, int i, int j);

}  // namespace hofc
