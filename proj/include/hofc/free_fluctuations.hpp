#pragma once

#include <vector>

namespace hofc {

// Limit of k_2(Y(n(1), m(1), ..., n(p), m(p)), Y(nt(p), mt(p), ..., nt(1), mt(1))) for A, B
// free of second order, where
//   Y(...) = Tr((A^{n(1)} - alpha_{n(1)}) (B^{m(1)} - beta_{m(1)}) ...).
// Note the second argument lists (nt, mt) in reverse. Indices are cyclic mod p:
//   sum_k prod_i (alpha_{n(i+k)+nt(i)} - alpha_{n(i+k)} alpha_{nt(i)})
//                (beta_{m(i+k)+mt(i+1)} - beta_{m(i+k)} beta_{mt(i+1)}).
// Different lengths give 0.
template <class T, class FA, class FB>
T free_fluctuation_prediction(const std::vector<int>& n, const std::vector<int>& m, const std::vector<int>& nt,
                              const std::vector<int>& mt, FA alpha, FB beta) {
  std::size_t p = n.size();
  if (nt.size() != p) return T(0);
  T total(0);
  for (std::size_t k = 1; k <= p; ++k) {
    T prod(1);
    for (std::size_t i = 1; i <= p; ++i) {
      int a = n[(i + k - 1) % p], at = nt[i - 1];
      int b = m[(i + k - 1) % p], bt = mt[i % p];
      prod *= (alpha(a + at) - alpha(a) * alpha(at)) * (beta(b + bt) - beta(b) * beta(bt));
    }
    total += prod;
  }
  return total;
}

}  // namespace hofc
