#pragma once

#include <map>
#include <vector>

#include "hofc/linalg.hpp"
#include "hofc/partitioned_permutation.hpp"
#include "hofc/young_diagram.hpp"

namespace hofc {

// Weingarten function Wg(N, .) on S_n as a class function.
struct WeingartenTable {
  int n = 0;
  Scalar N;
  std::map<YoungDiagram, Scalar> values;

  Scalar at(const YoungDiagram& d) const;
  Scalar at(const Permutation& p) const { return at(p.cycle_type()); }
};

// Gram matrix G(sigma, pi) = N^{#(sigma pi^{-1})} on S_n in all_permutations order.
Matrix gram_matrix(int n, const Scalar& N);
// Inversion reduced to the conjugacy-class basis.
WeingartenTable wg_table(int n, const Scalar& N);
// Inversion of the full n! x n! Gram matrix; n <= 5.
WeingartenTable wg_table_full_basis(int n, const Scalar& N);

// E[u_{i'1 j'1} ... u_{i'n j'n} conj(u_{i1 j1}) ... conj(u_{in jn})] for Haar U(N),
// indices 1-based: sum over alpha, beta of
//   prod_k [i_k = i'_{alpha(k)}][j_k = j'_{beta(k)}] Wg(beta alpha^{-1}).
Scalar haar_monomial_expectation(const std::vector<int>& ip, const std::vector<int>& jp, const std::vector<int>& i,
                                 const std::vector<int>& j, const Scalar& N);

// Weingarten values at one N for every size up to n, with the multiplicative
// extension and relative cumulants.
class WeingartenCalculus {
 public:
  WeingartenCalculus(int n, Scalar N);
  const Scalar& N() const { return N_; }
  int order() const { return static_cast<int>(tables_.size()); }
  const WeingartenTable& table(int k) const { return tables_.at(k - 1); }

  Scalar wg(const Permutation& sigma) const;
  // prod over blocks B of U of Wg(sigma restricted to B); needs sigma <= U.
  Scalar wg(const SetPartition& U, const Permutation& sigma) const;
  // C_{V,W}(sigma) = sum_{V <= U <= W} Moeb(U, W) Wg(U, sigma); needs sigma <= V <= W.
  Scalar relative_cumulant(const SetPartition& V, const SetPartition& W, const Permutation& sigma) const;

 private:
  Scalar N_;
  std::vector<WeingartenTable> tables_;
};

}  // namespace hofc
