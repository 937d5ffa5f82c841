#pragma once

#include <vector>

#include "hofc/multfn.hpp"
#include "hofc/weingarten.hpp"

namespace hofc {

// Finite-N tables of a unitarily invariant matrix ensemble, keyed by diagram:
//  phi(lambda)   = k_r(Tr A^{lambda_1}, ..., Tr A^{lambda_r}),
//  kappa(lambda) = k_n(a_{i(1) i(pi(1))}, ..., a_{i(n) i(pi(n))}) for pi of type lambda
// with distinct indices; both extend multiplicatively over blocks.
struct FiniteNTable {
  Scalar N;
  MultFn values;
};

// G(pi) = sum_{(W, sigma) in PS(n)} Wg(sigma pi^{-1}) phi(W, sigma)
Scalar gg_function(const Permutation& pi, const FiniteNTable& phi, const WeingartenCalculus& wg);
Scalar gg_function(const PP& x, const FiniteNTable& phi, const WeingartenCalculus& wg);

// kappa(V, pi) = sum_{(W, sigma) in PS(n), W <= V} phi(W, sigma) C_{pi v W, V}(sigma pi^{-1})
FiniteNTable kappaN_from_phiN(const FiniteNTable& phi, int n);
// The same table from an exact solve of
//  phi(U, gamma) = sum_{V v gamma pi^{-1} = U} kappa(V, pi) N^{#(gamma pi^{-1})}
// over the PS(m) basis for every m <= n.
FiniteNTable kappaN_from_phiN_solve(const FiniteNTable& phi, int n);
// Forward evaluation of the same system.
FiniteNTable phiN_from_kappaN(const FiniteNTable& kappa, int n);

// Extrapolation of N^{n - 2#V + #pi} kappa^{(N)}(V, pi) to N = infinity by the
// model c0 + c1/N^2 + c2/N^4.
struct LimitFit {
  double value = 0;
  double std_err = 0;
  double residual = 0;     // weighted residual sum of squares per extra point
  bool converged = true;   // false when the correction terms dominate
};
int kappa_scaling_exponent(const PP& x);
LimitFit kappa_limit(const std::vector<double>& Ns, const std::vector<double>& kappas,
                     const std::vector<double>& std_errs, const PP& x);
// Exact variant; more than three points give a least-squares fit and
// `exact_fit` reports whether the model reproduces every point.
Scalar kappa_limit_exact(const std::vector<Scalar>& Ns, const std::vector<Scalar>& kappas, const PP& x,
                         bool* exact_fit = nullptr);

}  // namespace hofc
