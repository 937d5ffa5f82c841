#pragma once

#include <map>
#include <vector>

#include "hofc/factorization.hpp"
#include "hofc/scalar.hpp"
#include "hofc/young_diagram.hpp"

namespace hofc {

// Multiplicative function on partitioned permutations: a value per Young
// diagram, extended by f(V, pi) = prod over blocks B of V of f(type of pi|B).
class MultFn {
 public:
  MultFn() = default;
  explicit MultFn(int order_bound) : order_bound_(order_bound) {}

  int order_bound() const { return order_bound_; }
  void set(const YoungDiagram& d, Scalar v);
  bool has(const YoungDiagram& d) const { return d.empty() || table_.count(d) > 0; }
  // The empty diagram evaluates to 1. Missing entries throw MissingValue.
  Scalar at(const YoungDiagram& d) const;
  Scalar evaluate(const PP& x) const;
  const std::map<YoungDiagram, Scalar>& table() const { return table_; }
  // True when every entry with two or more parts is zero.
  bool disc_supported() const;

  bool operator==(const MultFn&) const = default;

  static MultFn zeta(int n);   // 1 on cycles
  static MultFn delta(int n);  // 1 on the diagram (1)

 private:
  int order_bound_ = 0;
  std::map<YoungDiagram, Scalar> table_;
};

// (f * g)(U, gamma) = sum over (V, pi)(W, sigma) = (U, gamma) of f(V, pi) g(W, sigma),
// tabulated on every diagram up to n.
MultFn convolve(const MultFn& f, const MultFn& g, int n);
Scalar convolve_at(const MultFn& f, const MultFn& g, const PP& target);

// Second-order bridge:
//  f1(pi) = f(0_pi, pi),
//  f2(pi1, pi2) = sum over V joining one cycle of pi1 with one cycle of pi2 of f(V, pi1 x pi2).
Scalar tilde1(const MultFn& f, const Permutation& pi);
Scalar tilde2(const MultFn& f, const Permutation& pi1, const Permutation& pi2);
// Right-hand side of the second-order convolution identity for h = f * g on (gamma_m, gamma_n).
Scalar tilde2_convolution_rhs(const MultFn& f, const MultFn& g, int m, int n);

// Direct sum of permutations acting on disjoint blocks of points.
Permutation direct_sum(const Permutation& a, const Permutation& b);

}  // namespace hofc
