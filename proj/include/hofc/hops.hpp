#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hofc/multfn.hpp"
#include "hofc/series.hpp"

namespace hofc {

// Letters are single characters; '1' is the unit of every alphabet.
constexpr char kUnit = '1';

// Distribution and cumulants of a single variable, keyed by Young diagram.
using Distribution = MultFn;
using CumulantSet = MultFn;

CumulantSet cumulants_from_moments(const Distribution& phi, int n);
Distribution moments_from_cumulants(const CumulantSet& kappa, int n);
// Pointwise sum of cumulants of free summands.
CumulantSet add_free(const CumulantSet& ka, const CumulantSet& kb);

// A multiset of cyclic words: the letters met along each cycle of pi.
using CycleWords = std::vector<std::string>;
// Rotate every word to its least rotation and sort the words.
CycleWords canonical_cycles(CycleWords cycles);
CycleWords cycle_words(const Permutation& pi, const std::string& word);
std::string cycles_key(const CycleWords& cycles);

// Values carried through factorization sums: exact rationals, or replicate
// vectors (entry 0 the full-sample estimate, the rest batch estimates).
struct Replicates {
  std::vector<double> v;
  Replicates() = default;
  Replicates(std::size_t n, double x) : v(n, x) {}
};

inline Scalar scale(const Scalar& a, const Scalar& s) { return a * s; }
inline Replicates scale(Replicates a, const Scalar& s) {
  double d = s.get_d();
  for (auto& x : a.v) x *= d;
  return a;
}
inline Scalar times(const Scalar& a, const Scalar& b) { return a * b; }
inline Replicates times(Replicates a, const Replicates& b) {
  for (std::size_t i = 0; i < a.v.size(); ++i) a.v[i] *= b.v[i];
  return a;
}
inline void accumulate(Scalar& a, const Scalar& b) { a += b; }
inline void accumulate(Replicates& a, const Replicates& b) {
  for (std::size_t i = 0; i < a.v.size(); ++i) a.v[i] += b.v[i];
}

// Decorated moment functional of a higher order probability space.
// The moment callback receives canonical, unit-free, non-empty cyclic words
// and returns phi_r(product along cycle 1, ..., product along cycle r).
// Unit letters are handled here: phi_1(1) = 1 and phi_r(1, ...) = 0 for r >= 2.
template <class V>
class Hops {
 public:
  using MomentFn = std::function<V(const CycleWords&)>;

  Hops(std::string alphabet, MomentFn moment, V zero, V one, MultFn mu)
      : alphabet_(std::move(alphabet)), moment_(std::move(moment)), zero_(std::move(zero)),
        one_(std::move(one)), mu_(std::move(mu)) {}

  const std::string& alphabet() const { return alphabet_; }
  bool has_letter(char c) const { return c == kUnit || alphabet_.find(c) != std::string::npos; }
  const V& zero() const { return zero_; }
  const V& one() const { return one_; }

  // phi_r on the products along the given cycles.
  V phi(const CycleWords& cycles) const;
  // phi(V, pi)[word], multiplicative over the blocks of V.
  V phi(const PP& x, const std::string& word) const;
  // kappa(1_n, pi)[word] = sum over factorizations of (1_n, pi) of phi(a)[word] mu(b).
  V kappa(const Permutation& pi, const std::string& word) const;
  V kappa(const PP& x, const std::string& word) const;

  // Optional exact values for some cumulants, e.g. a one-letter distribution.
  using KappaHint = std::function<std::optional<V>(const CycleWords&)>;
  void set_kappa_hint(KappaHint h) { hint_ = std::move(h); }
  // Use kappa[..1..] = 0 for n >= 2 instead of summing; on by default.
  bool unit_shortcut = true;

 private:
  std::string alphabet_;
  MomentFn moment_;
  V zero_, one_;
  MultFn mu_;
  KappaHint hint_;
  mutable std::mutex mu_cache_;
  mutable std::map<std::string, V> phi_cache_, kappa_cache_;
};

using ExactHops = Hops<Scalar>;

// Exact space generated by one letter with the given distribution.
std::shared_ptr<ExactHops> distribution_hops(char letter, const Distribution& phi, int order);

// Space generated by A and B, free of all orders, built from the cumulants of
// A and the moments of B:
//   phi(U, gamma)[a1 b1, ..., an bn] = sum kappa_A(V, pi)[a] phi_B(W, sigma)[b],
// with every letter padded by the unit of the other side.
std::shared_ptr<ExactHops> free_join(std::shared_ptr<const ExactHops> A, std::shared_ptr<const ExactHops> B,
                                     int order);

struct MixedCumulantEntry {
  CycleWords cycles;
  double value = 0;
  double std_err = 0;  // 0 for exact oracles
  Scalar exact;
};
struct MixedCumulantReport {
  std::vector<MixedCumulantEntry> entries;
  double max_abs = 0;  // exact oracles
  double max_z = 0;    // stochastic oracles
  std::size_t count() const { return entries.size(); }
};
// All kappa(1_n, pi)[word], n <= up_to, whose letters come from at least two groups.
MixedCumulantReport mixed_cumulant_report(const ExactHops& o, const std::vector<std::string>& groups, int up_to);
MixedCumulantReport mixed_cumulant_report(const Hops<Replicates>& o, const std::vector<std::string>& groups,
                                          int up_to);
// Mean and batch standard error of a replicate vector.
std::pair<double, double> replicate_estimate(const Replicates& r);

// Deterministic variable with first-order moments x_1, x_2, ...: disc diagrams
// take prod x_{lambda_i}, everything else vanishes.
Distribution deterministic_distribution(const std::vector<Scalar>& x, int order);

// Coefficient n of the result is the z^n coefficient (not z^n / n!).
Series1 iz_series(const CumulantSet& ka, const Distribution& phib, int up_to);
Series1 iz_r(const CumulantSet& ka, const std::vector<Scalar>& x, int up_to);
// (sum kappa_n/n (x^n + y^n), sum kappa_{m,n}/(mn) (x^m + y^m)(x^n + y^n))
std::pair<Series2, Series2> rank2(const CumulantSet& ka, int up_to);

}  // namespace hofc

#include "hofc/hops_impl.hpp"
