#include <doctest.h>

#include <algorithm>
#include <random>

#include "hofc/classical_cumulants.hpp"
#include "hofc/free_fluctuations.hpp"
#include "hofc/hops.hpp"
#include "hofc/moebius.hpp"
#include "hofc/multfn.hpp"

using namespace hofc;

namespace {
Scalar ratio(int p, int q) {
  Scalar x(p, q);
  x.canonicalize();
  return x;
}
}  // namespace

namespace {
// Semicircular variable: only the second free cumulant survives.
Distribution semicircular(int order) {
  MultFn k(order);
  for (const auto& d : diagrams_up_to(order)) k.set(d, d == YoungDiagram({2}) ? Scalar(1) : Scalar(0));
  return convolve(k, MultFn::zeta(order), order);
}

Distribution with_fluctuations(int order) {
  MultFn k(order);
  for (const auto& d : diagrams_up_to(order))
    k.set(d, d.length() <= 2 ? Scalar(1, d.size() + d.length()) : Scalar(0));
  return convolve(k, MultFn::zeta(order), order);
}
}  // namespace

TEST_CASE("one-letter cumulants are the Moebius convolution") {
  auto phi = with_fluctuations(4);
  auto kappa = convolve(phi, moebius_recursion(4), 4);
  auto h = distribution_hops('a', phi, 4);
  for (const auto& pi : all_permutations(4)) CHECK(h->kappa(pi, "aaaa") == kappa.evaluate(PP(SetPartition::coarsest(4), pi)));
  for (const auto& pi : all_permutations(3)) CHECK(h->kappa(pi, "aaa") == kappa.evaluate(PP(SetPartition::coarsest(3), pi)));
}

TEST_CASE("unit letter axioms") {
  auto h = distribution_hops('a', semicircular(3), 3);
  CHECK(h->phi(CycleWords{"1"}) == 1);
  CHECK(h->phi(CycleWords{"1", "aa"}) == 0);
  CHECK(h->kappa(Permutation::gamma({2}), "a1") == 0);
}

TEST_CASE("phi is invariant under cyclic rotation and relabeling") {
  auto A = distribution_hops('a', with_fluctuations(4), 4);
  auto B = distribution_hops('b', semicircular(4), 4);
  auto J = free_join(A, B, 4);
  CHECK(J->phi(CycleWords{"abab"}) == J->phi(CycleWords{"baba"}));
  CHECK(J->phi(CycleWords{"ab", "aab"}) == J->phi(CycleWords{"aba", "ba"}));
  auto g = Permutation::gamma({2, 2});
  auto s = Permutation::parse("(1,3)(2,4)", 4);
  CHECK(J->phi(PP(SetPartition::coarsest(4), g), "abab") ==
        J->phi(PP(SetPartition::coarsest(4), g.conjugate_by(s)), "abab"));
}

TEST_CASE("mixed cumulants of a free join vanish") {
  auto A = distribution_hops('a', with_fluctuations(4), 4);
  auto B = distribution_hops('b', with_fluctuations(4), 4);
  auto J = free_join(A, B, 4);
  auto rep = mixed_cumulant_report(*J, {"a", "b"}, 4);
  CHECK(rep.count() > 0);
  CHECK(rep.max_abs == 0);
}

TEST_CASE("second-order mixed moments of a free join") {
  // Centered letters, so Tr(ab) needs no correction terms.
  MultFn k(4);
  for (const auto& d : diagrams_up_to(4)) {
    bool has_one = std::find(d.parts().begin(), d.parts().end(), 1) != d.parts().end();
    k.set(d, d.length() <= 2 && !has_one ? Scalar(1, d.size() + d.length()) : Scalar(0));
  }
  auto phi = convolve(k, MultFn::zeta(4), 4);
  auto J = free_join(distribution_hops('a', phi, 4), distribution_hops('b', semicircular(4), 4), 4);
  auto alpha = [&](int e) { return J->phi(CycleWords{std::string(e, 'a')}); };
  auto beta = [&](int e) { return J->phi(CycleWords{std::string(e, 'b')}); };
  CHECK(alpha(1) == 0);
  Scalar pred = free_fluctuation_prediction<Scalar>({1}, {1}, {1}, {1}, alpha, beta);
  CHECK(pred == alpha(2) * beta(2));
  CHECK(J->phi(CycleWords{"ab", "ab"}) == pred);
  CHECK(free_fluctuation_prediction<Scalar>({1}, {1}, {1, 1}, {1, 1}, alpha, beta) == 0);
}

TEST_CASE("classical cumulants and Leonov-Shiryaev") {
  const int n = 4;
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  SubsetTable<Scalar> m(1u << n);
  m[0] = 1;
  for (std::size_t s = 1; s < m.size(); ++s) m[s] = ratio(d(rng), 1 + (d(rng) + 4) % 3);
  auto k = cumulants_from_moments<Scalar>(n, m);
  CHECK(moments_from_cumulants<Scalar>(n, k) == m);
  CHECK(cumulant_by_lattice<Scalar>(SetPartition::coarsest(n), m) == k.back());
  for (const auto& U : enumerate_partitions(n)) {
    auto blocks = U.blocks();
    int r = static_cast<int>(blocks.size());
    SubsetTable<Scalar> mp(1u << r);
    for (std::size_t s = 0; s < mp.size(); ++s) {
      std::uint32_t mask = 0;
      for (int b = 0; b < r; ++b)
        if (s >> b & 1) mask |= block_mask(blocks[b]);
      mp[s] = m[mask];
    }
    CHECK(leonov_shiryaev<Scalar>(U, k) == cumulants_from_moments<Scalar>(r, mp).back());
  }
}

TEST_CASE("gaussian pairings have no higher cumulants") {
  const int n = 4;
  SubsetTable<Scalar> m(1u << n, Scalar(0));
  m[0] = 1;
  for (std::uint32_t s = 0; s < m.size(); ++s) {
    int c = __builtin_popcount(s);
    if (c == 2) m[s] = 1;
    if (c == 4) m[s] = 3;
  }
  auto k = cumulants_from_moments<Scalar>(n, m);
  CHECK(k[0b0011] == 1);
  CHECK(k[0b1111] == 0);
  CHECK(k[0b0111] == 0);
}
