#include <doctest.h>

#include <random>
#include <set>

#include "hofc/factorization.hpp"
#include "hofc/noncrossing.hpp"
#include "hofc/partitioned_permutation.hpp"
#include "hofc/counting.hpp"

using namespace hofc;

TEST_CASE("length of a partitioned permutation") {
  PP x(SetPartition::from_blocks(3, {{1, 2, 3}}), Permutation::parse("(1,2)", 3));
  CHECK(x.length() == 2 * 2 - 1);
  CHECK(PP::disc(Permutation::gamma({3})).length() == 2);
  CHECK_THROWS(PP(SetPartition::finest(2), Permutation::parse("(1,2)", 2)));
}

TEST_CASE("product is non-zero exactly when lengths add") {
  auto all = enumerate_ps(3);
  for (const auto& a : all)
    for (const auto& b : all) {
      auto r = multiply(a, b);
      SetPartition V = a.partition().join(b.partition());
      PP candidate(V.join(orbit_join(a.perm(), b.perm())), a.perm() * b.perm());
      bool adds = 2 * V.length() - (a.perm() * b.perm()).length() == a.length() + b.length();
      CHECK(r.is_zero() == !adds);
      if (!r.is_zero()) {
        CHECK(r.value().perm() == a.perm() * b.perm());
        CHECK(r.value().partition() == V);
        CHECK(r.value().length() == a.length() + b.length());
      }
    }
}

TEST_CASE("product is associative") {
  auto all = enumerate_ps(3);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int t = 0; t < 3000; ++t) {
    const auto &a = all[pick(rng)], &b = all[pick(rng)], &c = all[pick(rng)];
    auto ab = multiply(a, b), bc = multiply(b, c);
    auto left = ab.is_zero() ? ProductResult::zero() : multiply(ab.value(), c);
    auto right = bc.is_zero() ? ProductResult::zero() : multiply(a, bc.value());
    CHECK(left == right);
  }
}

TEST_CASE("pruned factorizations match brute force") {
  for (const auto& prof : std::vector<std::vector<int>>{{3}, {4}, {1, 2}, {2, 2}, {1, 1, 2}}) {
    int n = 0;
    for (int k : prof) n += k;
    PP target(SetPartition::coarsest(n), Permutation::gamma(prof));
    auto fast = factorizations_cached(target);
    auto slow = factorizations_bruteforce(target);
    std::set<Factorization> a(fast.begin(), fast.end()), b(slow.begin(), slow.end());
    CHECK(a == b);
    CHECK(a.size() == fast.size());
  }
}

TEST_CASE("PS_NC elements are planar and minimal") {
  for (const auto& prof : std::vector<std::vector<int>>{{4}, {2, 2}, {1, 3}}) {
    int n = 0;
    for (int k : prof) n += k;
    auto g = Permutation::gamma(prof);
    auto list = ps_nc(SetPartition::coarsest(n), g);
    for (const auto& x : list) {
      auto c = classify(x, g);
      CHECK(c.gamma_minimal);
      CHECK(multiply(x, PP::disc(x.perm().inverse() * g)) == ProductResult(PP(SetPartition::coarsest(n), g)));
    }
  }
  CHECK(Integer(ps_nc(SetPartition::coarsest(5), Permutation::gamma({5})).size()) == catalan(5));
}

TEST_CASE("disc tunnel split of the two-circle factorizations") {
  auto fam = factorizations_disc_tunnel({2, 2});
  PP target(SetPartition::coarsest(4), Permutation::gamma({2, 2}));
  CHECK(fam.total() == factorizations_cached(target).size());
}

TEST_CASE("text form") {
  PP x(SetPartition::from_blocks(3, {{1, 3}, {2}}), Permutation::parse("(1,3)(2)", 3));
  CHECK(x.to_string() == "({1,3}{2}, (1,3)(2))");
}
