#include <doctest.h>

#include <algorithm>
#include <random>

#include "hofc/counting.hpp"
#include "hofc/errors.hpp"
#include "hofc/noncrossing.hpp"
#include "hofc/permutation.hpp"
#include "hofc/scalar.hpp"
#include "hofc/set_partition.hpp"
#include "hofc/young_diagram.hpp"

using namespace hofc;

TEST_CASE("composition is right to left") {
  auto p = Permutation::parse("(1,2)", 3), q = Permutation::parse("(2,3)", 3);
  CHECK((p * q).to_string() == "(1,2,3)");
  CHECK((q * p).to_string() == "(1,3,2)");
  CHECK((p * p).is_identity());
}

TEST_CASE("cycle notation round trip") {
  for (const auto& p : all_permutations(5)) CHECK(Permutation::parse(p.to_string(), 5) == p);
  CHECK(Permutation::parse(" ( 1 , 3 ) ( 2 ) ", 3) == Permutation::from_cycles(3, {{1, 3}}));
  CHECK_THROWS_AS(Permutation::parse("(1,1)", 2), ParseError);
  CHECK_THROWS_AS(Permutation::parse("(1,2", 2), ParseError);
}

TEST_CASE("length is a metric on S_n") {
  auto perms = all_permutations(4);
  for (const auto& a : perms)
    for (const auto& b : perms) {
      CHECK((a * b).length() <= a.length() + b.length());
      CHECK((a * b.inverse()).length() == (b * a.inverse()).length());
    }
}

TEST_CASE("gamma of a profile") {
  auto g = Permutation::gamma({2, 3});
  CHECK(g.to_string() == "(1,2)(3,4,5)");
  CHECK(g.cycle_type() == YoungDiagram({3, 2}));
}

TEST_CASE("set partition lattice") {
  auto parts = enumerate_partitions(4);
  CHECK(parts.size() == 15);  // Bell number
  for (const auto& a : parts)
    for (const auto& b : parts) {
      auto j = a.join(b), m = a.meet(b);
      CHECK(a.leq(j));
      CHECK(b.leq(j));
      CHECK(m.leq(a));
      CHECK(m.leq(b));
      CHECK(a.join(b) == b.join(a));
    }
  // sum over [0, 1] of the Moebius function vanishes
  Scalar s = 0;
  for (const auto& p : parts) s += partition_moebius(SetPartition::finest(4), p);
  CHECK(s == 0);
  CHECK(partition_moebius(SetPartition::finest(4), SetPartition::coarsest(4)) == -6);
}

TEST_CASE("young diagrams") {
  CHECK(diagrams_of(5).size() == 7);
  CHECK(diagrams_up_to(8).size() == 1 + 1 + 2 + 3 + 5 + 7 + 11 + 15 + 22 - 1);
  CHECK(YoungDiagram::parse("2,2,1").class_size() == 15);
  CHECK(YoungDiagram({1, 3}) == YoungDiagram({3, 1}));
}

TEST_CASE("scalars print as p/q") {
  CHECK(to_pq(Scalar(3)) == "3/1");
  CHECK(to_text(Scalar(-1)) == "-1");
  CHECK(parse_scalar("6/4") == Scalar(3, 2));
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("abc"), ParseError);
}

TEST_CASE("non-crossing counts") {
  for (int n = 1; n <= 7; ++n) CHECK(Integer(enumerate_nc(n).size()) == catalan(n));
  CHECK(annular_count(2, 2) == 18);
  CHECK(annular_count(1, 2) == 4);
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      auto list = enumerate_snc({m, n});
      Integer connected = 0;
      for (const auto& p : list) connected += is_connected(p, Permutation::gamma({m, n})) ? 1 : 0;
      CHECK(connected == annular_count(m, n));
    }
}

TEST_CASE("kreweras complement is an anti-isomorphism on NC(n)") {
  auto g = Permutation::gamma({5});
  for (const auto& p : enumerate_nc(5)) {
    auto k = kreweras_complement(p, g);
    CHECK(is_disc_noncrossing(k));
    CHECK(p.length() + k.length() == g.length());
  }
}

TEST_CASE("counting routes agree") {
  for (const auto& prof : std::vector<std::vector<int>>{{1}, {4}, {2, 2}, {1, 3}, {3, 3}, {1, 1, 2}}) {
    Integer c = zeta_power_closed_form(2, prof);
    CHECK(count_recursive(prof) == c);
    CHECK(count_snc_bruteforce(prof) == c);
  }
  CHECK(zeta_power_closed_form(2, {2, 2}) == 18);
  CHECK(count_recursive2(1, 2) == 4);
}
