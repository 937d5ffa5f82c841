#include <doctest.h>

#include <random>

#include "hofc/counting.hpp"
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
MultFn random_fn(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-5, 5);
  MultFn f(n);
  for (const auto& y : diagrams_up_to(n)) f.set(y, ratio(d(rng), 1 + (d(rng) + 5) % 3));
  return f;
}
}  // namespace

TEST_CASE("zeta and delta") {
  auto z = MultFn::zeta(4), d = MultFn::delta(4);
  CHECK(z.at(YoungDiagram({2, 2})) == 0);
  CHECK(z.at(YoungDiagram({3})) == 1);
  CHECK(d.at(YoungDiagram({1})) == 1);
  CHECK(d.at(YoungDiagram({2})) == 0);
}

TEST_CASE("zeta * zeta counts factorizations") {
  auto zz = convolve(MultFn::zeta(4), MultFn::zeta(4), 4);
  CHECK(zz.at(YoungDiagram({3})) == 5);
  CHECK(zz.at(YoungDiagram({4})) == 14);
  CHECK(zz.at(YoungDiagram({2, 2})) == 18);
  CHECK(zz.at(YoungDiagram({1, 2})) == 4);
  CHECK(zz.at(YoungDiagram({1, 1})) == 1);
}

TEST_CASE("moebius values") {
  auto mu = moebius_recursion(5);
  CHECK(mu.at(YoungDiagram({2})) == -1);
  CHECK(mu.at(YoungDiagram({3})) == 2);
  CHECK(mu.at(YoungDiagram({4})) == -5);
  for (int n = 1; n <= 5; ++n) CHECK(mu.at(YoungDiagram({n})) == (n % 2 ? 1 : -1) * Scalar(catalan(n - 1)));
}

TEST_CASE("moebius algorithms agree and invert zeta") {
  auto a = moebius_recursion(5), b = moebius_geometric(5), c = moebius_table(5);
  CHECK(a == b);
  CHECK(a == c);
  CHECK(convolve(a, MultFn::zeta(5), 5) == MultFn::delta(5));
  CHECK(convolve(MultFn::zeta(5), a, 5) == MultFn::delta(5));
}

TEST_CASE("delta is the unit and convolution is associative") {
  auto f = random_fn(4, 1), g = random_fn(4, 2), h = random_fn(4, 3);
  CHECK(convolve(f, MultFn::delta(4), 4) == f);
  CHECK(convolve(MultFn::delta(4), f, 4) == f);
  CHECK(convolve(convolve(f, g, 4), h, 4) == convolve(f, convolve(g, h, 4), 4));
}

TEST_CASE("convolution evaluates on a single target") {
  auto f = random_fn(4, 4), g = random_fn(4, 5);
  auto fg = convolve(f, g, 4);
  PP t(SetPartition::coarsest(4), Permutation::gamma({1, 3}));
  CHECK(convolve_at(f, g, t) == fg.at(YoungDiagram({3, 1})));
}

TEST_CASE("missing diagrams are reported") {
  MultFn f(3);
  f.set(YoungDiagram({1}), 1);
  CHECK_THROWS(f.at(YoungDiagram({2})));
}
