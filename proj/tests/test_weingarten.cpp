#include <doctest.h>

#include <cmath>
#include <random>

#include "hofc/errors.hpp"
#include "hofc/finite_n.hpp"
#include "hofc/weingarten.hpp"

using namespace hofc;

namespace {
Scalar ratio(int p, int q) {
  Scalar x(p, q);
  x.canonicalize();
  return x;
}
}  // namespace

TEST_CASE("small Weingarten values") {
  auto t = wg_table(2, 7);
  CHECK(t.at(YoungDiagram({1, 1})) == Scalar(1, 48));
  CHECK(t.at(YoungDiagram({2})) == Scalar(-1, 336));
  auto t1 = wg_table(1, 5);
  CHECK(t1.at(YoungDiagram({1})) == Scalar(1, 5));
  // Wg(1^2) = 1/(N^2-1), Wg(2) = -1/(N(N^2-1)) as rational functions
  for (int N : {2, 3, 10}) {
    auto u = wg_table(2, N);
    CHECK(u.at(YoungDiagram({1, 1})) == Scalar(1, N * N - 1));
    CHECK(u.at(YoungDiagram({2})) == Scalar(-1, N * (N * N - 1)));
  }
}

TEST_CASE("Weingarten function inverts the Gram matrix") {
  for (int n = 1; n <= 4; ++n)
    for (int N : {n, n + 3}) {
      auto t = wg_table(n, N);
      auto perms = all_permutations(n);
      Matrix W(perms.size(), std::vector<Scalar>(perms.size()));
      for (std::size_t a = 0; a < perms.size(); ++a)
        for (std::size_t b = 0; b < perms.size(); ++b) W[a][b] = t.at(perms[a] * perms[b].inverse());
      auto P = multiply(gram_matrix(n, N), W);
      for (std::size_t a = 0; a < perms.size(); ++a)
        for (std::size_t b = 0; b < perms.size(); ++b) CHECK(P[a][b] == (a == b ? 1 : 0));
      auto f = wg_table_full_basis(n, N);
      CHECK(f.values == t.values);
    }
}

TEST_CASE("Gram matrix is singular below n") {
  CHECK_THROWS_AS(wg_table(3, 2), SingularMatrix);
}

TEST_CASE("leading order is the Moebius function") {
  // N^{n + |sigma|} Wg(sigma) -> (-1)^{|sigma|} prod Catalan
  auto t = wg_table(3, 1000);
  Scalar scaled = t.at(YoungDiagram({3})) * pow(Scalar(1000), 5);
  double v3 = scaled.get_d();
  CHECK(v3 == doctest::Approx(2).epsilon(1e-4));
}

TEST_CASE("Haar moments") {
  for (int N = 2; N <= 6; ++N) {
    Scalar e = haar_monomial_expectation({1, 1}, {1, 1}, {1, 1}, {1, 1}, N);
    Scalar expected(2, N * (N + 1));
    expected.canonicalize();
    CHECK(e == expected);
    CHECK(haar_monomial_expectation({1}, {1}, {1}, {1}, N) == Scalar(1, N));
  }
  // unbalanced index multisets vanish
  CHECK(haar_monomial_expectation({1, 2}, {1, 1}, {1, 1}, {1, 1}, 4) == 0);
}

TEST_CASE("Haar moments are invariant under relabeling rows and columns") {
  std::vector<int> ip{1, 2, 3}, jp{1, 1, 2}, i{2, 1, 3}, j{1, 2, 1};
  Scalar base = haar_monomial_expectation(ip, jp, i, j, 5);
  auto relabel = [](std::vector<int> v, const std::vector<int>& map) {
    for (auto& x : v) x = map[x - 1];
    return v;
  };
  std::vector<int> rows{4, 1, 2}, cols{3, 5, 1};
  CHECK(haar_monomial_expectation(relabel(ip, rows), relabel(jp, cols), relabel(i, rows), relabel(j, cols), 5) ==
        base);
  // swapping the roles of u and conj(u) conjugates; the value is real
  CHECK(haar_monomial_expectation(i, j, ip, jp, 5) == base);
  CHECK_THROWS_AS(haar_monomial_expectation({1, 1, 1}, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}, 2), PreconditionError);
}

TEST_CASE("relative cumulants invert by Moebius summation") {
  WeingartenCalculus wg(4, 9);
  auto sigma = Permutation::parse("(1,2)(3)(4)", 4);
  auto V = sigma.orbits();
  auto W = SetPartition::coarsest(4);
  Scalar sum = 0;
  for (const auto& U : interval(V, W)) sum += wg.relative_cumulant(V, U, sigma);
  CHECK(sum == wg.wg(W, sigma));
  CHECK(wg.relative_cumulant(V, V, sigma) == wg.wg(V, sigma));
}

namespace {
FiniteNTable random_table(int n, int N, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-3, 3);
  MultFn f(n);
  for (const auto& y : diagrams_up_to(n)) f.set(y, ratio(d(rng), 1 + (d(rng) + 3) % 4));
  return {Scalar(N), f};
}
}  // namespace

TEST_CASE("finite-N routes agree and round-trip") {
  auto phi = random_table(3, 7, 5);
  auto a = kappaN_from_phiN(phi, 3), b = kappaN_from_phiN_solve(phi, 3);
  CHECK(a.values == b.values);
  CHECK(phiN_from_kappaN(a, 3).values == phi.values);
  auto kap = random_table(3, 5, 6);
  CHECK(kappaN_from_phiN(phiN_from_kappaN(kap, 3), 3).values == kap.values);
  CHECK_THROWS_AS(kappaN_from_phiN(random_table(3, 2, 1), 3), PreconditionError);
}

TEST_CASE("limit extrapolation") {
  PP x(SetPartition::coarsest(2), Permutation::gamma({2}));
  int e = kappa_scaling_exponent(x);
  CHECK(e == 2 - 2 + 1);
  std::vector<double> Ns{8, 16, 32, 64}, ks, se;
  std::vector<Scalar> Ns_q, ks_q;
  for (double N : Ns) {
    double v = 3 + 2 / (N * N) - 1 / std::pow(N, 4);
    ks.push_back(v / std::pow(N, e));
    se.push_back(1e-6 / std::pow(N, e));
    Scalar Nq(static_cast<int>(N));
    Ns_q.push_back(Nq);
    ks_q.push_back((3 + Scalar(2) / (Nq * Nq) - Scalar(1) / (Nq * Nq * Nq * Nq)) / pow(Nq, e));
  }
  auto fit = kappa_limit(Ns, ks, se, x);
  CHECK(fit.value == doctest::Approx(3).epsilon(1e-6));
  CHECK(fit.converged);
  bool exact = false;
  CHECK(kappa_limit_exact(Ns_q, ks_q, x, &exact) == 3);
  CHECK(exact);
}
