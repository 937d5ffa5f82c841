#include <doctest.h>

#include "hofc/moebius.hpp"
#include "hofc/multfn.hpp"
#include "hofc/series.hpp"
#include "hofc/transforms.hpp"

using namespace hofc;

namespace {
Series1 semicircle_cumulants(int t) {
  Series1 c(t);
  c[0] = 1;
  c[2] = 1;
  return c;
}
}  // namespace

TEST_CASE("series arithmetic") {
  Series1 x = Series1::variable(6);
  Series1 one = Series1::constant(6, 1);
  Series1 g = (one - x).inverse();
  for (int k = 0; k <= 6; ++k) CHECK(g[k] == 1);
  CHECK((g * (one - x)) == one);
  CHECK((one + x).log()[3] == Scalar(1, 3));
  Series1 f = x + x * x;
  CHECK(f.compose(f.reversion()) == x);
  CHECK(f.reversion().compose(f) == x);
}

TEST_CASE("two-variable series") {
  Series2 H = Series2::in_x(Series1::variable(5)) - Series2::in_y(Series1::variable(5));
  CHECK(H.divide_x_minus_y() == Series2::constant(5, 1).truncated(4));
  CHECK_THROWS(Series2::in_x(Series1::variable(5)).divide_x_minus_y());
  CHECK(Series2::constant(4, 2).symmetric());
}

TEST_CASE("semicircle moments and fluctuations") {
  auto M = c2m_first(semicircle_cumulants(8));
  CHECK(M[2] == 1);
  CHECK(M[4] == 2);
  CHECK(M[6] == 5);
  CHECK(M[8] == 14);
  auto M2 = c2m_second(semicircle_cumulants(8), Series2(8));
  CHECK(M2.coeff(1, 1) == 1);
  CHECK(M2.coeff(2, 2) == 2);
  CHECK(M2.coeff(1, 3) == 3);
  CHECK(M2.coeff(1, 2) == 0);
  CHECK(M2.symmetric());
}

TEST_CASE("transforms invert each other") {
  Series1 C(6, {1, 2, -1, Scalar(1, 2), 3, 0, 1});
  Series2 C2(6);
  C2.at(1, 1) = 1;
  C2.at(1, 2) = C2.at(2, 1) = Scalar(-2, 3);
  C2.at(3, 3) = 5;
  auto M = c2m_first(C);
  auto M2 = c2m_second(C, C2);
  CHECK(m2c_first(M) == C);
  CHECK(m2c_second(M, M2) == C2);
}

TEST_CASE("rational and composed tilde-c agree") {
  Series1 C(7, {1, 1, 2, -1, 0, 3, 1, 2});
  CHECK(tilde_c(C) == tilde_c_rational(C));
}

TEST_CASE("series agree with convolution with zeta") {
  MultFn kappa(6);
  for (const auto& d : diagrams_up_to(6)) kappa.set(d, d.length() <= 2 ? Scalar(d.size() + d.length()) / 3 : Scalar(0));
  auto phi = convolve(kappa, MultFn::zeta(6), 6);
  auto C = first_order_series(kappa, 6);
  auto C2 = second_order_series(kappa, 6);
  CHECK(c2m_first(C) == first_order_series(phi, 6));
  CHECK(c2m_second(C, C2) == second_order_series(phi, 6));
}

TEST_CASE("Cauchy form holds along rays") {
  Series1 C(6, {1, 1, 1, 0, 2});
  Series2 C2(6);
  C2.at(1, 1) = 2;
  C2.at(2, 1) = C2.at(1, 2) = 1;
  auto M = c2m_first(C);
  auto M2 = c2m_second(C, C2);
  for (const auto& [x0, y0] : std::vector<std::pair<Scalar, Scalar>>{{2, 3}, {Scalar(1, 2), Scalar(-1, 3)}}) {
    auto r = cauchy_residual(M, M2, C2, x0, y0);
    for (int k = 0; k <= r.trunc(); ++k) CHECK(r[k] == 0);
  }
}
