#include "hofc/finite_n.hpp"

#include <cmath>
#include <map>

#include <Eigen/Dense>

#include "hofc/errors.hpp"

namespace hofc {

namespace {

Scalar power(const Scalar& N, int k) {
  Scalar r = 1;
  for (int i = 0; i < k; ++i) r *= N;
  return r;
}

void require_table_order(const FiniteNTable& t, int n) {
  require(n >= 1, "finite-N tables need n >= 1");
  require(t.N.get_den() == 1 && t.N >= n, "finite-N system needs an integer N >= n");
}

}  // namespace

Scalar gg_function(const Permutation& pi, const FiniteNTable& phi, const WeingartenCalculus& wg) {
  Scalar acc = 0;
  for (const auto& x : enumerate_ps(pi.size()))
    acc += wg.wg(x.perm() * pi.inverse()) * phi.values.evaluate(x);
  return acc;
}

Scalar gg_function(const PP& x, const FiniteNTable& phi, const WeingartenCalculus& wg) {
  Scalar r = 1;
  for (const auto& b : x.partition().blocks()) r *= gg_function(x.perm().restrict_to(b), phi, wg);
  return r;
}

FiniteNTable kappaN_from_phiN(const FiniteNTable& phi, int n) {
  require_table_order(phi, n);
  WeingartenCalculus wg(n, phi.N);
  FiniteNTable out{phi.N, MultFn(n)};
  for (int m = 1; m <= n; ++m) {
    auto ps = enumerate_ps(m);
    SetPartition one = SetPartition::coarsest(m);
    for (const auto& d : diagrams_of(m)) {
      Permutation pi = Permutation::of_type(d);
      Permutation pinv = pi.inverse();
      Scalar acc = 0;
      for (const auto& x : ps) {
        Scalar f = phi.values.evaluate(x);
        if (f == 0) continue;
        Permutation s = x.perm() * pinv;
        acc += f * wg.relative_cumulant(pi.orbits().join(x.partition()), one, s);
      }
      out.values.set(d, acc);
    }
  }
  return out;
}

FiniteNTable kappaN_from_phiN_solve(const FiniteNTable& phi, int n) {
  require_table_order(phi, n);
  require(n <= 4, "the full partitioned-permutation solve is limited to n <= 4");
  FiniteNTable out{phi.N, MultFn(n)};
  for (int m = 1; m <= n; ++m) {
    // Unknowns and equations are both indexed by PS(m); no multiplicativity is assumed.
    auto ps = enumerate_ps(m);
    std::size_t k = ps.size();
    Matrix A(k, std::vector<Scalar>(k, Scalar(0)));
    std::vector<Scalar> rhs(k);
    std::vector<Scalar> pw(m + 1);
    for (int e = 0; e <= m; ++e) pw[e] = power(phi.N, e);
    std::map<PP, std::size_t> row;
    for (std::size_t r = 0; r < k; ++r) row[ps[r]] = r;
    for (std::size_t r = 0; r < k; ++r) rhs[r] = phi.values.evaluate(ps[r]);
    for (std::size_t c = 0; c < k; ++c) {
      const PP& v = ps[c];
      Permutation pinv = v.perm().inverse();
      for (const auto& gamma : all_permutations(m)) {
        Permutation g = gamma * pinv;
        SetPartition U = v.partition().join(g.orbits());
        A[row.at(PP(U, gamma))][c] += pw[g.cycle_count()];
      }
    }
    std::vector<Scalar> kappa;
    try {
      kappa = solve(A, rhs);
    } catch (const SingularMatrix&) {
      throw SingularMatrix("finite-N moment system is singular at N = " + to_text(phi.N));
    }
    SetPartition one = SetPartition::coarsest(m);
    for (const auto& d : diagrams_of(m)) out.values.set(d, kappa[row.at(PP(one, Permutation::of_type(d)))]);
  }
  return out;
}

FiniteNTable phiN_from_kappaN(const FiniteNTable& kappa, int n) {
  require_table_order(kappa, n);
  FiniteNTable out{kappa.N, MultFn(n)};
  for (int m = 1; m <= n; ++m) {
    auto ps = enumerate_ps(m);
    std::vector<Scalar> pw(m + 1);
    for (int e = 0; e <= m; ++e) pw[e] = power(kappa.N, e);
    for (const auto& d : diagrams_of(m)) {
      Permutation gamma = Permutation::of_type(d);
      Scalar acc = 0;
      for (const auto& v : ps) {
        Permutation g = gamma * v.perm().inverse();
        if (v.partition().join(g.orbits()).block_count() != 1) continue;
        Scalar k = kappa.values.evaluate(v);
        if (k != 0) acc += k * pw[g.cycle_count()];
      }
      out.values.set(d, acc);
    }
  }
  return out;
}

int kappa_scaling_exponent(const PP& x) {
  return x.size() - 2 * x.partition().block_count() + x.perm().cycle_count();
}

LimitFit kappa_limit(const std::vector<double>& Ns, const std::vector<double>& kappas,
                     const std::vector<double>& std_errs, const PP& x) {
  std::size_t k = Ns.size();
  require(k >= 3, "kappa_limit needs at least three values of N");
  require(kappas.size() == k && std_errs.size() == k, "kappa_limit inputs must have equal length");
  for (std::size_t i = 1; i < k; ++i) require(Ns[i] > Ns[i - 1], "kappa_limit needs increasing N");
  int e = kappa_scaling_exponent(x);
  Eigen::MatrixXd X(k, 3);
  Eigen::VectorXd y(k), w(k);
  for (std::size_t i = 0; i < k; ++i) {
    double h = 1.0 / (Ns[i] * Ns[i]);
    double s = std::pow(Ns[i], e);
    X(i, 0) = 1;
    X(i, 1) = h;
    X(i, 2) = h * h;
    y(i) = s * kappas[i];
    // Zero errors mean exact input; weight uniformly then.
    double se = s * std_errs[i];
    w(i) = se > 0 ? 1.0 / (se * se) : 1.0;
  }
  Eigen::MatrixXd XtW = X.transpose() * w.asDiagonal();
  Eigen::Matrix3d normal = XtW * X;
  Eigen::Vector3d c = normal.ldlt().solve(XtW * y);
  Eigen::Matrix3d cov = normal.inverse();
  LimitFit fit;
  fit.value = c(0);
  bool have_errors = false;
  for (double s : std_errs) have_errors = have_errors || s > 0;
  fit.std_err = have_errors ? std::sqrt(std::max(0.0, cov(0, 0))) : 0.0;
  Eigen::VectorXd r = y - X * c;
  double chi2 = 0;
  for (std::size_t i = 0; i < k; ++i) chi2 += w(i) * r(i) * r(i);
  fit.residual = k > 3 ? chi2 / static_cast<double>(k - 3) : 0.0;
  double hmax = X(0, 1);
  double correction = std::abs(c(1) * hmax) + std::abs(c(2) * hmax * hmax);
  double scale = std::max(std::abs(c(0)), 3 * fit.std_err);
  fit.converged = correction <= 0.5 * scale + 1e-12;
  if (have_errors && k > 3 && fit.residual > 4.0) fit.converged = false;
  return fit;
}

Scalar kappa_limit_exact(const std::vector<Scalar>& Ns, const std::vector<Scalar>& kappas, const PP& x,
                         bool* exact_fit) {
  std::size_t k = Ns.size();
  require(k >= 3, "kappa_limit needs at least three values of N");
  require(kappas.size() == k, "kappa_limit inputs must have equal length");
  for (std::size_t i = 1; i < k; ++i) require(Ns[i] > Ns[i - 1], "kappa_limit needs increasing N");
  require(Ns[0] > 0, "kappa_limit needs positive N");
  int e = kappa_scaling_exponent(x);
  Matrix X(k, std::vector<Scalar>(3));
  std::vector<Scalar> y(k);
  for (std::size_t i = 0; i < k; ++i) {
    Scalar h = 1 / (Ns[i] * Ns[i]);
    X[i] = {Scalar(1), h, h * h};
    y[i] = (e >= 0 ? power(Ns[i], e) : 1 / power(Ns[i], -e)) * kappas[i];
  }
  // Normal equations; with three points they reduce to interpolation.
  Matrix normal(3, std::vector<Scalar>(3, Scalar(0)));
  std::vector<Scalar> rhs(3, Scalar(0));
  for (std::size_t i = 0; i < k; ++i)
    for (int a = 0; a < 3; ++a) {
      rhs[a] += X[i][a] * y[i];
      for (int b = 0; b < 3; ++b) normal[a][b] += X[i][a] * X[i][b];
    }
  auto c = solve(normal, rhs);
  if (exact_fit) {
    *exact_fit = true;
    for (std::size_t i = 0; i < k; ++i)
      if (X[i][0] * c[0] + X[i][1] * c[1] + X[i][2] * c[2] != y[i]) *exact_fit = false;
  }
  return c[0];
}

}  // namespace hofc
