#pragma once

#include <vector>

#include "hofc/scalar.hpp"

namespace hofc {

// Truncated power series in one variable, exact through degree trunc().
class Series1 {
 public:
  Series1() = default;
  explicit Series1(int trunc);
  Series1(int trunc, std::vector<Scalar> coeffs);  // missing coefficients are 0
  static Series1 constant(int trunc, const Scalar& c);
  static Series1 variable(int trunc);  // x

  int trunc() const { return trunc_; }
  const Scalar& operator[](int k) const { return c_[k]; }
  Scalar& operator[](int k) { return c_[k]; }
  Scalar coeff(int k) const { return k <= trunc_ ? c_[k] : Scalar(0); }
  Series1 truncated(int d) const;
  int valuation() const;  // index of the first non-zero coefficient, trunc+1 if none

  Series1 operator+(const Series1& o) const;
  Series1 operator-(const Series1& o) const;
  Series1 operator-() const;
  Series1 operator*(const Series1& o) const;
  Series1 operator*(const Scalar& s) const;
  // Division by a series with non-zero constant term.
  Series1 inverse() const;
  Series1 operator/(const Series1& o) const;
  Series1 derivative() const;      // trunc - 1
  Series1 shift(int k) const;      // times x^k, trunc + k
  Series1 unshift(int k) const;    // divided by x^k; first k coefficients must vanish
  Series1 log() const;             // constant term 1
  Series1 pow(int k) const;
  // f(g(x)) with g(0) = 0.
  Series1 compose(const Series1& g) const;
  // g with f(g(x)) = x; needs f(0) = 0 and f'(0) != 0.
  Series1 reversion() const;
  // Evaluation at a rational point of the truncated polynomial.
  Scalar evaluate(const Scalar& x) const;

  bool operator==(const Series1&) const = default;

 private:
  int trunc_ = 0;
  std::vector<Scalar> c_;
};

// Truncated power series in x, y, exact through total degree trunc().
class Series2 {
 public:
  Series2() = default;
  explicit Series2(int trunc);
  static Series2 constant(int trunc, const Scalar& c);
  static Series2 in_x(const Series1& f);  // f(x)
  static Series2 in_y(const Series1& f);  // f(y)

  int trunc() const { return trunc_; }
  // Coefficient of x^i y^j; zero above the truncation.
  Scalar coeff(int i, int j) const;
  Scalar& at(int i, int j);
  Series2 truncated(int d) const;

  Series2 operator+(const Series2& o) const;
  Series2 operator-(const Series2& o) const;
  Series2 operator-() const;
  Series2 operator*(const Series2& o) const;
  Series2 operator*(const Scalar& s) const;
  Series2 inverse() const;
  Series2 log() const;
  Series2 dx() const;
  Series2 dy() const;
  Series2 mul_x() const;
  Series2 mul_y() const;
  // F / (x - y) for F vanishing on the diagonal; throws otherwise.
  Series2 divide_x_minus_y() const;
  // H(u(x), v(y)) with u(0) = v(0) = 0.
  Series2 compose(const Series1& u, const Series1& v) const;
  // t -> F(t x0, t y0) as a series in t.
  Series1 along_ray(const Scalar& x0, const Scalar& y0) const;
  // H(a(t), b(t)) with a(0) = b(0) = 0.
  Series1 compose_ray(const Series1& a, const Series1& b) const;
  bool symmetric() const;

  bool operator==(const Series2&) const = default;

 private:
  int trunc_ = 0;
  std::vector<std::vector<Scalar>> c_;  // c_[i][j], i + j <= trunc_
};

}  // namespace hofc
