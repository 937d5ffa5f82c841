#include "hofc/series.hpp"

#include <algorithm>

#include "hofc/errors.hpp"

namespace hofc {

Series1::Series1(int trunc) : trunc_(trunc), c_(trunc + 1, Scalar(0)) {
  require(trunc >= 0, "negative truncation");
}

Series1::Series1(int trunc, std::vector<Scalar> coeffs) : Series1(trunc) {
  for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= trunc; ++k) c_[k] = coeffs[k];
}

Series1 Series1::constant(int trunc, const Scalar& c) {
  Series1 s(trunc);
  s.c_[0] = c;
  return s;
}

Series1 Series1::variable(int trunc) {
  Series1 s(trunc);
  if (trunc >= 1) s.c_[1] = 1;
  return s;
}

Series1 Series1::truncated(int d) const {
  require(d <= trunc_, "cannot extend a truncated series");
  Series1 s(d);
  for (int k = 0; k <= d; ++k) s.c_[k] = c_[k];
  return s;
}

int Series1::valuation() const {
  for (int k = 0; k <= trunc_; ++k)
    if (c_[k] != 0) return k;
  return trunc_ + 1;
}

Series1 Series1::operator+(const Series1& o) const {
  Series1 s(std::min(trunc_, o.trunc_));
  for (int k = 0; k <= s.trunc_; ++k) s.c_[k] = c_[k] + o.c_[k];
  return s;
}

Series1 Series1::operator-(const Series1& o) const { return *this + (-o); }

Series1 Series1::operator-() const {
  Series1 s(*this);
  for (auto& x : s.c_) x = -x;
  return s;
}

Series1 Series1::operator*(const Series1& o) const {
  Series1 s(std::min(trunc_, o.trunc_));
  for (int i = 0; i <= s.trunc_; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; i + j <= s.trunc_; ++j) s.c_[i + j] += c_[i] * o.c_[j];
  }
  return s;
}

Series1 Series1::operator*(const Scalar& x) const {
  Series1 s(*this);
  for (auto& v : s.c_) v *= x;
  return s;
}

Series1 Series1::inverse() const {
  require(c_[0] != 0, "series inverse needs a non-zero constant term");
  Series1 s(trunc_);
  Scalar inv0 = 1 / c_[0];
  s.c_[0] = inv0;
  for (int k = 1; k <= trunc_; ++k) {
    Scalar acc = 0;
    for (int j = 1; j <= k; ++j) acc += c_[j] * s.c_[k - j];
    s.c_[k] = -acc * inv0;
  }
  return s;
}

Series1 Series1::operator/(const Series1& o) const { return *this * o.inverse(); }

Series1 Series1::derivative() const {
  Series1 s(std::max(trunc_ - 1, 0));
  for (int k = 1; k <= trunc_; ++k) s.c_[k - 1] = c_[k] * k;
  return s;
}

Series1 Series1::shift(int k) const {
  Series1 s(trunc_ + k);
  for (int i = 0; i <= trunc_; ++i) s.c_[i + k] = c_[i];
  return s;
}

Series1 Series1::unshift(int k) const {
  for (int i = 0; i < k && i <= trunc_; ++i) require(c_[i] == 0, "unshift: leading coefficients must vanish");
  Series1 s(trunc_ - k);
  for (int i = k; i <= trunc_; ++i) s.c_[i - k] = c_[i];
  return s;
}

Series1 Series1::log() const {
  require(c_[0] == 1, "series log needs constant term 1");
  Series1 q = derivative() * truncated(std::max(trunc_ - 1, 0)).inverse();
  Series1 s(trunc_);
  for (int k = 1; k <= trunc_; ++k) s.c_[k] = q.c_[k - 1] / k;
  return s;
}

Series1 Series1::pow(int k) const {
  require(k >= 0, "negative series power");
  Series1 r = constant(trunc_, 1), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

Series1 Series1::compose(const Series1& g) const {
  require(g.c_[0] == 0, "composition needs g(0) = 0");
  // The result is exact through min(trunc f, trunc g) when g has valuation >= 1.
  int d = std::min(trunc_, g.trunc_);
  Series1 out(d), gp = constant(d, 1);
  Series1 gd = g.truncated(d);
  for (int k = 0; k <= d; ++k) {
    if (c_[k] != 0) out = out + gp * c_[k];
    gp = gp * gd;
  }
  return out;
}

Series1 Series1::reversion() const {
  require(c_[0] == 0 && trunc_ >= 1 && c_[1] != 0, "reversion needs f(0) = 0 and f'(0) != 0");
  // Newton-free fixed point: g <- (x - (f(g) - f1 g)) / f1, one new coefficient per pass.
  Series1 g(trunc_);
  g.c_[1] = 1 / c_[1];
  for (int k = 2; k <= trunc_; ++k) {
    Series1 fg = compose(g);
    g.c_[k] -= fg.c_[k] / c_[1];
  }
  return g;
}

Scalar Series1::evaluate(const Scalar& x) const {
  Scalar acc = 0;
  for (int k = trunc_; k >= 0; --k) acc = acc * x + c_[k];
  return acc;
}

Series2::Series2(int trunc) : trunc_(trunc) {
  require(trunc >= 0, "negative truncation");
  c_.resize(trunc + 1);
  for (int i = 0; i <= trunc; ++i) c_[i].assign(trunc - i + 1, Scalar(0));
}

Series2 Series2::constant(int trunc, const Scalar& c) {
  Series2 s(trunc);
  s.c_[0][0] = c;
  return s;
}

Series2 Series2::in_x(const Series1& f) {
  Series2 s(f.trunc());
  for (int i = 0; i <= f.trunc(); ++i) s.c_[i][0] = f[i];
  return s;
}

Series2 Series2::in_y(const Series1& f) {
  Series2 s(f.trunc());
  for (int j = 0; j <= f.trunc(); ++j) s.c_[0][j] = f[j];
  return s;
}

Scalar Series2::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i + j > trunc_) return 0;
  return c_[i][j];
}

Scalar& Series2::at(int i, int j) {
  require(i >= 0 && j >= 0 && i + j <= trunc_, "coefficient beyond truncation");
  return c_[i][j];
}

Series2 Series2::truncated(int d) const {
  require(d <= trunc_, "cannot extend a truncated series");
  Series2 s(d);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) s.c_[i][j] = c_[i][j];
  return s;
}

Series2 Series2::operator+(const Series2& o) const {
  Series2 s(std::min(trunc_, o.trunc_));
  for (int i = 0; i <= s.trunc_; ++i)
    for (int j = 0; i + j <= s.trunc_; ++j) s.c_[i][j] = c_[i][j] + o.c_[i][j];
  return s;
}

Series2 Series2::operator-(const Series2& o) const { return *this + (-o); }

Series2 Series2::operator-() const {
  Series2 s(*this);
  for (auto& row : s.c_)
    for (auto& x : row) x = -x;
  return s;
}

Series2 Series2::operator*(const Series2& o) const {
  Series2 s(std::min(trunc_, o.trunc_));
  int d = s.trunc_;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) {
      if (c_[i][j] == 0) continue;
      for (int k = 0; i + j + k <= d; ++k)
        for (int l = 0; i + j + k + l <= d; ++l)
          if (o.c_[k][l] != 0) s.c_[i + k][j + l] += c_[i][j] * o.c_[k][l];
    }
  return s;
}

Series2 Series2::operator*(const Scalar& x) const {
  Series2 s(*this);
  for (auto& row : s.c_)
    for (auto& v : row) v *= x;
  return s;
}

Series2 Series2::inverse() const {
  require(c_[0][0] != 0, "series inverse needs a non-zero constant term");
  Series2 s(trunc_);
  Scalar inv0 = 1 / c_[0][0];
  for (int tot = 0; tot <= trunc_; ++tot)
    for (int i = 0; i <= tot; ++i) {
      int j = tot - i;
      Scalar acc = tot == 0 ? Scalar(1) : Scalar(0);
      for (int k = 0; k <= i; ++k)
        for (int l = 0; l <= j; ++l) {
          if (k == 0 && l == 0) continue;
          acc -= c_[k][l] * s.c_[i - k][j - l];
        }
      s.c_[i][j] = acc * inv0;
    }
  return s;
}

Series2 Series2::dx() const {
  Series2 s(std::max(trunc_ - 1, 0));
  for (int i = 1; i <= trunc_; ++i)
    for (int j = 0; i + j <= trunc_; ++j) s.c_[i - 1][j] = c_[i][j] * i;
  return s;
}

Series2 Series2::dy() const {
  Series2 s(std::max(trunc_ - 1, 0));
  for (int i = 0; i <= trunc_; ++i)
    for (int j = 1; i + j <= trunc_; ++j) s.c_[i][j - 1] = c_[i][j] * j;
  return s;
}

Series2 Series2::log() const {
  require(c_[0][0] == 1, "series log needs constant term 1");
  // Integrate d/dx log F = F_x / F along x, then add log F(0, y).
  Series2 q = dx() * truncated(std::max(trunc_ - 1, 0)).inverse();
  Series2 s(trunc_);
  for (int i = 1; i <= trunc_; ++i)
    for (int j = 0; i + j <= trunc_; ++j) s.c_[i][j] = q.c_[i - 1][j] / i;
  Series1 f0(trunc_);
  for (int j = 0; j <= trunc_; ++j) f0[j] = c_[0][j];
  Series1 l0 = f0.log();
  for (int j = 0; j <= trunc_; ++j) s.c_[0][j] = l0[j];
  return s;
}

Series2 Series2::mul_x() const {
  Series2 s(trunc_ + 1);
  for (int i = 0; i <= trunc_; ++i)
    for (int j = 0; i + j <= trunc_; ++j) s.c_[i + 1][j] = c_[i][j];
  return s;
}

Series2 Series2::mul_y() const {
  Series2 s(trunc_ + 1);
  for (int i = 0; i <= trunc_; ++i)
    for (int j = 0; i + j <= trunc_; ++j) s.c_[i][j + 1] = c_[i][j];
  return s;
}

Series2 Series2::divide_x_minus_y() const {
  require(trunc_ >= 1, "divide_x_minus_y needs trunc >= 1");
  Series2 q(trunc_ - 1);
  require(c_[0][0] == 0, "numerator does not vanish on the diagonal");
  for (int d = 1; d <= trunc_; ++d) {
    // f_{i,d-i} = q_{i-1,d-i} - q_{i,d-1-i}
    Scalar prev = 0;
    for (int i = 0; i < d; ++i) {
      Scalar qi = prev - c_[i][d - i];
      q.c_[i][d - 1 - i] = qi;
      prev = qi;
    }
    require(prev == c_[d][0], "numerator does not vanish on the diagonal");
  }
  return q;
}

Series2 Series2::compose(const Series1& u, const Series1& v) const {
  require(u[0] == 0 && v[0] == 0, "composition needs u(0) = v(0) = 0");
  int d = std::min({trunc_, u.trunc(), v.trunc()});
  std::vector<Series1> up(d + 1), vp(d + 1);
  up[0] = Series1::constant(d, 1);
  vp[0] = Series1::constant(d, 1);
  for (int k = 1; k <= d; ++k) {
    up[k] = up[k - 1] * u.truncated(d);
    vp[k] = vp[k - 1] * v.truncated(d);
  }
  Series2 s(d);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) {
      if (c_[i][j] == 0) continue;
      for (int a = i; a <= d; ++a) {
        if (up[i][a] == 0) continue;
        for (int b = j; a + b <= d; ++b) s.c_[a][b] += c_[i][j] * up[i][a] * vp[j][b];
      }
    }
  return s;
}

Series1 Series2::along_ray(const Scalar& x0, const Scalar& y0) const {
  Series1 s(trunc_);
  for (int i = 0; i <= trunc_; ++i)
    for (int j = 0; i + j <= trunc_; ++j) s[i + j] += c_[i][j] * hofc::pow(x0, i) * hofc::pow(y0, j);
  return s;
}

Series1 Series2::compose_ray(const Series1& a, const Series1& b) const {
  require(a[0] == 0 && b[0] == 0, "ray composition needs a(0) = b(0) = 0");
  int d = std::min({trunc_, a.trunc(), b.trunc()});
  std::vector<Series1> ap(d + 1), bp(d + 1);
  ap[0] = bp[0] = Series1::constant(d, 1);
  for (int k = 1; k <= d; ++k) {
    ap[k] = ap[k - 1] * a.truncated(d);
    bp[k] = bp[k - 1] * b.truncated(d);
  }
  Series1 s(d);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j)
      if (c_[i][j] != 0) s = s + ap[i] * bp[j] * c_[i][j];
  return s;
}

bool Series2::symmetric() const {
  for (int i = 0; i <= trunc_; ++i)
    for (int j = 0; i + j <= trunc_; ++j)
      if (c_[i][j] != c_[j][i]) return false;
  return true;
}

}  // namespace hofc
