#include "hofc/transforms.hpp"

#include "hofc/errors.hpp"

namespace hofc {

Series1 c2m_first(const Series1& C) {
  require(C[0] == 1, "C(x) must have constant term 1");
  int d = C.trunc();
  Series1 M = Series1::constant(d, 1);
  // Each pass fixes one more coefficient.
  for (int k = 0; k < d; ++k) M = C.compose(M.shift(1).truncated(d));
  return M;
}

Series1 m2c_first(const Series1& M) {
  require(M[0] == 1, "M(x) must have constant term 1");
  int d = M.trunc();
  Series1 w = M.shift(1).truncated(d).reversion();
  return M.compose(w);
}

Series2 tilde_c(const Series1& C) {
  require(C[0] == 1, "C(x) must have constant term 1");
  int d = C.trunc();
  // x C(y) - y C(x), exact through d + 1.
  Series2 num = Series2::in_y(C).mul_x() - Series2::in_x(C).mul_y();
  Series2 Q = num.divide_x_minus_y();
  Series2 L = Q.log();
  return -(L.dx().dy().mul_x().mul_y());
}

Series2 tilde_c_rational(const Series1& C) {
  // -xy [ (C(x) - xC'(x))(C(y) - yC'(y)) / (xC(y) - yC(x))^2 - 1/(x-y)^2 ]
  //  = -xy [ A(x)A(y) - Q^2 ] / ((x - y)^2 Q^2),  Q = (xC(y) - yC(x)) / (x - y).
  int d = C.trunc();
  Series1 A = C - C.derivative().shift(1).truncated(std::min(d, C.trunc()));
  Series2 num = Series2::in_y(C).mul_x() - Series2::in_x(C).mul_y();
  Series2 Q = num.divide_x_minus_y();
  Series2 top = Series2::in_x(A) * Series2::in_y(A) - Q * Q;
  Series2 r = top.divide_x_minus_y().divide_x_minus_y();
  Series2 out = -(r * (Q * Q).inverse()).mul_x().mul_y();
  return out;
}

Series2 c2m_second(const Series1& C, const Series2& C2) {
  int d = std::min(C.trunc(), C2.trunc());
  Series1 M = c2m_first(C.truncated(d));
  Series2 H = C2.truncated(d) + tilde_c(C.truncated(d));
  Series1 u = M.shift(1).truncated(d);
  Series1 fx = M.shift(1).derivative() * M.inverse();  // (xM)'/M
  Series2 comp = H.compose(u, u);
  return comp * Series2::in_x(fx) * Series2::in_y(fx);
}

Series2 m2c_second(const Series1& M, const Series2& M2) {
  int d = std::min(M.trunc(), M2.trunc());
  Series1 Md = M.truncated(d);
  Series1 C = m2c_first(Md);
  Series1 fx = Md.shift(1).derivative() * Md.inverse();
  // H(u(x), u(y)) = M2 / (fx(x) fx(y)); substitute x -> w(x), the inverse of u.
  Series2 K = M2.truncated(d) * (Series2::in_x(fx) * Series2::in_y(fx)).inverse();
  Series1 w = Md.shift(1).truncated(d).reversion();
  Series2 H = K.compose(w, w);
  return H - tilde_c(C);
}

Series1 first_order_series(const MultFn& f, int trunc) {
  Series1 s = Series1::constant(trunc, 1);
  for (int n = 1; n <= trunc; ++n) s[n] = f.at(YoungDiagram({n}));
  return s;
}

Series2 second_order_series(const MultFn& f, int trunc) {
  Series2 s(trunc);
  for (int m = 1; m < trunc; ++m)
    for (int n = 1; m + n <= trunc; ++n) s.at(m, n) = f.at(YoungDiagram({m, n}));
  return s;
}

Series1 cauchy_residual(const Series1& M, const Series2& M2, const Series2& C2, const Scalar& x0,
                        const Scalar& y0) {
  require(x0 != y0, "Cauchy form check needs distinct sample points");
  require(x0 != 0 && y0 != 0, "Cauchy form check needs non-zero sample points");
  int d = std::min({M.trunc(), M2.trunc(), C2.trunc()});
  auto scale = [&](const Series1& f, const Scalar& a) {
    Series1 s(d);
    for (int k = 0; k <= d; ++k) s[k] = f[k] * hofc::pow(a, k);
    return s;
  };
  Series1 Mx = scale(M.truncated(d), x0), My = scale(M.truncated(d), y0);
  // G(X) = t g(t), G'(X) = t^2 dg(t) at X = 1/(t x0).
  Series1 gx = Mx * x0, gy = My * y0;
  Series1 dMx = scale(M.shift(1).derivative().truncated(d), x0);
  Series1 dMy = scale(M.shift(1).derivative().truncated(d), y0);
  Series1 dgx = dMx * (-x0 * x0), dgy = dMy * (-y0 * y0);
  // G(X, Y) = t^2 x0 y0 M2(t x0, t y0)
  Series1 lhs = M2.truncated(d).along_ray(x0, y0) * (x0 * y0);
  // G'(X)G'(Y) R(G(X), G(Y)) = t^2 dgx dgy C2(t gx, t gy) / (gx gy)
  Series1 c2 = C2.truncated(d).compose_ray(gx.shift(1).truncated(d), gy.shift(1).truncated(d));
  Series1 rhs = dgx * dgy * c2 / (gx * gy);
  Series1 diff = gx - gy;
  Series1 sing = dgx * dgy / (diff * diff);
  Scalar pole = x0 * x0 * y0 * y0 / ((x0 - y0) * (x0 - y0));
  int e = std::min({lhs.trunc(), rhs.trunc(), sing.trunc()});
  Series1 res = lhs.truncated(e) - rhs.truncated(e) - sing.truncated(e) + Series1::constant(e, pole);
  return res;
}

}  // namespace hofc
