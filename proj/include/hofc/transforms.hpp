#pragma once

#include <vector>

#include "hofc/multfn.hpp"
#include "hofc/series.hpp"

namespace hofc {

// Generating functions:
//  C(x) = 1 + sum kappa_n x^n,        M(x) = 1 + sum alpha_n x^n,
//  C2(x,y) = sum kappa_{m,n} x^m y^n, M2(x,y) = sum alpha_{m,n} x^m y^n.

// First order: C(x M(x)) = M(x).
Series1 c2m_first(const Series1& C);
Series1 m2c_first(const Series1& M);

// -xy d^2/dxdy log((x C(y) - y C(x)) / (x - y)), exact through trunc(C).
Series2 tilde_c(const Series1& C);
// The same quantity as an explicit rational expression in C and C'.
Series2 tilde_c_rational(const Series1& C);

// M2 = H(xM(x), yM(y)) (xM)'(x)/M(x) (yM)'(y)/M(y) with H = C2 + tilde_c(C).
Series2 c2m_second(const Series1& C, const Series2& C2);
// Inverse, through the compositional inverse of xM(x).
Series2 m2c_second(const Series1& M, const Series2& M2);

// Generating series from multiplicative tables and back.
Series1 first_order_series(const MultFn& f, int trunc);
Series2 second_order_series(const MultFn& f, int trunc);

// Residual of G(x,y) = G'(x)G'(y){R(G(x),G(y)) + 1/(G(x)-G(y))^2} - 1/(x-y)^2
// with G(x) = M(1/x)/x, G(x,y) = M2(1/x,1/y)/(xy), R(x,y) = C2(x,y)/(xy).
// The identity is tested at x = 1/(t x0), y = 1/(t y0) for rational x0 != y0,
// where every term becomes t^2 times a power series in t; the returned series
// holds the coefficients of the difference, exact through the truncation.
Series1 cauchy_residual(const Series1& M, const Series2& M2, const Series2& C2, const Scalar& x0,
                        const Scalar& y0);

}  // namespace hofc
