#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hofc {

// Exact rational field used by every exact computation.
using Scalar = mpq_class;
using Integer = mpz_class;

// "p/q" with the denominator always present, as used in JSON.
std::string to_pq(const Scalar& x);
// Canonical short form: "-1", "1/15".
std::string to_text(const Scalar& x);
// Accepts "p", "p/q", and finite decimals such as "0.25".
Scalar parse_scalar(std::string_view text);

Scalar pow(const Scalar& x, int e);
Integer factorial(int n);
Integer binomial(int n, int k);

}  // namespace hofc
