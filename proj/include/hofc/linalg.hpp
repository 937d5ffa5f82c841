#pragma once

#include <vector>

#include "hofc/scalar.hpp"

namespace hofc {

using Matrix = std::vector<std::vector<Scalar>>;

// Exact Gaussian elimination; throws SingularMatrix.
std::vector<Scalar> solve(Matrix A, std::vector<Scalar> b);
Matrix inverse(Matrix A);
Matrix multiply(const Matrix& A, const Matrix& B);

}  // namespace hofc
