#include "hofc/linalg.hpp"

#include "hofc/errors.hpp"

namespace hofc {

namespace {

// Reduces [A | B] in place so that A becomes the identity.
void eliminate(Matrix& A, Matrix& B) {
  std::size_t n = A.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && A[piv][c] == 0) ++piv;
    if (piv == n) throw SingularMatrix("singular matrix at column " + std::to_string(c));
    std::swap(A[piv], A[c]);
    std::swap(B[piv], B[c]);
    Scalar inv = 1 / A[c][c];
    for (auto& x : A[c]) x *= inv;
    for (auto& x : B[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || A[r][c] == 0) continue;
      Scalar f = A[r][c];
      for (std::size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
      for (std::size_t k = 0; k < B[r].size(); ++k) B[r][k] -= f * B[c][k];
    }
  }
}

}  // namespace

std::vector<Scalar> solve(Matrix A, std::vector<Scalar> b) {
  require(A.size() == b.size(), "solve: dimension mismatch");
  Matrix B(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) B[i] = {b[i]};
  eliminate(A, B);
  std::vector<Scalar> x(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) x[i] = B[i][0];
  return x;
}

Matrix inverse(Matrix A) {
  std::size_t n = A.size();
  Matrix B(n, std::vector<Scalar>(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) B[i][i] = 1;
  eliminate(A, B);
  return B;
}

Matrix multiply(const Matrix& A, const Matrix& B) {
  std::size_t n = A.size(), m = B.empty() ? 0 : B[0].size(), k = B.size();
  Matrix C(n, std::vector<Scalar>(m, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (A[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) C[i][j] += A[i][l] * B[l][j];
    }
  return C;
}

}  // namespace hofc
