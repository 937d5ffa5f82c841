#include "hofc/weingarten.hpp"

#include "hofc/errors.hpp"

namespace hofc {

Scalar WeingartenTable::at(const YoungDiagram& d) const {
  auto it = values.find(d);
  if (it == values.end()) throw MissingValue("Weingarten table has no entry " + d.to_string());
  return it->second;
}

namespace {

std::vector<Scalar> powers_of(const Scalar& N, int n) {
  std::vector<Scalar> p(n + 1);
  p[0] = 1;
  for (int k = 1; k <= n; ++k) p[k] = p[k - 1] * N;
  return p;
}

}  // namespace

Matrix gram_matrix(int n, const Scalar& N) {
  auto perms = all_permutations(n);
  auto pw = powers_of(N, n);
  Matrix G(perms.size(), std::vector<Scalar>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b)
      G[a][b] = pw[(perms[a] * perms[b].inverse()).cycle_count()];
  return G;
}

WeingartenTable wg_table(int n, const Scalar& N) {
  require(n >= 1, "wg_table needs n >= 1");
  // Row lambda: sum over tau of N^{#(sigma_lambda tau^{-1})} Wg(tau) = [lambda = 1^n].
  auto diagrams = diagrams_of(n);
  std::map<YoungDiagram, std::size_t> index;
  for (std::size_t k = 0; k < diagrams.size(); ++k) index[diagrams[k]] = k;
  auto pw = powers_of(N, n);
  std::size_t m = diagrams.size();
  Matrix A(m, std::vector<Scalar>(m, Scalar(0)));
  std::vector<Scalar> rhs(m, Scalar(0));
  auto perms = all_permutations(n);
  for (std::size_t r = 0; r < m; ++r) {
    Permutation s = Permutation::of_type(diagrams[r]);
    for (const auto& tau : perms) A[r][index[tau.cycle_type()]] += pw[(s * tau.inverse()).cycle_count()];
    if (diagrams[r].length() == n) rhs[r] = 1;
  }
  std::vector<Scalar> w;
  try {
    w = solve(A, rhs);
  } catch (const SingularMatrix&) {
    throw SingularMatrix("Gram matrix is singular at N = " + to_text(N) + " for n = " + std::to_string(n));
  }
  WeingartenTable t{n, N, {}};
  for (std::size_t k = 0; k < m; ++k) t.values[diagrams[k]] = w[k];
  return t;
}

WeingartenTable wg_table_full_basis(int n, const Scalar& N) {
  require(n >= 1 && n <= 5, "full-basis Weingarten is limited to n <= 5");
  auto perms = all_permutations(n);
  Matrix inv;
  try {
    inv = inverse(gram_matrix(n, N));
  } catch (const SingularMatrix&) {
    throw SingularMatrix("Gram matrix is singular at N = " + to_text(N) + " for n = " + std::to_string(n));
  }
  // Wg(sigma pi^{-1}) = inv[sigma][pi]; read the column of the identity (index 0).
  WeingartenTable t{n, N, {}};
  for (std::size_t a = 0; a < perms.size(); ++a) t.values[perms[a].cycle_type()] = inv[a][0];
  return t;
}

Scalar haar_monomial_expectation(const std::vector<int>& ip, const std::vector<int>& jp, const std::vector<int>& i,
                                 const std::vector<int>& j, const Scalar& N) {
  std::size_t n = ip.size();
  require(jp.size() == n && i.size() == n && j.size() == n, "index tuples must have equal length");
  if (n == 0) return 1;
  require(N >= static_cast<long>(n), "Haar moments need N >= n");
  require(N.get_den() == 1, "Haar moments need an integer N");
  for (const auto* v : {&ip, &jp, &i, &j})
    for (int x : *v) require(x >= 1 && N >= x, "matrix index out of range");
  WeingartenTable wg = wg_table(static_cast<int>(n), N);
  auto perms = all_permutations(static_cast<int>(n));
  std::vector<const Permutation*> alphas, betas;
  for (const auto& p : perms) {
    bool ra = true, rb = true;
    for (std::size_t k = 0; k < n; ++k) {
      ra = ra && i[k] == ip[p(static_cast<int>(k))];
      rb = rb && j[k] == jp[p(static_cast<int>(k))];
    }
    if (ra) alphas.push_back(&p);
    if (rb) betas.push_back(&p);
  }
  Scalar acc = 0;
  for (const auto* a : alphas)
    for (const auto* b : betas) acc += wg.at(*b * a->inverse());
  return acc;
}

WeingartenCalculus::WeingartenCalculus(int n, Scalar N) : N_(std::move(N)) {
  for (int k = 1; k <= n; ++k) tables_.push_back(wg_table(k, N_));
}

Scalar WeingartenCalculus::wg(const Permutation& sigma) const {
  require(sigma.size() >= 1 && sigma.size() <= order(), "Weingarten order exceeded");
  return table(sigma.size()).at(sigma);
}

Scalar WeingartenCalculus::wg(const SetPartition& U, const Permutation& sigma) const {
  require(sigma.within(U), "Wg(U, sigma) needs sigma <= U");
  Scalar r = 1;
  for (const auto& b : U.blocks()) r *= wg(sigma.restrict_to(b));
  return r;
}

Scalar WeingartenCalculus::relative_cumulant(const SetPartition& V, const SetPartition& W,
                                             const Permutation& sigma) const {
  require(sigma.within(V) && V.leq(W), "relative cumulant needs sigma <= V <= W");
  Scalar acc = 0;
  for (const auto& U : interval(V, W)) acc += partition_moebius(U, W) * wg(U, sigma);
  return acc;
}

}  // namespace hofc
