#include "hofc/moebius.hpp"

#include <functional>
#include <map>

#include "hofc/errors.hpp"

namespace hofc {

namespace {

PP full_target(const YoungDiagram& d) {
  return PP(SetPartition::coarsest(d.size()), Permutation::of_type(d));
}

bool is_identity_pp(const PP& x) { return x.perm().is_identity() && x.partition().block_count() == x.size(); }

}  // namespace

PP swap_points(const PP& x, int i, int j) {
  int n = x.size();
  std::vector<int> t(n);
  for (int a = 0; a < n; ++a) t[a] = a;
  std::swap(t[i], t[j]);
  std::vector<int> img(n), lab(n);
  for (int a = 0; a < n; ++a) {
    img[a] = t[x.perm()(t[a])];
    lab[a] = x.partition().block_of(t[a]);
  }
  return PP(SetPartition::from_labels(lab), Permutation(img));
}

MultFn moebius_table(int n) {
  MultFn mu(n);
  for (const auto& d : diagrams_up_to(n)) {
    PP target = full_target(d);
    Scalar acc = d == YoungDiagram({1}) ? 1 : 0;
    for (const auto& left : ps_nc(target.partition(), target.perm())) {
      if (left == target) continue;
      acc -= mu.evaluate(left);
    }
    mu.set(d, acc);
  }
  return mu;
}

MultFn moebius_geometric(int n) {
  std::map<PP, Scalar> memo;
  std::function<Scalar(const PP&)> F = [&](const PP& x) -> Scalar {
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    Scalar acc = is_identity_pp(x) ? 1 : 0;
    for (const auto& [a, b] : factorizations_cached(x)) {
      if (a.perm().is_identity() || a.partition() != a.perm().orbits()) continue;
      acc -= F(b);
    }
    memo.emplace(x, acc);
    return acc;
  };
  MultFn mu(n);
  for (const auto& d : diagrams_up_to(n)) mu.set(d, F(full_target(d)));
  return mu;
}

MultFn moebius_recursion(int n) {
  MultFn mu(n);
  for (const auto& d : diagrams_up_to(n)) {
    int m = d.size();
    if (d.length() == m) {
      // Every pi contributes (0, pi)(1_m, pi^{-1}) = (1_m, e).
      Scalar acc = m == 1 ? 1 : 0;
      for (const auto& other : diagrams_of(m))
        if (other != d) acc -= Scalar(other.class_size()) * mu.at(other);
      mu.set(d, acc);
      continue;
    }
    PP target = full_target(d);  // gamma(0) != 0 since the first part exceeds 1
    Scalar acc = 0;
    const auto& gamma = target.perm();
    for (int k = 1; k < m; ++k) {
      std::vector<int> img(m);
      for (int a = 0; a < m; ++a) img[a] = a;
      std::swap(img[0], img[k]);
      Permutation tau(img);
      PP left = PP::disc(tau);
      Permutation rest = tau * gamma;
      for (const auto& V : minimal_coarsenings(rest, gamma, target.partition())) {
        PP x(V, rest);
        auto c = multiply(left, x);
        if (c.is_zero() || c.value() != target) continue;
        acc -= mu.evaluate(x);
      }
    }
    mu.set(d, acc);
  }
  return mu;
}

}  // namespace hofc
