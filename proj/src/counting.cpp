#include "hofc/counting.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hofc/errors.hpp"
#include "hofc/moebius.hpp"
#include "hofc/noncrossing.hpp"

namespace hofc {

namespace {

PP full_target(const std::vector<int>& profile) {
  Permutation g = Permutation::gamma(profile);
  return PP(SetPartition::coarsest(g.size()), g);
}

}  // namespace

Integer zeta_power(int p, const PP& target) {
  require(p >= 1, "zeta power needs p >= 1");
  std::map<std::pair<int, PP>, Integer> memo;
  std::function<Integer(int, const PP&)> Z = [&](int q, const PP& x) -> Integer {
    if (q == 1) return x.partition() == x.perm().orbits() ? 1 : 0;
    auto key = std::make_pair(q, x);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer acc = 0;
    for (const auto& [a, b] : factorizations_cached(x))
      if (a.partition() == a.perm().orbits()) acc += Z(q - 1, b);
    memo.emplace(key, acc);
    return acc;
  };
  return Z(p, target);
}

Integer zeta_power(int p, const std::vector<int>& profile) { return zeta_power(p, full_target(profile)); }

Integer zeta_power_closed_form(int p, const std::vector<int>& profile) {
  require(p >= 2, "closed form needs p >= 2");
  require(!profile.empty(), "empty profile");
  int n = 0, r = static_cast<int>(profile.size());
  for (int k : profile) {
    require(k >= 1, "profile entries must be positive");
    n += k;
  }
  Scalar v(Integer(p) * factorial((p - 1) * n - 1), factorial((p - 1) * n - r + 2));
  for (int k : profile) v *= Scalar(Integer(k) * binomial(p * k - 1, k));
  v.canonicalize();
  if (v.get_den() != 1) throw std::logic_error("closed form produced a non-integer");
  return v.get_num();
}

Integer catalan(int n) { return binomial(2 * n, n) / (n + 1); }

Integer annular_count(int m, int n) {
  Scalar v(Integer(2 * m * n) * binomial(2 * m - 1, m) * binomial(2 * n - 1, n), Integer(m + n));
  v.canonicalize();
  return v.get_num();
}

Integer count_recursive(const std::vector<int>& profile) {
  std::map<std::vector<int>, Integer> memo;
  std::function<Integer(const std::vector<int>&)> c = [&](const std::vector<int>& prof) -> Integer {
    int r = static_cast<int>(prof.size());
    if (r == 1 && prof[0] == 0) return 1;
    for (int k : prof)
      if (k == 0) return 0;
    // Later circles are interchangeable; sort them for the memo key.
    std::vector<int> key = prof;
    std::sort(key.begin() + 1, key.end());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int n1 = key[0];
    Integer acc = 0;
    for (int l = 1; l < r; ++l) {
      std::vector<int> next;
      next.push_back(n1 + key[l] - 1);
      for (int j = 1; j < r; ++j)
        if (j != l) next.push_back(key[j]);
      acc += Integer(key[l]) * c(next);
    }
    int rest = r - 1;
    for (int k = 1; k <= n1; ++k)
      for (unsigned mask = 0; mask < (1u << rest); ++mask) {
        std::vector<int> A{k - 1}, B{n1 - k};
        for (int j = 0; j < rest; ++j) (mask >> j & 1u ? A : B).push_back(key[j + 1]);
        acc += c(A) * c(B);
      }
    memo.emplace(key, acc);
    return acc;
  };
  require(!profile.empty(), "empty profile");
  return c(profile);
}

Integer count_recursive2(int m, int n) {
  std::map<std::pair<int, int>, Integer> memo;
  std::function<Integer(int, int)> c2 = [&](int a, int b) -> Integer {
    if (a == 0 || b == 0) return 0;
    auto key = std::make_pair(a, b);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer acc = Integer(a) * catalan(a + b - 1);
    for (int k = 1; k <= b; ++k) acc += catalan(k - 1) * c2(a, b - k) + c2(a, k - 1) * catalan(b - k);
    memo.emplace(key, acc);
    return acc;
  };
  return c2(m, n);
}

Integer count_rec_fact(const PP& target) {
  std::map<PP, Integer> memo;
  std::function<Integer(const PP&)> F = [&](const PP& x) -> Integer {
    int n = x.size();
    if (n <= 1) return 1;
    const auto& gamma = x.perm();
    if (gamma.is_identity()) {
      Integer r = 1;
      for (int s : x.partition().block_sizes()) r *= factorial(s - 1);
      return r;
    }
    if (gamma(0) == 0) {
      int j = 1;
      while (gamma(j) == j) ++j;
      return F(swap_points(x, 0, j));
    }
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    const auto& U = x.partition();
    auto ginv = gamma.inverse();
    std::vector<char> in_orbit(n, 0);
    for (int a = 0; !in_orbit[a]; a = gamma(a)) in_orbit[a] = 1;
    Integer acc = 0;
    for (int k = 0; k < n; ++k) {
      // hat gamma_k = (0 k) gamma (0 gamma^{-1}(k)) restricted to 1..n-1.
      std::vector<int> t1(n), t2(n);
      for (int a = 0; a < n; ++a) t1[a] = t2[a] = a;
      std::swap(t1[0], t1[k]);
      std::swap(t2[0], t2[ginv(k)]);
      Permutation full = Permutation(t1) * gamma * Permutation(t2);
      std::vector<int> rest(n - 1);
      for (int a = 1; a < n; ++a) rest[a - 1] = a;
      Permutation hat = full.restrict_to(rest);
      std::vector<int> ulab(n - 1);
      for (int a = 1; a < n; ++a) ulab[a - 1] = U.block_of(a);
      SetPartition Ubar = SetPartition::from_labels(ulab);
      bool split = k != 0 && k != gamma(0) && in_orbit[k];
      if (!split) {
        if (hat.within(Ubar)) acc += F(PP(Ubar, hat));
        continue;
      }
      // Split the block of Ubar holding k and gamma^{-1}(k) into two blocks
      // separating the hat-cycles through those two points.
      int kk = k - 1, kp = ginv(k) - 1;
      auto hc = hat.orbits();
      int blk = Ubar.block_of(kk);
      std::vector<int> free_cycles;
      for (int a = 0; a < n - 1; ++a) {
        if (Ubar.block_of(a) != blk) continue;
        int c = hc.block_of(a);
        if (c == hc.block_of(kk) || c == hc.block_of(kp)) continue;
        if (std::find(free_cycles.begin(), free_cycles.end(), c) == free_cycles.end()) free_cycles.push_back(c);
      }
      if (hc.block_of(kk) == hc.block_of(kp)) continue;
      int fresh = Ubar.block_count();
      for (unsigned mask = 0; mask < (1u << free_cycles.size()); ++mask) {
        std::vector<int> lab = Ubar.labels();
        for (int a = 0; a < n - 1; ++a) {
          if (Ubar.block_of(a) != blk) continue;
          int c = hc.block_of(a);
          bool to_k = c == hc.block_of(kk);
          for (std::size_t j = 0; j < free_cycles.size(); ++j)
            if (c == free_cycles[j] && (mask >> j & 1u)) to_k = true;
          if (to_k) lab[a] = fresh;
        }
        acc += F(PP(SetPartition::from_labels(lab), hat));
      }
    }
    memo.emplace(x, acc);
    return acc;
  };
  return F(target);
}

Integer count_snc_bruteforce(const std::vector<int>& profile) {
  return Integer(static_cast<long>(enumerate_snc(profile).size()));
}

}  // namespace hofc
