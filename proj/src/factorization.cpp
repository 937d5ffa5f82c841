#include "hofc/factorization.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>

#include "hofc/errors.hpp"
#include "hofc/noncrossing.hpp"

namespace hofc {

std::vector<SetPartition> minimal_coarsenings(const Permutation& pi, const Permutation& gamma,
                                              const SetPartition& bound) {
  int n = pi.size();
  auto cycles = pi.cycles();
  int k = static_cast<int>(cycles.size());
  auto comp_part = orbit_join(pi, gamma);
  std::vector<int> comp(k), ub(k);
  for (int c = 0; c < k; ++c) {
    comp[c] = comp_part.block_of(cycles[c][0]);
    ub[c] = bound.block_of(cycles[c][0]);
  }
  for (int c = 0; c < k; ++c)
    for (int e : cycles[c]) require(bound.block_of(e) == ub[c], "permutation is not inside the bound");

  // Union-find over components; merging cycles in one block links their
  // components, and a repeated link would close a cycle in the incidence graph.
  std::vector<SetPartition> out;
  std::vector<int> group(k, 0), group_root, group_ub;
  std::vector<int> uf(comp_part.block_count());
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(const std::vector<int>&, int)> find = [&](const std::vector<int>& u, int x) {
    while (u[x] != x) x = u[x];
    return x;
  };
  std::function<void(int)> rec = [&](int c) {
    if (c == k) {
      std::vector<int> lab(n);
      for (int j = 0; j < k; ++j)
        for (int e : cycles[j]) lab[e] = group[j];
      out.push_back(SetPartition::from_labels(lab));
      return;
    }
    int used = static_cast<int>(group_root.size());
    for (int g = 0; g < used; ++g) {
      if (group_ub[g] != ub[c]) continue;
      int a = find(uf, comp[c]), b = find(uf, group_root[g]);
      if (a == b) continue;
      auto saved = uf;
      uf[a] = b;
      group[c] = g;
      rec(c + 1);
      uf = std::move(saved);
    }
    group[c] = used;
    group_root.push_back(comp[c]);
    group_ub.push_back(ub[c]);
    rec(c + 1);
    group_root.pop_back();
    group_ub.pop_back();
  };
  rec(0);
  return out;
}

std::vector<Factorization> factorizations2(const PP& target) {
  const auto& U = target.partition();
  const auto& gamma = target.perm();
  std::vector<Factorization> out;
  for (const auto& pi : permutations_within(U)) {
    if (!is_gamma_planar(pi, gamma)) continue;
    Permutation sigma = pi.inverse() * gamma;
    auto Vs = minimal_coarsenings(pi, gamma, U);
    auto Ws = minimal_coarsenings(sigma, gamma, U);
    for (const auto& V : Vs) {
      PP a(V, pi);
      for (const auto& W : Ws) {
        if (V.join(W) != U) continue;
        PP b(W, sigma);
        if (a.length() + b.length() != target.length()) continue;
        out.emplace_back(a, std::move(b));
      }
    }
  }
  return out;
}

std::vector<Factorization> factorizations_bruteforce(const PP& target) {
  require(target.size() <= 5, "brute-force factorization is limited to n <= 5");
  auto all = enumerate_ps(target.size());
  std::vector<Factorization> out;
  for (const auto& a : all)
    for (const auto& b : all) {
      auto c = multiply(a, b);
      if (!c.is_zero() && c.value() == target) out.emplace_back(a, b);
    }
  return out;
}

const std::vector<Factorization>& factorizations_cached(const PP& target) {
  static std::mutex mu;
  static std::map<PP, std::vector<Factorization>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(target); it != cache.end()) return it->second;
  }
  auto f = factorizations2(target);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(target, std::move(f)).first->second;
}

std::vector<PP> ps_nc(const SetPartition& U, const Permutation& gamma) {
  require(gamma.within(U), "ps_nc: gamma must lie inside U");
  PP target(U, gamma);
  std::vector<PP> out;
  for (const auto& pi : permutations_within(U)) {
    if (!is_gamma_planar(pi, gamma)) continue;
    PP right = PP::disc(pi.inverse() * gamma);
    for (const auto& V : minimal_coarsenings(pi, gamma, U)) {
      PP left(V, pi);
      auto c = multiply(left, right);
      if (!c.is_zero() && c.value() == target) out.push_back(left);
    }
  }
  return out;
}

DiscTunnelFamilies factorizations_disc_tunnel(const std::vector<int>& profile) {
  require(profile.size() == 1 || profile.size() == 2, "disc/tunnel families need one or two circles");
  Permutation gamma = Permutation::gamma(profile);
  int n = gamma.size();
  PP target(SetPartition::coarsest(n), gamma);
  DiscTunnelFamilies fam;
  for (auto& f : factorizations2(target)) {
    bool a_disc = f.first.partition() == f.first.perm().orbits();
    bool b_disc = f.second.partition() == f.second.perm().orbits();
    if (a_disc && b_disc) fam.a.push_back(std::move(f));
    else if (a_disc) fam.b.push_back(std::move(f));
    else if (b_disc) fam.c.push_back(std::move(f));
    else throw std::logic_error("factorization of (1, gamma) with two non-disc factors");
  }
  return fam;
}

}  // namespace hofc
