#pragma once

// Template definitions for Hops<V>.

#include <optional>

#include "hofc/errors.hpp"
#include "hofc/factorization.hpp"

namespace hofc {

namespace detail {

// gamma with the given cycle lengths and the concatenated word.
inline std::pair<Permutation, std::string> canonical_target(const CycleWords& cycles) {
  std::vector<int> lengths;
  std::string word;
  for (const auto& c : cycles) {
    lengths.push_back(static_cast<int>(c.size()));
    word += c;
  }
  return {Permutation::gamma(lengths), word};
}

}  // namespace detail

template <class V>
V Hops<V>::phi(const CycleWords& raw) const {
  CycleWords cycles;
  bool unit_cycle = false;
  for (const auto& w : raw) {
    std::string s;
    for (char c : w) {
      if (!has_letter(c)) throw PreconditionError(std::string("letter outside the alphabet: ") + c);
      if (c != kUnit) s += c;
    }
    if (s.empty()) unit_cycle = true;
    cycles.push_back(std::move(s));
  }
  if (unit_cycle) return cycles.size() == 1 ? one_ : zero_;
  cycles = canonical_cycles(std::move(cycles));
  std::string key = cycles_key(cycles);
  {
    std::lock_guard<std::mutex> lock(mu_cache_);
    if (auto it = phi_cache_.find(key); it != phi_cache_.end()) return it->second;
  }
  V value = moment_(cycles);
  std::lock_guard<std::mutex> lock(mu_cache_);
  phi_cache_.emplace(key, value);
  return value;
}

template <class V>
V Hops<V>::phi(const PP& x, const std::string& word) const {
  require(static_cast<int>(word.size()) == x.size(), "word length differs from the number of points");
  V r = one_;
  for (const auto& block : x.partition().blocks()) {
    CycleWords cw;
    for (const auto& c : x.perm().cycles()) {
      if (x.partition().block_of(c[0]) != x.partition().block_of(block[0])) continue;
      std::string s;
      for (int e : c) s += word[e];
      cw.push_back(std::move(s));
    }
    r = times(r, phi(cw));
  }
  return r;
}

template <class V>
V Hops<V>::kappa(const Permutation& pi, const std::string& word) const {
  require(static_cast<int>(word.size()) == pi.size(), "word length differs from the permutation size");
  CycleWords cycles = canonical_cycles(cycle_words(pi, word));
  for (const auto& w : cycles)
    for (char c : w)
      if (!has_letter(c)) throw PreconditionError(std::string("letter outside the alphabet: ") + c);
  if (unit_shortcut && word.find(kUnit) != std::string::npos)
    return word.size() == 1 ? one_ : zero_;
  std::string key = cycles_key(cycles);
  {
    std::lock_guard<std::mutex> lock(mu_cache_);
    if (auto it = kappa_cache_.find(key); it != kappa_cache_.end()) return it->second;
  }
  std::optional<V> hinted;
  if (hint_) hinted = hint_(cycles);
  V acc = zero_;
  if (hinted) {
    acc = *hinted;
  } else {
    auto [gamma, w] = detail::canonical_target(cycles);
    PP target(SetPartition::coarsest(gamma.size()), gamma);
    for (const auto& [a, b] : factorizations_cached(target)) {
      Scalar m = mu_.evaluate(b);
      if (m == 0) continue;
      accumulate(acc, scale(phi(a, w), m));
    }
  }
  std::lock_guard<std::mutex> lock(mu_cache_);
  kappa_cache_.emplace(key, acc);
  return acc;
}

template <class V>
V Hops<V>::kappa(const PP& x, const std::string& word) const {
  V r = one_;
  for (const auto& block : x.partition().blocks()) {
    std::string w;
    for (int e : block) w += word[e];
    r = times(r, kappa(x.perm().restrict_to(block), w));
  }
  return r;
}

}  // namespace hofc
