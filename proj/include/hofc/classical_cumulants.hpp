#pragma once

#include <cstdint>
#include <functional>
#include <type_traits>
#include <vector>

#include "hofc/set_partition.hpp"

namespace hofc {

// Tables indexed by subsets of {0..n-1} encoded as bit masks.
template <class T>
using SubsetTable = std::vector<T>;

namespace detail {

// Calls fn(blocks) for every set partition of the elements of `mask`.
inline void for_each_partition_of_mask(std::uint32_t mask,
                                       const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  std::vector<int> elems;
  for (int i = 0; i < 32; ++i)
    if (mask >> i & 1u) elems.push_back(i);
  std::vector<std::uint32_t> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == elems.size()) {
      fn(blocks);
      return;
    }
    std::uint32_t bit = 1u << elems[k];
    // Index loop: the recursion appends to `blocks`, which may reallocate.
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      blocks[j] |= bit;
      rec(k + 1);
      blocks[j] &= ~bit;
    }
    blocks.push_back(bit);
    rec(k + 1);
    blocks.pop_back();
  };
  if (!elems.empty()) rec(0);
}

}  // namespace detail

// Joint cumulants k(S) of every non-empty subset S from the moments E[prod_{i in S} a_i].
template <class T>
SubsetTable<T> cumulants_from_moments(int n, const SubsetTable<T>& moments) {
  SubsetTable<T> k(std::size_t{1} << n, T(0));
  for (std::uint32_t S = 1; S < (1u << n); ++S) {
    T acc(0);
    detail::for_each_partition_of_mask(S, [&](const std::vector<std::uint32_t>& blocks) {
      long long c = 1;
      for (std::size_t j = 1; j < blocks.size(); ++j) c *= -static_cast<long long>(j);
      T term = T(static_cast<long>(c));
      for (auto b : blocks) term *= moments[b];
      acc += term;
    });
    k[S] = acc;
  }
  return k;
}

// Inverse: E(S) = sum over partitions of S of the product of block cumulants.
template <class T>
SubsetTable<T> moments_from_cumulants(int n, const SubsetTable<T>& k) {
  SubsetTable<T> m(std::size_t{1} << n, T(0));
  m[0] = T(1);
  for (std::uint32_t S = 1; S < (1u << n); ++S) {
    T acc(0);
    detail::for_each_partition_of_mask(S, [&](const std::vector<std::uint32_t>& blocks) {
      T term(1);
      for (auto b : blocks) term *= k[b];
      acc += term;
    });
    m[S] = acc;
  }
  return m;
}

inline std::uint32_t block_mask(const std::vector<int>& block) {
  std::uint32_t m = 0;
  for (int e : block) m |= 1u << e;
  return m;
}

// Product over the blocks of V of a subset-indexed table.
template <class T>
T evaluate_on_blocks(const SetPartition& V, const SubsetTable<T>& table) {
  T r(1);
  for (const auto& b : V.blocks()) r *= table[block_mask(b)];
  return r;
}

// k_V = sum_{W <= V} E_W Moeb(W, V): the lattice definition, used as an oracle.
template <class T>
T cumulant_by_lattice(const SetPartition& V, const SubsetTable<T>& moments) {
  T acc(0);
  for (const auto& W : interval(SetPartition::finest(V.size()), V)) {
    T term = evaluate_on_blocks(W, moments);
    Scalar mu = partition_moebius(W, V);
    if constexpr (std::is_same_v<T, Scalar>) term *= mu;
    else term *= T(mu.get_d());
    acc += term;
  }
  return acc;
}

// Cumulant of the products A_j = prod_{i in block j of U} a_i, taken in the
// order of the blocks of U: sum over V with V v U = 1_n of k_V.
template <class T>
T leonov_shiryaev(const SetPartition& U, const SubsetTable<T>& cumulants) {
  int n = U.size();
  T acc(0);
  auto one = SetPartition::coarsest(n);
  for (const auto& V : enumerate_partitions(n))
    if (V.join(U) == one) acc += evaluate_on_blocks(V, cumulants);
  return acc;
}

}  // namespace hofc
