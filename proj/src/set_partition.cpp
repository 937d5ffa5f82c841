#include "hofc/set_partition.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "hofc/errors.hpp"

namespace hofc {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
  SetPartition p;
  p.label_.resize(labels.size());
  std::vector<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int id = -1;
    for (auto [raw, c] : seen)
      if (raw == labels[i]) id = c;
    if (id < 0) {
      id = static_cast<int>(seen.size());
      seen.emplace_back(labels[i], id);
    }
    p.label_[i] = id;
  }
  p.blocks_ = static_cast<int>(seen.size());
  return p;
}

SetPartition SetPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks1) {
  std::vector<int> lab(n, -1);
  for (std::size_t b = 0; b < blocks1.size(); ++b) {
    require(!blocks1[b].empty(), "empty block in set partition");
    for (int e : blocks1[b]) {
      require(e >= 1 && e <= n, "block element out of range");
      require(lab[e - 1] < 0, "element in two blocks");
      lab[e - 1] = static_cast<int>(b);
    }
  }
  for (int x : lab) require(x >= 0, "blocks do not cover the ground set");
  return from_labels(lab);
}

SetPartition SetPartition::finest(int n) {
  std::vector<int> lab(n);
  std::iota(lab.begin(), lab.end(), 0);
  return from_labels(lab);
}

SetPartition SetPartition::coarsest(int n) { return from_labels(std::vector<int>(n, 0)); }

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(blocks_);
  for (int i = 0; i < size(); ++i) out[label_[i]].push_back(i);
  return out;
}

std::vector<int> SetPartition::block_sizes() const {
  std::vector<int> out(blocks_, 0);
  for (int l : label_) ++out[l];
  return out;
}

SetPartition SetPartition::join(const SetPartition& o) const {
  require(size() == o.size(), "join of partitions of different sizes");
  int n = size();
  UnionFind uf(n);
  std::vector<int> first_a(blocks_, -1), first_b(o.blocks_, -1);
  for (int i = 0; i < n; ++i) {
    int& fa = first_a[label_[i]];
    if (fa < 0) fa = i; else uf.unite(i, fa);
    int& fb = first_b[o.label_[i]];
    if (fb < 0) fb = i; else uf.unite(i, fb);
  }
  std::vector<int> lab(n);
  for (int i = 0; i < n; ++i) lab[i] = uf.find(i);
  return from_labels(lab);
}

SetPartition SetPartition::meet(const SetPartition& o) const {
  require(size() == o.size(), "meet of partitions of different sizes");
  std::vector<int> lab(size());
  for (int i = 0; i < size(); ++i) lab[i] = label_[i] * (o.blocks_ + 1) + o.label_[i];
  return from_labels(lab);
}

bool SetPartition::leq(const SetPartition& o) const {
  if (size() != o.size()) return false;
  std::vector<int> img(blocks_, -1);
  for (int i = 0; i < size(); ++i) {
    int& t = img[label_[i]];
    if (t < 0) t = o.label_[i];
    else if (t != o.label_[i]) return false;
  }
  return true;
}

std::string SetPartition::to_string() const {
  std::ostringstream os;
  for (const auto& b : blocks()) {
    os << '{';
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i] + 1;
    os << '}';
  }
  return os.str();
}

std::uint64_t SetPartition::key() const {
  std::uint64_t k = static_cast<std::uint64_t>(size());
  for (int l : label_) k = k * 17 + static_cast<std::uint64_t>(l);
  return k;
}

std::vector<SetPartition> enumerate_partitions(int n) {
  std::vector<SetPartition> out;
  std::vector<int> lab(n, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      out.push_back(SetPartition::from_labels(lab));
      return;
    }
    for (int b = 0; b <= used; ++b) {
      lab[i] = b;
      rec(i + 1, b == used ? used + 1 : used);
    }
  };
  if (n == 0) return {SetPartition()};
  rec(0, 0);
  return out;
}

std::vector<SetPartition> interval(const SetPartition& lower, const SetPartition& upper) {
  require(lower.leq(upper), "interval requires lower <= upper");
  // Partition the blocks of `lower` so that merged blocks stay inside `upper`.
  auto lb = lower.blocks();
  int k = static_cast<int>(lb.size());
  std::vector<int> up(k);
  for (int b = 0; b < k; ++b) up[b] = upper.block_of(lb[b][0]);
  std::vector<SetPartition> out;
  std::vector<int> group(k, 0), group_up;
  std::function<void(int)> rec = [&](int b) {
    if (b == k) {
      std::vector<int> lab(lower.size());
      for (int j = 0; j < k; ++j)
        for (int e : lb[j]) lab[e] = group[j];
      out.push_back(SetPartition::from_labels(lab));
      return;
    }
    int used = static_cast<int>(group_up.size());
    for (int g = 0; g < used; ++g) {
      if (group_up[g] != up[b]) continue;
      group[b] = g;
      rec(b + 1);
    }
    group[b] = used;
    group_up.push_back(up[b]);
    rec(b + 1);
    group_up.pop_back();
  };
  rec(0);
  return out;
}

Scalar partition_moebius(const SetPartition& U, const SetPartition& W) {
  require(U.leq(W), "partition Moebius requires U <= W");
  // Count the U-blocks inside each W-block.
  std::vector<int> m(W.block_count(), 0);
  std::vector<char> seen(U.block_count(), 0);
  for (int i = 0; i < U.size(); ++i) {
    if (seen[U.block_of(i)]) continue;
    seen[U.block_of(i)] = 1;
    ++m[W.block_of(i)];
  }
  Integer r = 1;
  for (int mb : m) {
    r *= factorial(mb - 1);
    if ((mb - 1) % 2) r = -r;
  }
  return Scalar(r);
}

}  // namespace hofc
