#include "hofc/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "hofc/errors.hpp"

namespace hofc {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> hit(img_.size(), 0);
  for (int v : img_) {
    require(v >= 0 && v < size() && !hit[v], "not a permutation");
    hit[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles1) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(n, 0);
  for (const auto& c : cycles1) {
    for (int e : c) {
      require(e >= 1 && e <= n, "cycle element out of range");
      require(!used[e - 1], "point repeated in cycle notation");
      used[e - 1] = 1;
    }
    for (std::size_t i = 0; i < c.size(); ++i) img[c[i] - 1] = c[(i + 1) % c.size()] - 1;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::parse(std::string_view text, int n) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  int maxpt = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (text.substr(i) == "e" || text.substr(i) == "id") return identity(n);
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<int> cyc;
    skip();
    while (i < text.size() && text[i] != ')') {
      skip();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw ParseError("expected a point in cycle notation: " + std::string(text));
      int v = std::stoi(std::string(text.substr(start, i - start)));
      if (v < 1) throw ParseError("points are 1-based: " + std::string(text));
      cyc.push_back(v);
      maxpt = std::max(maxpt, v);
      skip();
      if (i < text.size() && text[i] == ',') ++i;
      else if (i < text.size() && text[i] != ')') throw ParseError("expected ',' or ')': " + std::string(text));
    }
    if (i >= text.size()) throw ParseError("unterminated cycle: " + std::string(text));
    ++i;
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip();
  }
  if (n == 0) n = maxpt;
  if (maxpt > n) throw PreconditionError("cycle point exceeds permutation size");
  std::vector<char> used(n, 0);
  for (const auto& c : cycles)
    for (int e : c) {
      if (used[e - 1]) throw ParseError("point repeated in cycle notation: " + std::string(text));
      used[e - 1] = 1;
    }
  return from_cycles(n, cycles);
}

Permutation Permutation::gamma(const std::vector<int>& profile) {
  int n = 0;
  for (int k : profile) {
    require(k >= 1, "profile entries must be positive");
    n += k;
  }
  std::vector<int> img(n);
  int start = 0;
  for (int k : profile) {
    for (int j = 0; j < k; ++j) img[start + j] = start + (j + 1) % k;
    start += k;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::of_type(const YoungDiagram& type) { return gamma(type.parts()); }

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < size(); ++i) inv[img_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

int Permutation::cycle_count() const {
  int c = 0;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (int j = i; !seen[j]; j = img_[j]) seen[j] = 1;
  }
  return c;
}

YoungDiagram Permutation::cycle_type() const {
  std::vector<int> parts;
  for (const auto& c : cycles()) parts.push_back(static_cast<int>(c.size()));
  return YoungDiagram(parts);
}

SetPartition Permutation::orbits() const {
  std::vector<int> lab(img_.size());
  auto cs = cycles();
  for (std::size_t c = 0; c < cs.size(); ++c)
    for (int e : cs[c]) lab[e] = static_cast<int>(c);
  return SetPartition::from_labels(lab);
}

bool Permutation::within(const SetPartition& V) const {
  if (V.size() != size()) return false;
  for (int i = 0; i < size(); ++i)
    if (V.block_of(i) != V.block_of(img_[i])) return false;
  return true;
}

Permutation Permutation::restrict_to(const std::vector<int>& subset) const {
  std::vector<int> pos(img_.size(), -1);
  for (std::size_t k = 0; k < subset.size(); ++k) pos[subset[k]] = static_cast<int>(k);
  std::vector<int> img(subset.size());
  for (std::size_t k = 0; k < subset.size(); ++k) {
    int t = pos[img_[subset[k]]];
    require(t >= 0, "restriction to a non-invariant subset");
    img[k] = t;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::conjugate_by(const Permutation& q) const { return q.inverse() * (*this) * q; }

std::string Permutation::to_string() const {
  if (img_.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cycles()) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i] + 1;
    os << ')';
  }
  return os.str();
}

std::uint64_t Permutation::key() const {
  std::uint64_t k = static_cast<std::uint64_t>(size());
  for (int v : img_) k = k * 17 + static_cast<std::uint64_t>(v);
  return k;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  require(p.size() == q.size(), "composition of permutations of different sizes");
  std::vector<int> img(p.size());
  for (int i = 0; i < p.size(); ++i) img[i] = p(q(i));
  return Permutation(std::move(img));
}

SetPartition orbit_join(const Permutation& a, const Permutation& b) { return a.orbits().join(b.orbits()); }

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Permutation> permutations_within(const SetPartition& V) {
  auto blocks = V.blocks();
  std::vector<Permutation> out;
  std::vector<int> img(V.size());
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      out.emplace_back(img);
      return;
    }
    std::vector<int> perm = blocks[b];
    do {
      for (std::size_t k = 0; k < perm.size(); ++k) img[blocks[b][k]] = perm[k];
      rec(b + 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  rec(0);
  return out;
}

}  // namespace hofc
