#include "hofc/multfn.hpp"

#include "hofc/errors.hpp"
#include "hofc/noncrossing.hpp"

namespace hofc {

void MultFn::set(const YoungDiagram& d, Scalar v) {
  require(!d.empty(), "cannot set the empty diagram");
  table_[d] = std::move(v);
  if (d.size() > order_bound_) order_bound_ = d.size();
}

Scalar MultFn::at(const YoungDiagram& d) const {
  if (d.empty()) return 1;
  auto it = table_.find(d);
  if (it == table_.end()) throw MissingValue("multiplicative function has no value at " + d.to_string());
  return it->second;
}

Scalar MultFn::evaluate(const PP& x) const {
  Scalar r = 1;
  for (const auto& block : x.partition().blocks()) {
    r *= at(x.perm().restrict_to(block).cycle_type());
    if (r == 0) break;
  }
  return r;
}

bool MultFn::disc_supported() const {
  for (const auto& [d, v] : table_)
    if (d.length() >= 2 && v != 0) return false;
  return true;
}

MultFn MultFn::zeta(int n) {
  MultFn f(n);
  for (const auto& d : diagrams_up_to(n)) f.set(d, d.length() == 1 ? 1 : 0);
  return f;
}

MultFn MultFn::delta(int n) {
  MultFn f(n);
  for (const auto& d : diagrams_up_to(n)) f.set(d, d == YoungDiagram({1}) ? 1 : 0);
  return f;
}

Scalar convolve_at(const MultFn& f, const MultFn& g, const PP& target) {
  Scalar acc = 0;
  if (g.disc_supported()) {
    // Only (V, pi)(0, pi^{-1} gamma) contributes.
    for (const auto& a : ps_nc(target.partition(), target.perm())) {
      Scalar fv = f.evaluate(a);
      if (fv == 0) continue;
      acc += fv * g.evaluate(PP::disc(a.perm().inverse() * target.perm()));
    }
    return acc;
  }
  for (const auto& [a, b] : factorizations_cached(target)) {
    Scalar fv = f.evaluate(a);
    if (fv == 0) continue;
    acc += fv * g.evaluate(b);
  }
  return acc;
}

MultFn convolve(const MultFn& f, const MultFn& g, int n) {
  require(n <= f.order_bound() && n <= g.order_bound(), "convolution beyond the order bound of an input");
  MultFn h(n);
  for (const auto& d : diagrams_up_to(n)) {
    auto gamma = Permutation::of_type(d);
    h.set(d, convolve_at(f, g, PP(SetPartition::coarsest(d.size()), gamma)));
  }
  return h;
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> img(a.images());
  for (int v : b.images()) img.push_back(v + a.size());
  return Permutation(std::move(img));
}

Scalar tilde1(const MultFn& f, const Permutation& pi) { return f.evaluate(PP::disc(pi)); }

Scalar tilde2(const MultFn& f, const Permutation& pi1, const Permutation& pi2) {
  Permutation p = direct_sum(pi1, pi2);
  auto c1 = pi1.cycles(), c2 = pi2.cycles();
  auto base = p.orbits();
  Scalar acc = 0;
  for (const auto& x : c1)
    for (const auto& y : c2) {
      std::vector<int> lab = base.labels();
      int from = base.block_of(y[0] + pi1.size()), to = base.block_of(x[0]);
      for (auto& l : lab)
        if (l == from) l = to;
      acc += f.evaluate(PP(SetPartition::from_labels(lab), p));
    }
  return acc;
}

Scalar tilde2_convolution_rhs(const MultFn& f, const MultFn& g, int m, int n) {
  Permutation gm = Permutation::gamma({m}), gn = Permutation::gamma({n});
  Permutation gamma = Permutation::gamma({m, n});
  Scalar acc = 0;
  for (const auto& pi : enumerate_snc({m, n})) acc += tilde1(f, pi) * tilde1(g, pi.inverse() * gamma);
  auto ncm = enumerate_nc(m), ncn = enumerate_nc(n);
  for (const auto& p1 : ncm)
    for (const auto& p2 : ncn) {
      Permutation k1 = p1.inverse() * gm, k2 = p2.inverse() * gn;
      acc += tilde2(f, p1, p2) * tilde1(g, direct_sum(k1, k2));
      acc += tilde1(f, direct_sum(p1, p2)) * tilde2(g, k1, k2);
    }
  return acc;
}

}  // namespace hofc
