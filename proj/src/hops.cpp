#include "hofc/hops.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hofc/moebius.hpp"

namespace hofc {

CumulantSet cumulants_from_moments(const Distribution& phi, int n) { return convolve(phi, moebius_recursion(n), n); }

Distribution moments_from_cumulants(const CumulantSet& kappa, int n) { return convolve(kappa, MultFn::zeta(n), n); }

CumulantSet add_free(const CumulantSet& ka, const CumulantSet& kb) {
  require(ka.order_bound() == kb.order_bound(), "add_free: order bounds differ");
  CumulantSet out(ka.order_bound());
  for (const auto& d : diagrams_up_to(ka.order_bound())) out.set(d, ka.at(d) + kb.at(d));
  return out;
}

CycleWords canonical_cycles(CycleWords cycles) {
  for (auto& w : cycles) {
    std::string best = w;
    for (std::size_t r = 1; r < w.size(); ++r) {
      std::string rot = w.substr(r) + w.substr(0, r);
      if (rot < best) best = rot;
    }
    w = best;
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

CycleWords cycle_words(const Permutation& pi, const std::string& word) {
  CycleWords out;
  for (const auto& c : pi.cycles()) {
    std::string s;
    for (int e : c) s += word[e];
    out.push_back(std::move(s));
  }
  return out;
}

std::string cycles_key(const CycleWords& cycles) {
  std::string k;
  for (const auto& w : cycles) k += w + "|";
  return k;
}

std::shared_ptr<ExactHops> distribution_hops(char letter, const Distribution& phi, int order) {
  require(letter != kUnit, "the unit letter cannot carry a distribution");
  auto moment = [letter, phi](const CycleWords& cycles) -> Scalar {
    std::vector<int> lengths;
    for (const auto& w : cycles) {
      for (char c : w) require(c == letter, "word outside the single-letter alphabet");
      lengths.push_back(static_cast<int>(w.size()));
    }
    return phi.at(YoungDiagram(lengths));
  };
  auto h = std::make_shared<ExactHops>(std::string(1, letter), moment, Scalar(0), Scalar(1), moebius_recursion(order));
  CumulantSet kappa = cumulants_from_moments(phi, std::min(order, phi.order_bound()));
  h->set_kappa_hint([letter, kappa](const CycleWords& cycles) -> std::optional<Scalar> {
    std::vector<int> lengths;
    for (const auto& w : cycles) {
      for (char c : w)
        if (c != letter) return std::nullopt;
      lengths.push_back(static_cast<int>(w.size()));
    }
    YoungDiagram d(lengths);
    if (!kappa.has(d)) return std::nullopt;
    return kappa.at(d);
  });
  return h;
}

std::shared_ptr<ExactHops> free_join(std::shared_ptr<const ExactHops> A, std::shared_ptr<const ExactHops> B,
                                     int order) {
  for (char c : A->alphabet()) require(!B->has_letter(c), "free_join needs disjoint alphabets");
  auto moment = [A, B](const CycleWords& cycles) -> Scalar {
    auto [gamma, word] = detail::canonical_target(cycles);
    std::string aw, bw;
    for (char c : word) {
      bool in_a = A->has_letter(c);
      aw += in_a ? c : kUnit;
      bw += in_a ? kUnit : c;
    }
    PP target(SetPartition::coarsest(gamma.size()), gamma);
    Scalar acc = 0;
    for (const auto& [a, b] : factorizations_cached(target)) {
      Scalar k = A->kappa(a, aw);
      if (k == 0) continue;
      acc += k * B->phi(b, bw);
    }
    return acc;
  };
  return std::make_shared<ExactHops>(A->alphabet() + B->alphabet(), moment, Scalar(0), Scalar(1),
                                     moebius_recursion(order));
}

namespace {

template <class V, class Fn>
void for_each_mixed(const Hops<V>& o, const std::vector<std::string>& groups, int up_to, Fn&& fn) {
  std::string letters;
  for (const auto& g : groups) letters += g;
  auto group_of = [&](char c) {
    for (std::size_t i = 0; i < groups.size(); ++i)
      if (groups[i].find(c) != std::string::npos) return static_cast<int>(i);
    throw PreconditionError(std::string("letter in no group: ") + c);
  };
  if (groups.size() < 2) return;
  for (char c : letters) require(o.has_letter(c), "group letter outside the oracle alphabet");
  std::set<std::string> seen;
  for (int n = 1; n <= up_to; ++n)
    for (const auto& d : diagrams_of(n)) {
      Permutation gamma = Permutation::of_type(d);
      std::vector<int> idx(n, 0);
      while (true) {
        std::string w;
        std::set<int> used;
        for (int i : idx) {
          w += letters[i];
          used.insert(group_of(letters[i]));
        }
        auto cycles = canonical_cycles(cycle_words(gamma, w));
        if (used.size() >= 2 && seen.insert(cycles_key(cycles)).second) fn(cycles, o.kappa(gamma, w));
        int k = 0;
        while (k < n && ++idx[k] == static_cast<int>(letters.size())) idx[k++] = 0;
        if (k == n) break;
      }
    }
}

}  // namespace

MixedCumulantReport mixed_cumulant_report(const ExactHops& o, const std::vector<std::string>& groups, int up_to) {
  MixedCumulantReport rep;
  for_each_mixed(o, groups, up_to, [&](const CycleWords& c, const Scalar& v) {
    MixedCumulantEntry e;
    e.cycles = c;
    e.exact = v;
    e.value = v.get_d();
    rep.max_abs = std::max(rep.max_abs, std::abs(e.value));
    rep.entries.push_back(std::move(e));
  });
  return rep;
}

std::pair<double, double> replicate_estimate(const Replicates& r) {
  require(r.v.size() >= 3, "replicate vector needs at least two batches");
  std::size_t B = r.v.size() - 1;
  double mean = 0;
  for (std::size_t i = 1; i <= B; ++i) mean += r.v[i];
  mean /= static_cast<double>(B);
  double ss = 0;
  for (std::size_t i = 1; i <= B; ++i) ss += (r.v[i] - mean) * (r.v[i] - mean);
  double se = std::sqrt(ss / static_cast<double>(B - 1) / static_cast<double>(B));
  return {r.v[0], se};
}

MixedCumulantReport mixed_cumulant_report(const Hops<Replicates>& o, const std::vector<std::string>& groups,
                                          int up_to) {
  MixedCumulantReport rep;
  for_each_mixed(o, groups, up_to, [&](const CycleWords& c, const Replicates& v) {
    MixedCumulantEntry e;
    e.cycles = c;
    auto [est, se] = replicate_estimate(v);
    e.value = est;
    e.std_err = se;
    double scale_ref = 1e-9 * (1 + std::abs(est));
    double z = se > scale_ref ? std::abs(est) / se : (std::abs(est) > scale_ref ? INFINITY : 0.0);
    rep.max_z = std::max(rep.max_z, z);
    rep.max_abs = std::max(rep.max_abs, std::abs(est));
    rep.entries.push_back(std::move(e));
  });
  return rep;
}

Distribution deterministic_distribution(const std::vector<Scalar>& x, int order) {
  Distribution d(order);
  for (const auto& lam : diagrams_up_to(order)) {
    if (lam.length() >= 2) {
      d.set(lam, 0);
      continue;
    }
    int k = lam.parts()[0];
    require(k <= static_cast<int>(x.size()), "not enough moments for the requested order");
    d.set(lam, x[k - 1]);
  }
  return d;
}

Series1 iz_series(const CumulantSet& ka, const Distribution& phib, int up_to) {
  Series1 s(up_to);
  for (int n = 1; n <= up_to; ++n) {
    PP target(SetPartition::coarsest(n), Permutation::identity(n));
    Scalar acc = 0;
    for (const auto& [a, b] : factorizations_cached(target)) {
      Scalar k = ka.evaluate(a);
      if (k == 0) continue;
      acc += k * phib.evaluate(b);
    }
    s[n] = acc / Scalar(factorial(n));
  }
  return s;
}

Series1 iz_r(const CumulantSet& ka, const std::vector<Scalar>& x, int up_to) {
  require(static_cast<int>(x.size()) >= up_to, "iz_r needs x_1 .. x_n");
  Series1 s(up_to);
  for (int n = 1; n <= up_to; ++n) {
    Scalar acc = 0;
    for (const auto& lam : diagrams_of(n)) {
      Scalar xl = 1;
      for (int p : lam.parts()) xl *= x[p - 1];
      acc += xl * Scalar(lam.class_size()) * ka.at(lam);
    }
    s[n] = acc / Scalar(factorial(n));
  }
  return s;
}

std::pair<Series2, Series2> rank2(const CumulantSet& ka, int up_to) {
  Series2 first(up_to), second(up_to);
  for (int n = 1; n <= up_to; ++n) {
    Scalar c = ka.at(YoungDiagram({n})) / n;
    first.at(n, 0) += c;
    first.at(0, n) += c;
  }
  // (x^m + y^m)(x^n + y^n) = x^{m+n} + x^m y^n + x^n y^m + y^{m+n}
  for (int m = 1; m < up_to; ++m)
    for (int n = 1; m + n <= up_to; ++n) {
      Scalar c = ka.at(YoungDiagram({m, n})) / (m * n);
      second.at(m + n, 0) += c;
      second.at(m, n) += c;
      second.at(n, m) += c;
      second.at(0, m + n) += c;
    }
  return {first, second};
}

}  // namespace hofc
