#include "hofc/noncrossing.hpp"

#include "hofc/errors.hpp"

namespace hofc {

Permutation kreweras_complement(const Permutation& pi, const Permutation& gamma) {
  return pi.inverse() * gamma;
}

bool is_connected(const Permutation& pi, const Permutation& gamma) {
  return orbit_join(pi, gamma).block_count() <= 1;
}

bool is_disc_noncrossing(const Permutation& pi) {
  int n = pi.size();
  if (n == 0) return true;
  Permutation g = Permutation::gamma({n});
  return pi.length() + (g * pi.inverse()).length() == n - 1;
}

bool is_noncrossing(const Permutation& pi, const std::vector<int>& profile) {
  Permutation g = Permutation::gamma(profile);
  require(g.size() == pi.size(), "profile does not match permutation size");
  int r = static_cast<int>(profile.size());
  if (!is_connected(pi, g)) return false;
  return pi.length() + kreweras_complement(pi, g).length() == g.length() + 2 * (r - 1);
}

bool is_annular_noncrossing(const Permutation& pi, int m, int n) { return is_noncrossing(pi, {m, n}); }

std::vector<Permutation> enumerate_snc(const std::vector<int>& profile) {
  int n = 0;
  for (int k : profile) n += k;
  require(n <= 10, "enumerate_snc is limited to 10 points");
  std::vector<Permutation> out;
  for (auto& p : all_permutations(n))
    if (is_noncrossing(p, profile)) out.push_back(p);
  return out;
}

std::vector<Permutation> enumerate_nc(int n) { return enumerate_snc({n}); }

}  // namespace hofc
