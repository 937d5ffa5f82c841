#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "hofc/hops.hpp"

namespace hofc {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

enum class EnsembleKind { GUE, Wishart, DeterministicDiagonal, HaarConjugate, HaarUnitary };

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::GUE;
  int N = 1;
  double ratio = 1;                              // Wishart: M = round(ratio N) columns
  std::vector<double> diagonal;                  // tiled cyclically to length N
  std::shared_ptr<const EnsembleSpec> inner;     // HaarConjugate

  static EnsembleSpec gue(int N);
  static EnsembleSpec wishart(int N, double c);
  static EnsembleSpec deterministic_diagonal(int N, std::vector<double> values);
  static EnsembleSpec haar_conjugate(const EnsembleSpec& inner);
  static EnsembleSpec haar_unitary(int N);

  bool unitarily_invariant() const;
  std::string name() const;
  void validate() const;
};

struct SampleConfig {
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  int threads = 0;   // 0: HOFC_THREADS, else hardware concurrency
  int batches = 20;  // for batch standard errors
};
int resolve_threads(int requested);

// Counter-based stream: a Mersenne Twister seeded from a splitmix64 hash of
// (seed, stream, index). Normals come from the Box-Muller transform on 53-bit uniforms.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);
  std::uint64_t next();
  double uniform();  // (0, 1]
  double normal();
  // E|z|^2 = 1, independent real and imaginary parts.
  Complex complex_normal();

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0;
};

CMatrix sample_matrix(const EnsembleSpec& spec, Rng& rng);
CMatrix sample_haar_unitary(int N, Rng& rng);

// Runs fn(i) for i < S over the thread budget and returns the results in index order.
template <class T, class F>
std::vector<T> run_samples(std::size_t S, int threads, F fn) {
  std::vector<T> out(S);
  int t = std::max(1, std::min<int>(resolve_threads(threads), static_cast<int>(S == 0 ? 1 : S)));
  if (t == 1) {
    for (std::size_t i = 0; i < S; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < t; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < S; i += static_cast<std::size_t>(t)) out[i] = fn(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

// Rows are samples, columns are observables.
using SampleTable = std::vector<std::vector<Complex>>;

// Replicate vector of a statistic: entry 0 over all samples, entry b over batch b.
Replicates replicate_statistic(std::size_t S, int batches,
                               const std::function<double(std::size_t, std::size_t)>& stat);
// scale * k_r(x_{cols[0]}, ..., x_{cols[r-1]}) from sample moments (real part).
Replicates joint_cumulant(const SampleTable& xs, const std::vector<int>& cols, int batches, double scale = 1);

struct Estimate {
  double value = 0;
  double std_err = 0;
};
Estimate estimate_of(const Replicates& r);

// Letter -> ensemble; letters are sampled independently, all with the same N.
using LetterSpecs = std::map<char, EnsembleSpec>;

// Tr(word) for every word and sample. Letter matrices of a sample use stream
// (position of the letter in the map) and the sample index.
SampleTable sample_word_traces(const LetterSpecs& letters, const std::vector<std::string>& words,
                               const SampleConfig& cfg);

// N^{r-2} k_r(Tr w_1, ..., Tr w_r).
Estimate estimate_phi(const std::vector<std::string>& words, const LetterSpecs& letters, const SampleConfig& cfg);

struct ReportRow {
  std::string quantity;
  int N = 0;
  std::size_t S = 0;
  double estimate = 0;
  double std_err = 0;
  double prediction = 0;
  std::string provenance;
  double z = 0;
};
struct FluctuationReport {
  std::vector<ReportRow> rows;
  void add(std::string quantity, int N, std::size_t S, const Estimate& e, double prediction,
           std::string provenance);
  double max_abs_z() const;
  std::string to_csv() const;
};

// cov(Tr A^m, Tr A^n) against the second-order limit from C2 = 0 and the
// ensemble's free cumulants; each entry of `third` adds an unscaled
// k_3(Tr A^a, Tr A^b, Tr A^c) row with prediction 0. GUE and Wishart only.
FluctuationReport verify_fluctuations(const EnsembleSpec& spec, const std::vector<std::pair<int, int>>& mn,
                                      const SampleConfig& cfg,
                                      const std::vector<std::vector<int>>& third = {});

// Entry cumulants of a unitarily invariant ensemble. `cycles` holds one or
// two cycle lengths; rows report N^{n-1} k_n over one cycle or N^{m+n} k_{m+n}
// over two disjoint cycles, averaged over disjoint index choices.
FluctuationReport verify_entry_cumulants(const EnsembleSpec& spec, const std::vector<std::vector<int>>& cycles,
                                         const SampleConfig& cfg);

// One mixed second-order quantity k_2(Y(n, m), Y(reverse nt, reverse mt)).
struct FreenessQuery {
  std::vector<int> n, m, nt, mt;
};
// Centered mixed covariances k_2(Tr(A^n - alpha_n), Tr(B^m - beta_m)) for
// n, m <= 2 and every query; predictions use moments measured on the same samples.
FluctuationReport verify_asymptotic_freeness(const EnsembleSpec& A, const EnsembleSpec& B,
                                             const std::vector<FreenessQuery>& queries, const SampleConfig& cfg);

// Decorated moment functional estimated from samples: the moment callback is
// N^{r-2} k_r of the traces, carried as replicates.
std::shared_ptr<Hops<Replicates>> stochastic_hops(const LetterSpecs& letters, int max_word_length,
                                                  const SampleConfig& cfg);

// E[prod u_{ip_k jp_k} prod conj(u_{i_k j_k})] for Haar U(N), indices 1-based.
Estimate haar_monomial_estimate(const std::vector<int>& ip, const std::vector<int>& jp, const std::vector<int>& i,
                                const std::vector<int>& j, int N, const SampleConfig& cfg);

}  // namespace hofc
