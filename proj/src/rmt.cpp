#include "hofc/rmt.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <set>
#include <sstream>

#include <Eigen/QR>

#include "hofc/classical_cumulants.hpp"
#include "hofc/errors.hpp"
#include "hofc/free_fluctuations.hpp"
#include "hofc/moebius.hpp"
#include "hofc/transforms.hpp"

namespace hofc {

// ---- ensembles

EnsembleSpec EnsembleSpec::gue(int N) {
  EnsembleSpec s;
  s.kind = EnsembleKind::GUE;
  s.N = N;
  return s;
}

EnsembleSpec EnsembleSpec::wishart(int N, double c) {
  EnsembleSpec s;
  s.kind = EnsembleKind::Wishart;
  s.N = N;
  s.ratio = c;
  return s;
}

EnsembleSpec EnsembleSpec::deterministic_diagonal(int N, std::vector<double> values) {
  EnsembleSpec s;
  s.kind = EnsembleKind::DeterministicDiagonal;
  s.N = N;
  s.diagonal = std::move(values);
  return s;
}

EnsembleSpec EnsembleSpec::haar_conjugate(const EnsembleSpec& inner) {
  EnsembleSpec s;
  s.kind = EnsembleKind::HaarConjugate;
  s.N = inner.N;
  s.inner = std::make_shared<const EnsembleSpec>(inner);
  return s;
}

EnsembleSpec EnsembleSpec::haar_unitary(int N) {
  EnsembleSpec s;
  s.kind = EnsembleKind::HaarUnitary;
  s.N = N;
  return s;
}

bool EnsembleSpec::unitarily_invariant() const {
  return kind == EnsembleKind::GUE || kind == EnsembleKind::Wishart || kind == EnsembleKind::HaarConjugate;
}

std::string EnsembleSpec::name() const {
  std::ostringstream os;
  switch (kind) {
    case EnsembleKind::GUE: os << "GUE"; break;
    case EnsembleKind::Wishart: os << "Wishart(c=" << ratio << ")"; break;
    case EnsembleKind::DeterministicDiagonal: os << "diag(" << diagonal.size() << " values)"; break;
    case EnsembleKind::HaarConjugate: os << "U " << inner->name() << " U*"; break;
    case EnsembleKind::HaarUnitary: os << "Haar"; break;
  }
  return os.str();
}

void EnsembleSpec::validate() const {
  require(N >= 1, "ensemble dimension must be at least 1");
  if (kind == EnsembleKind::Wishart) require(ratio > 0 && std::lround(ratio * N) >= 1, "Wishart ratio must give M >= 1");
  if (kind == EnsembleKind::DeterministicDiagonal) require(!diagonal.empty(), "diagonal ensemble needs values");
  if (kind == EnsembleKind::HaarConjugate) {
    require(inner != nullptr, "Haar conjugation needs an inner ensemble");
    require(inner->N == N, "inner ensemble dimension differs");
    inner->validate();
  }
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HOFC_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// ---- random numbers

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::uint64_t x = seed;
  std::uint64_t h = splitmix64(x);
  x = h ^ (stream * 0xd1b54a32d192ed03ULL);
  h = splitmix64(x);
  x = h ^ index;
  eng_.seed(splitmix64(x));
}

std::uint64_t Rng::next() { return eng_(); }

double Rng::uniform() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double r = std::sqrt(-2.0 * std::log(uniform()));
  double t = 2.0 * std::numbers::pi * uniform();
  spare_ = r * std::sin(t);
  have_spare_ = true;
  return r * std::cos(t);
}

Complex Rng::complex_normal() {
  double a = normal(), b = normal();
  return {a * std::numbers::sqrt2 / 2, b * std::numbers::sqrt2 / 2};
}

// ---- samplers

namespace {

CMatrix gaussian_matrix(int rows, int cols, Rng& rng) {
  CMatrix X(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) X(i, j) = rng.complex_normal();
  return X;
}

CMatrix gue_matrix(int N, Rng& rng) {
  CMatrix A(N, N);
  double s = 1.0 / std::sqrt(static_cast<double>(N));
  for (int i = 0; i < N; ++i) {
    A(i, i) = rng.normal() * s;
    for (int j = i + 1; j < N; ++j) {
      Complex z = rng.complex_normal() * s;
      A(i, j) = z;
      A(j, i) = std::conj(z);
    }
  }
  return A;
}

Eigen::VectorXcd tiled_diagonal(const EnsembleSpec& spec) {
  Eigen::VectorXcd d(spec.N);
  for (int i = 0; i < spec.N; ++i) d(i) = spec.diagonal[static_cast<std::size_t>(i) % spec.diagonal.size()];
  return d;
}

int wishart_columns(const EnsembleSpec& spec) { return static_cast<int>(std::lround(spec.ratio * spec.N)); }

}  // namespace

CMatrix sample_haar_unitary(int N, Rng& rng) {
  CMatrix Z = gaussian_matrix(N, N, rng);
  Eigen::HouseholderQR<CMatrix> qr(Z);
  CMatrix Q = qr.householderQ();
  const CMatrix& R = qr.matrixQR();
  // Fix the phases so that R has a positive diagonal; this makes Q exactly Haar.
  for (int j = 0; j < N; ++j) {
    Complex r = R(j, j);
    double a = std::abs(r);
    Q.col(j) *= a > 0 ? r / a : Complex(1);
  }
  return Q;
}

CMatrix sample_matrix(const EnsembleSpec& spec, Rng& rng) {
  switch (spec.kind) {
    case EnsembleKind::GUE: return gue_matrix(spec.N, rng);
    case EnsembleKind::Wishart: {
      CMatrix X = gaussian_matrix(spec.N, wishart_columns(spec), rng);
      return X * X.adjoint() / static_cast<double>(spec.N);
    }
    case EnsembleKind::DeterministicDiagonal: return tiled_diagonal(spec).asDiagonal();
    case EnsembleKind::HaarConjugate: {
      CMatrix U = sample_haar_unitary(spec.N, rng);
      if (spec.inner->kind == EnsembleKind::DeterministicDiagonal)
        return U * tiled_diagonal(*spec.inner).asDiagonal() * U.adjoint();
      CMatrix B = sample_matrix(*spec.inner, rng);
      return U * B * U.adjoint();
    }
    case EnsembleKind::HaarUnitary: return sample_haar_unitary(spec.N, rng);
  }
  throw PreconditionError("unknown ensemble");
}

// ---- per-sample word traces

namespace {

// One sampled letter. Diagonal letters stay diagonal and Wishart letters keep
// their factor until a product needs the full matrix.
class LetterSample {
 public:
  LetterSample(const EnsembleSpec& spec, Rng& rng) : N_(spec.N) {
    if (spec.kind == EnsembleKind::DeterministicDiagonal) {
      diag_ = tiled_diagonal(spec);
      is_diag_ = true;
    } else if (spec.kind == EnsembleKind::Wishart) {
      factor_ = gaussian_matrix(spec.N, wishart_columns(spec), rng);
      is_factor_ = true;
    } else {
      dense_ = sample_matrix(spec, rng);
    }
  }

  Complex trace() const {
    if (is_diag_) return diag_.sum();
    if (is_factor_) return factor_.squaredNorm() / static_cast<double>(N_);
    return dense_.trace();
  }
  // Tr(P X)
  Complex trace_after(const CMatrix& P) {
    if (is_diag_) return (P.diagonal().array() * diag_.array()).sum();
    return (P.array() * dense().transpose().array()).sum();
  }
  // P X
  CMatrix right_multiply(const CMatrix& P) {
    if (is_diag_) return P * diag_.asDiagonal();
    return P * dense();
  }
  const CMatrix& dense() {
    if (is_factor_ && dense_.size() == 0) dense_ = factor_ * factor_.adjoint() / static_cast<double>(N_);
    if (is_diag_ && dense_.size() == 0) dense_ = diag_.asDiagonal();
    return dense_;
  }

 private:
  int N_;
  bool is_diag_ = false, is_factor_ = false;
  CMatrix dense_, factor_;
  Eigen::VectorXcd diag_;
};

class WordEvaluator {
 public:
  WordEvaluator(const LetterSpecs& letters, const SampleConfig& cfg, std::size_t index) {
    std::uint64_t stream = 0;
    for (const auto& [c, spec] : letters) {
      Rng rng(cfg.seed, stream++, index);
      samples_.emplace(c, LetterSample(spec, rng));
    }
  }
  LetterSample& letter(char c) {
    auto it = samples_.find(c);
    require(it != samples_.end(), std::string("unknown letter '") + c + "'");
    return it->second;
  }
  Complex trace(const std::string& w) {
    require(!w.empty(), "empty word");
    if (w.size() == 1) return letter(w[0]).trace();
    return letter(w.back()).trace_after(prefix(w.substr(0, w.size() - 1)));
  }

 private:
  const CMatrix& prefix(const std::string& w) {
    auto it = prefix_.find(w);
    if (it != prefix_.end()) return it->second;
    CMatrix P = w.size() == 1 ? letter(w[0]).dense()
                              : letter(w.back()).right_multiply(prefix(w.substr(0, w.size() - 1)));
    return prefix_.emplace(w, std::move(P)).first->second;
  }
  std::map<char, LetterSample> samples_;
  std::map<std::string, CMatrix> prefix_;
};

int common_dimension(const LetterSpecs& letters) {
  require(!letters.empty(), "no letters given");
  int N = letters.begin()->second.N;
  for (const auto& [c, spec] : letters) {
    spec.validate();
    require(c != kUnit, "the unit letter cannot carry an ensemble");
    require(spec.N == N, "all letters must share the dimension N");
  }
  return N;
}

void require_samples(const SampleConfig& cfg, int order) {
  require(cfg.batches >= 2, "at least two batches are needed for error bars");
  std::size_t need = std::max<std::size_t>(2 * static_cast<std::size_t>(cfg.batches), 100 * static_cast<std::size_t>(order));
  require(cfg.samples >= need, "too few samples for a cumulant of order " + std::to_string(order) + " (need " +
                                   std::to_string(need) + ")");
}

}  // namespace

SampleTable sample_word_traces(const LetterSpecs& letters, const std::vector<std::string>& words,
                               const SampleConfig& cfg) {
  common_dimension(letters);
  return run_samples<std::vector<Complex>>(cfg.samples, cfg.threads, [&](std::size_t i) {
    WordEvaluator ev(letters, cfg, i);
    std::vector<Complex> row;
    row.reserve(words.size());
    for (const auto& w : words) row.push_back(ev.trace(w));
    return row;
  });
}

// ---- estimators

Replicates replicate_statistic(std::size_t S, int batches,
                               const std::function<double(std::size_t, std::size_t)>& stat) {
  require(batches >= 2 && S >= static_cast<std::size_t>(batches), "not enough samples for the batch count");
  Replicates r(static_cast<std::size_t>(batches) + 1, 0.0);
  r.v[0] = stat(0, S);
  std::size_t B = static_cast<std::size_t>(batches);
  for (std::size_t b = 0; b < B; ++b) r.v[b + 1] = stat(b * S / B, (b + 1) * S / B);
  return r;
}

Replicates joint_cumulant(const SampleTable& xs, const std::vector<int>& cols, int batches, double scale) {
  int r = static_cast<int>(cols.size());
  require(r >= 1 && r <= 16, "cumulant order out of range");
  return replicate_statistic(xs.size(), batches, [&](std::size_t lo, std::size_t hi) {
    double cnt = static_cast<double>(hi - lo);
    // Higher cumulants are shift invariant; centering keeps the moments well conditioned.
    std::vector<Complex> centre(r, Complex(0));
    if (r >= 2) {
      for (int c = 0; c < r; ++c) {
        for (std::size_t s = lo; s < hi; ++s) centre[c] += xs[s][cols[c]];
        centre[c] /= cnt;
      }
    }
    SubsetTable<Complex> m(std::size_t{1} << r, Complex(0));
    m[0] = 1;
    for (std::size_t s = lo; s < hi; ++s) {
      std::vector<Complex> prod(std::size_t{1} << r);
      prod[0] = 1;
      for (std::uint32_t S = 1; S < (1u << r); ++S) {
        int low = std::countr_zero(S);
        prod[S] = prod[S & (S - 1)] * (xs[s][cols[low]] - centre[low]);
        m[S] += prod[S];
      }
    }
    for (std::uint32_t S = 1; S < (1u << r); ++S) m[S] /= cnt;
    auto k = cumulants_from_moments<Complex>(r, m);
    Complex v = k[(1u << r) - 1];
    if (r == 1) v += centre[0];
    return scale * v.real();
  });
}

Estimate estimate_of(const Replicates& r) {
  auto [v, se] = replicate_estimate(r);
  return {v, se};
}

Estimate estimate_phi(const std::vector<std::string>& words, const LetterSpecs& letters, const SampleConfig& cfg) {
  int N = common_dimension(letters);
  int r = static_cast<int>(words.size());
  require_samples(cfg, r);
  auto xs = sample_word_traces(letters, words, cfg);
  std::vector<int> cols(r);
  for (int i = 0; i < r; ++i) cols[i] = i;
  return estimate_of(joint_cumulant(xs, cols, cfg.batches, std::pow(static_cast<double>(N), r - 2)));
}

// ---- reports

void FluctuationReport::add(std::string quantity, int N, std::size_t S, const Estimate& e, double prediction,
                            std::string provenance) {
  ReportRow row{std::move(quantity), N, S, e.value, e.std_err, prediction, std::move(provenance), 0.0};
  double d = e.value - prediction;
  if (e.std_err > 0)
    row.z = d / e.std_err;
  else
    row.z = std::abs(d) <= 1e-12 * (1 + std::abs(prediction)) ? 0.0 : INFINITY;
  rows.push_back(std::move(row));
}

double FluctuationReport::max_abs_z() const {
  double z = 0;
  for (const auto& r : rows) z = std::max(z, std::abs(r.z));
  return z;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string FluctuationReport::to_csv() const {
  std::ostringstream os;
  os.precision(10);
  os << "quantity,N,S,estimate,std_err,prediction,provenance,z\n";
  for (const auto& r : rows)
    os << csv_field(r.quantity) << ',' << r.N << ',' << r.S << ',' << r.estimate << ',' << r.std_err << ','
       << r.prediction << ',' << csv_field(r.provenance) << ',' << r.z << '\n';
  return os.str();
}

// ---- predictions

namespace {

struct LimitData {
  Series1 C;
  Series2 C2;
};

Scalar exact_of(double x) {
  Scalar s(x);
  s.canonicalize();
  return s;
}

// First and second-order free cumulant series of the large-N limit.
LimitData limit_cumulants(const EnsembleSpec& spec, int trunc) {
  switch (spec.kind) {
    case EnsembleKind::GUE: {
      Series1 C(trunc);
      C[0] = 1;
      if (trunc >= 2) C[2] = 1;
      return {C, Series2(trunc)};
    }
    case EnsembleKind::Wishart: {
      Series1 C(trunc);
      C[0] = 1;
      Scalar c = exact_of(spec.ratio);
      for (int k = 1; k <= trunc; ++k) C[k] = c;
      return {C, Series2(trunc)};
    }
    case EnsembleKind::DeterministicDiagonal: {
      // Moments of the tiled diagonal; no fluctuations.
      auto d = tiled_diagonal(spec);
      Series1 M(trunc);
      M[0] = 1;
      for (int k = 1; k <= trunc; ++k) {
        Scalar acc = 0;
        for (int i = 0; i < spec.N; ++i) {
          Scalar x = exact_of(d(i).real()), p = 1;
          for (int e = 0; e < k; ++e) p *= x;
          acc += p;
        }
        M[k] = acc / spec.N;
      }
      return {m2c_first(M), m2c_second(M, Series2(trunc))};
    }
    case EnsembleKind::HaarConjugate: return limit_cumulants(*spec.inner, trunc);
    case EnsembleKind::HaarUnitary: break;
  }
  throw PreconditionError("prediction unavailable for ensemble " + spec.name());
}

std::string power_word(char c, int k) { return std::string(static_cast<std::size_t>(k), c); }

}  // namespace

FluctuationReport verify_fluctuations(const EnsembleSpec& spec, const std::vector<std::pair<int, int>>& mn,
                                      const SampleConfig& cfg, const std::vector<std::vector<int>>& third) {
  spec.validate();
  require(spec.kind == EnsembleKind::GUE || spec.kind == EnsembleKind::Wishart,
          "fluctuation predictions need a GUE or Wishart ensemble");
  require_samples(cfg, third.empty() ? 2 : 3);
  int top = 1;
  for (auto [m, n] : mn) {
    require(m >= 1 && n >= 1, "powers must be positive");
    top = std::max({top, m, n});
  }
  for (const auto& t : third) {
    require(t.size() == 3, "third-order rows need three powers");
    for (int k : t) {
      require(k >= 1, "powers must be positive");
      top = std::max(top, k);
    }
  }
  // Series2 truncates by total degree.
  auto lim = limit_cumulants(spec, 2 * top);
  Series2 M2 = c2m_second(lim.C, lim.C2);
  std::vector<std::string> words;
  for (int k = 1; k <= top; ++k) words.push_back(power_word('a', k));
  auto xs = sample_word_traces({{'a', spec}}, words, cfg);
  FluctuationReport rep;
  for (auto [m, n] : mn) {
    auto e = estimate_of(joint_cumulant(xs, {m - 1, n - 1}, cfg.batches));
    rep.add("cov(Tr A^" + std::to_string(m) + ",Tr A^" + std::to_string(n) + ")", spec.N, cfg.samples, e,
            M2.coeff(m, n).get_d(), "second-order moment series from free cumulants with C2=0");
  }
  for (const auto& t : third) {
    auto e = estimate_of(joint_cumulant(xs, {t[0] - 1, t[1] - 1, t[2] - 1}, cfg.batches));
    rep.add("k3(Tr A^" + std::to_string(t[0]) + ",Tr A^" + std::to_string(t[1]) + ",Tr A^" + std::to_string(t[2]) +
                ")",
            spec.N, cfg.samples, e, 0.0, "third trace cumulants vanish as N grows");
  }
  return rep;
}

FluctuationReport verify_entry_cumulants(const EnsembleSpec& spec, const std::vector<std::vector<int>>& cycles,
                                         const SampleConfig& cfg) {
  spec.validate();
  require(spec.unitarily_invariant(), "entry cumulants need a unitarily invariant ensemble");
  int top = 1;
  for (const auto& c : cycles) {
    require(c.size() == 1 || c.size() == 2, "entry cumulants take one or two cycles");
    int t = 0;
    for (int k : c) {
      require(k >= 1, "cycle lengths must be positive");
      t += k;
    }
    require(t <= spec.N, "N too small for distinct indices");
    require_samples(cfg, t);
    top = std::max(top, t);
  }
  auto lim = limit_cumulants(spec, top + 1);
  double N = spec.N;
  FluctuationReport rep;
  for (const auto& c : cycles) {
    int t = 0;
    for (int k : c) t += k;
    int choices = std::min(8, spec.N / t);
    // Entry columns: for choice q, points q*t .. q*t+t-1 split into the cycles.
    std::vector<std::pair<int, int>> entries;
    for (int q = 0; q < choices; ++q) {
      int base = q * t;
      for (int k : c) {
        for (int r = 0; r < k; ++r) entries.emplace_back(base + r, base + (r + 1) % k);
        base += k;
      }
    }
    auto xs = run_samples<std::vector<Complex>>(cfg.samples, cfg.threads, [&](std::size_t i) {
      Rng rng(cfg.seed, 0, i);
      CMatrix A = sample_matrix(spec, rng);
      std::vector<Complex> row;
      row.reserve(entries.size());
      for (auto [a, b] : entries) row.push_back(A(a, b));
      return row;
    });
    double scale = c.size() == 1 ? std::pow(N, t - 1) : std::pow(N, t);
    Replicates avg(static_cast<std::size_t>(cfg.batches) + 1, 0.0);
    for (int q = 0; q < choices; ++q) {
      std::vector<int> cols(t);
      for (int r = 0; r < t; ++r) cols[r] = q * t + r;
      accumulate(avg, joint_cumulant(xs, cols, cfg.batches, scale / choices));
    }
    std::string label;
    double prediction;
    std::string prov;
    if (c.size() == 1) {
      label = "N^" + std::to_string(t - 1) + " k" + std::to_string(t) + "(entries along one " + std::to_string(t) +
              "-cycle)";
      prediction = lim.C.coeff(t).get_d();
      prov = "first-order free cumulant kappa_" + std::to_string(t);
    } else {
      label = "N^" + std::to_string(t) + " k" + std::to_string(t) + "(entries along cycles " + std::to_string(c[0]) +
              "," + std::to_string(c[1]) + ")";
      prediction = lim.C2.coeff(c[0], c[1]).get_d();
      prov = "second-order free cumulant kappa_" + std::to_string(c[0]) + "," + std::to_string(c[1]);
    }
    rep.add(label, spec.N, cfg.samples, estimate_of(avg), prediction, prov);
  }
  return rep;
}

namespace {

// Y(n, m) = Tr prod_i (A^{n_i} - alpha_{n_i})(B^{m_i} - beta_{m_i}) expanded
// into plain words: coefficient indices refer to the chosen centering terms.
struct Expansion {
  struct Term {
    std::string word;              // empty: the identity, trace N
    std::vector<int> a_powers;     // centering factors alpha_k taken
    std::vector<int> b_powers;
    int sign = 1;
  };
  std::vector<Term> terms;
};

Expansion expand_y(const std::vector<int>& n, const std::vector<int>& m) {
  Expansion e;
  e.terms.push_back({});
  for (std::size_t i = 0; i < n.size(); ++i)
    for (int side = 0; side < 2; ++side) {
      int k = side == 0 ? n[i] : m[i];
      char L = side == 0 ? 'a' : 'b';
      std::vector<Expansion::Term> next;
      for (const auto& t : e.terms) {
        auto keep = t;
        keep.word += power_word(L, k);
        next.push_back(keep);
        auto drop = t;
        (side == 0 ? drop.a_powers : drop.b_powers).push_back(k);
        drop.sign = -drop.sign;
        next.push_back(drop);
      }
      e.terms = std::move(next);
    }
  return e;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

FluctuationReport verify_asymptotic_freeness(const EnsembleSpec& A, const EnsembleSpec& B,
                                             const std::vector<FreenessQuery>& queries, const SampleConfig& cfg) {
  A.validate();
  B.validate();
  require(A.N == B.N, "both ensembles need the same N");
  require(A.unitarily_invariant() || B.unitarily_invariant(), "one ensemble must be unitarily invariant");
  require_samples(cfg, 2);
  int N = A.N;
  // Every word whose trace is needed, plus single-letter powers for the centering constants.
  int top_a = 2, top_b = 2;
  std::vector<std::pair<Expansion, Expansion>> expansions;
  for (const auto& q : queries) {
    require(q.n.size() == q.m.size() && q.nt.size() == q.mt.size() && !q.n.empty() && !q.nt.empty(),
            "freeness query needs matching non-empty exponent lists");
    std::vector<int> nr(q.nt.rbegin(), q.nt.rend()), mr(q.mt.rbegin(), q.mt.rend());
    expansions.emplace_back(expand_y(q.n, q.m), expand_y(nr, mr));
    for (int x : q.n)
      for (int y : q.nt) top_a = std::max(top_a, x + y);
    for (int x : q.m)
      for (int y : q.mt) top_b = std::max(top_b, x + y);
  }
  std::vector<std::string> words;
  std::map<std::string, int> col;
  auto want = [&](const std::string& w) {
    if (!w.empty() && !col.count(w)) {
      col[w] = static_cast<int>(words.size());
      words.push_back(w);
    }
  };
  for (int k = 1; k <= top_a; ++k) want(power_word('a', k));
  for (int k = 1; k <= top_b; ++k) want(power_word('b', k));
  for (const auto& [y, yt] : expansions)
    for (const auto* e : {&y, &yt})
      for (const auto& t : e->terms) want(t.word);
  auto xs = sample_word_traces({{'a', A}, {'b', B}}, words, cfg);

  // Measured normalized moments.
  auto mean_tr = [&](const std::string& w) {
    double s = 0;
    for (const auto& row : xs) s += row[col.at(w)].real();
    return s / static_cast<double>(xs.size()) / N;
  };
  std::vector<double> alpha(top_a + 1, 1.0), beta(top_b + 1, 1.0);
  for (int k = 1; k <= top_a; ++k) alpha[k] = mean_tr(power_word('a', k));
  for (int k = 1; k <= top_b; ++k) beta[k] = mean_tr(power_word('b', k));

  FluctuationReport rep;
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 2; ++m) {
      auto e = estimate_of(joint_cumulant(xs, {col.at(power_word('a', n)), col.at(power_word('b', m))}, cfg.batches));
      rep.add("k2(Tr(A^" + std::to_string(n) + "-alpha),Tr(B^" + std::to_string(m) + "-beta))", N, cfg.samples, e, 0.0,
              "mixed centered covariance vanishes for second-order free pairs");
    }

  auto y_value = [&](const Expansion& e, const std::vector<Complex>& row) {
    Complex v = 0;
    for (const auto& t : e.terms) {
      double c = t.sign;
      for (int k : t.a_powers) c *= alpha[k];
      for (int k : t.b_powers) c *= beta[k];
      v += c * (t.word.empty() ? Complex(N) : row[col.at(t.word)]);
    }
    return v;
  };
  for (std::size_t qi = 0; qi < queries.size(); ++qi) {
    const auto& q = queries[qi];
    SampleTable ys(xs.size(), std::vector<Complex>(2));
    for (std::size_t s = 0; s < xs.size(); ++s) {
      ys[s][0] = y_value(expansions[qi].first, xs[s]);
      ys[s][1] = y_value(expansions[qi].second, xs[s]);
    }
    auto e = estimate_of(joint_cumulant(ys, {0, 1}, cfg.batches));
    double pred = free_fluctuation_prediction<double>(
        q.n, q.m, q.nt, q.mt, [&](int k) { return alpha[k]; }, [&](int k) { return beta[k]; });
    rep.add("k2(Y(" + join_ints(q.n) + ";" + join_ints(q.m) + "),Y~(" + join_ints(q.nt) + ";" + join_ints(q.mt) + "))",
            N, cfg.samples, e, pred,
            q.n.size() == q.nt.size() ? "second-order freeness sum over cyclic shifts, measured moments"
                                      : "different lengths give 0");
  }
  return rep;
}

std::shared_ptr<Hops<Replicates>> stochastic_hops(const LetterSpecs& letters, int max_word_length,
                                                  const SampleConfig& cfg) {
  int N = common_dimension(letters);
  require(max_word_length >= 1 && max_word_length <= 6, "word length must be between 1 and 6");
  require_samples(cfg, max_word_length);
  std::string alphabet;
  for (const auto& [c, spec] : letters) alphabet += c;
  std::set<std::string> necklaces;
  std::vector<int> idx;
  for (int L = 1; L <= max_word_length; ++L) {
    idx.assign(L, 0);
    while (true) {
      std::string w;
      for (int i : idx) w += alphabet[i];
      necklaces.insert(canonical_cycles({w})[0]);
      int k = 0;
      while (k < L && ++idx[k] == static_cast<int>(alphabet.size())) idx[k++] = 0;
      if (k == L) break;
    }
  }
  std::vector<std::string> words(necklaces.begin(), necklaces.end());
  auto table = std::make_shared<SampleTable>(sample_word_traces(letters, words, cfg));
  auto col = std::make_shared<std::map<std::string, int>>();
  for (std::size_t i = 0; i < words.size(); ++i) (*col)[words[i]] = static_cast<int>(i);
  int batches = cfg.batches;
  auto moment = [table, col, batches, N](const CycleWords& cycles) {
    std::vector<int> cols;
    for (const auto& w : cycles) {
      auto it = col->find(w);
      require(it != col->end(), "word " + w + " was not sampled");
      cols.push_back(it->second);
    }
    double scale = std::pow(static_cast<double>(N), static_cast<double>(cols.size()) - 2);
    return joint_cumulant(*table, cols, batches, scale);
  };
  std::size_t R = static_cast<std::size_t>(batches) + 1;
  return std::make_shared<Hops<Replicates>>(alphabet, moment, Replicates(R, 0.0), Replicates(R, 1.0),
                                            moebius_recursion(max_word_length));
}

Estimate haar_monomial_estimate(const std::vector<int>& ip, const std::vector<int>& jp, const std::vector<int>& i,
                                const std::vector<int>& j, int N, const SampleConfig& cfg) {
  std::size_t n = ip.size();
  require(jp.size() == n && i.size() == n && j.size() == n, "index tuples must have equal length");
  for (const auto* v : {&ip, &jp, &i, &j})
    for (int x : *v) require(x >= 1 && x <= N, "matrix index out of range");
  require_samples(cfg, 1);
  auto vals = run_samples<double>(cfg.samples, cfg.threads, [&](std::size_t s) {
    Rng rng(cfg.seed, 0, s);
    CMatrix U = sample_haar_unitary(N, rng);
    Complex p = 1;
    for (std::size_t k = 0; k < n; ++k) p *= U(ip[k] - 1, jp[k] - 1) * std::conj(U(i[k] - 1, j[k] - 1));
    return p.real();
  });
  return estimate_of(replicate_statistic(vals.size(), cfg.batches, [&](std::size_t lo, std::size_t hi) {
    double s = 0;
    for (std::size_t k = lo; k < hi; ++k) s += vals[k];
    return s / static_cast<double>(hi - lo);
  }));
}

}  // namespace hofc
