#include <doctest.h>

#include <cmath>

#include "hofc/errors.hpp"
#include "hofc/rmt.hpp"

using namespace hofc;

TEST_CASE("rng streams are deterministic") {
  Rng a(5, 1, 2), b(5, 1, 2), c(5, 1, 3);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  CHECK(Rng(5, 1, 2).next() != c.next());
  Rng r(9, 0, 0);
  double s = 0, s2 = 0;
  bool in_range = true;
  const int K = 200000;
  for (int i = 0; i < K; ++i) {
    double u = r.uniform();
    in_range = in_range && u > 0 && u <= 1;
    auto z = r.complex_normal();
    s += std::norm(z);
    s2 += z.real();
  }
  CHECK(in_range);
  CHECK(s / K == doctest::Approx(1).epsilon(0.02));
  CHECK(std::abs(s2 / K) < 0.01);
}

TEST_CASE("sampled matrices") {
  Rng rng(1, 0, 0);
  auto H = sample_matrix(EnsembleSpec::gue(20), rng);
  CHECK((H - H.adjoint()).norm() < 1e-12);
  auto U = sample_haar_unitary(15, rng);
  CHECK((U * U.adjoint() - CMatrix::Identity(15, 15)).norm() < 1e-10);
  auto D = sample_matrix(EnsembleSpec::deterministic_diagonal(5, {1, 2}), rng);
  CHECK(D(2, 2).real() == 1);
  CHECK(D(3, 3).real() == 2);
  CHECK_THROWS_AS(EnsembleSpec::wishart(4, -1).validate(), PreconditionError);
}

TEST_CASE("results do not depend on the thread count") {
  LetterSpecs letters{{'a', EnsembleSpec::gue(12)}, {'b', EnsembleSpec::wishart(12, 2)}};
  std::vector<std::string> words{"a", "ab", "aabb"};
  SampleConfig one{64, 3, 1, 4}, many{64, 3, 4, 4};
  auto x = sample_word_traces(letters, words, one), y = sample_word_traces(letters, words, many);
  CHECK(x == y);
}

TEST_CASE("deterministic matrices have no fluctuations") {
  LetterSpecs letters{{'d', EnsembleSpec::deterministic_diagonal(10, {1, 3})}};
  auto e = estimate_phi({"dd", "d"}, letters, SampleConfig{200, 1, 1, 10});
  CHECK(std::abs(e.value) < 1e-9);
  CHECK(e.std_err < 1e-9);
  auto m = estimate_phi({"dd"}, letters, SampleConfig{200, 1, 1, 10});
  CHECK(m.value == doctest::Approx(5));
}

TEST_CASE("GUE second moment and covariance") {
  LetterSpecs letters{{'a', EnsembleSpec::gue(40)}};
  SampleConfig cfg{2000, 17, 1, 20};
  auto m2 = estimate_phi({"aa"}, letters, cfg);
  CHECK(std::abs(m2.value - 1) < 5 * m2.std_err + 1e-3);
  auto rep = verify_fluctuations(EnsembleSpec::gue(40), {{1, 1}, {2, 2}}, cfg, {});
  CHECK(rep.rows.size() == 2);
  CHECK(rep.max_abs_z() < 5);
}

TEST_CASE("sample size guard") {
  CHECK_THROWS_AS(verify_fluctuations(EnsembleSpec::gue(10), {{1, 1}}, SampleConfig{10, 1, 1, 20}, {}),
                  PreconditionError);
}

TEST_CASE("Haar unitary entries") {
  auto e = haar_monomial_estimate({1, 1}, {1, 1}, {1, 1}, {1, 1}, 4, SampleConfig{20000, 2, 1, 20});
  CHECK(std::abs(e.value - 0.1) < 5 * e.std_err);
}

TEST_CASE("CSV report") {
  FluctuationReport r;
  r.add("cov(x,y)", 10, 100, Estimate{1.5, 0.5}, 1, "test");
  auto csv = r.to_csv();
  CHECK(csv.rfind("quantity,N,S,estimate,std_err,prediction,provenance,z\n", 0) == 0);
  CHECK(r.rows[0].z == doctest::Approx(1));
}
