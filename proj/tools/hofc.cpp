// Command-line front end. Exact values print as "p/q" (or plain integers where
// a count is asked for); Monte Carlo results print as CSV.
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "acceptance.hpp"
#include "hofc/counting.hpp"
#include "hofc/errors.hpp"
#include "hofc/factorization.hpp"
#include "hofc/finite_n.hpp"
#include "hofc/json_io.hpp"
#include "hofc/moebius.hpp"
#include "hofc/rmt.hpp"
#include "hofc/transforms.hpp"
#include "hofc/weingarten.hpp"

using namespace hofc;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitAcceptance = 4;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("expected a comma-separated integer list: " + text);
    }
    if (used != tok.size()) throw ParseError("expected a comma-separated integer list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw ParseError("expected a comma-separated number list: " + text);
    }
  }
  if (out.empty()) throw ParseError("empty number list");
  return out;
}

// "{1,3}{2}" with 1-based points.
SetPartition parse_partition(const std::string& text, int n) {
  static const std::regex block(R"(\{([^{}]*)\})");
  std::vector<std::vector<int>> blocks;
  std::string rest = std::regex_replace(text, block, "");
  for (char c : rest)
    if (!std::isspace(static_cast<unsigned char>(c))) throw ParseError("bad set partition: " + text);
  for (auto it = std::sregex_iterator(text.begin(), text.end(), block); it != std::sregex_iterator(); ++it)
    blocks.push_back(parse_int_list((*it)[1]));
  return SetPartition::from_blocks(n, blocks);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

MultFn named_or_file(const std::string& spec, int order) {
  if (spec == "zeta") return MultFn::zeta(order);
  if (spec == "delta") return MultFn::delta(order);
  if (spec == "mu") return moebius_recursion(order);
  return multfn_from_json(parse_json(read_input(spec)));
}

// Haar monomials: factors uij, ubarij and |uij|, each with an optional ^k.
// The degree is the number of u factors.
// Two-digit indices are written u{i,j}.
struct HaarPattern {
  std::vector<int> ip, jp, i, j;
};

HaarPattern parse_pattern(const std::string& text) {
  static const std::regex factor(R"(\s*(\|u(\d\d|\{\d+,\d+\})\||ubar(\d\d|\{\d+,\d+\})|u(\d\d|\{\d+,\d+\}))(\^(\d+))?\s*\*?)");
  HaarPattern p;
  auto idx = [](const std::string& s) -> std::pair<int, int> {
    if (s[0] == '{') {
      auto v = parse_int_list(s.substr(1, s.size() - 2));
      if (v.size() != 2) throw ParseError("bad index pair " + s);
      return {v[0], v[1]};
    }
    return {s[0] - '0', s[1] - '0'};
  };
  std::size_t pos = 0;
  std::smatch m;
  while (pos < text.size()) {
    std::string rest = text.substr(pos);
    if (!std::regex_search(rest, m, factor, std::regex_constants::match_continuous) || m.length(0) == 0)
      throw ParseError("bad Haar pattern near '" + rest + "'");
    int k = m[6].matched ? std::stoi(m[6]) : 1;
    if (k <= 0) throw ParseError("exponents must be positive");
    // |u|^k = u^(k/2) ubar^(k/2)
    if (m[2].matched && k % 2 != 0) throw ParseError("|uij| needs an even exponent");
    int reps = m[2].matched ? k / 2 : k;
    for (int r = 0; r < reps; ++r) {
      if (m[2].matched) {
        auto [a, b] = idx(m[2]);
        p.ip.push_back(a);
        p.jp.push_back(b);
        p.i.push_back(a);
        p.j.push_back(b);
      } else if (m[3].matched) {
        auto [a, b] = idx(m[3]);
        p.i.push_back(a);
        p.j.push_back(b);
      } else {
        auto [a, b] = idx(m[4]);
        p.ip.push_back(a);
        p.jp.push_back(b);
      }
    }
    pos += static_cast<std::size_t>(m.length(0));
  }
  if (p.ip.size() != p.i.size()) throw PreconditionError("pattern needs as many u as conjugated u factors");
  return p;
}

EnsembleSpec parse_ensemble(const std::string& text, int N) {
  auto colon = text.find(':');
  std::string kind = text.substr(0, colon), arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "gue") return EnsembleSpec::gue(N);
  if (kind == "wishart") return EnsembleSpec::wishart(N, arg.empty() ? 1.0 : parse_double_list(arg).at(0));
  if (kind == "diag") return EnsembleSpec::deterministic_diagonal(N, parse_double_list(arg));
  if (kind == "haar-diag")
    return EnsembleSpec::haar_conjugate(EnsembleSpec::deterministic_diagonal(N, parse_double_list(arg)));
  if (kind == "haar-gue") return EnsembleSpec::haar_conjugate(EnsembleSpec::gue(N));
  throw ParseError("unknown ensemble '" + text + "' (gue, wishart:c, diag:v,.., haar-diag:v,.., haar-gue)");
}

int threads_option(int requested) {
  // resolve_threads already consults HOFC_THREADS when nothing is requested.
  return resolve_threads(requested);
}

Json transform_document(const Json& in, bool to_cumulants, int trunc) {
  if (!in.contains("first")) throw ParseError("transform input needs a \"first\" series");
  Series1 first = series1_from_json(in.at("first"));
  if (trunc >= 0) first = first.truncated(std::min(trunc, first.trunc()));
  require(first[0] == 1, "first-order series must have constant term 1");
  Json out;
  Series1 result = to_cumulants ? m2c_first(first) : c2m_first(first);
  out["first"] = series_to_json(result);
  if (in.contains("second")) {
    Series2 second = series2_from_json(in.at("second"));
    int t = std::min(first.trunc(), second.trunc());
    Series2 r2 = to_cumulants ? m2c_second(first.truncated(t), second.truncated(t))
                              : c2m_second(first.truncated(t), second.truncated(t));
    out["second"] = series_to_json(r2);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hofc: partitioned permutations, higher-order cumulants and random matrix checks"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output = "-";
  app.add_option("-o,--output", output, "output file (default stdout)");

  // count
  auto* count = app.add_subcommand("count", "count permutations non-crossing on the circles of a profile");
  std::string profile_text;
  bool brute = false, verbose = false;
  int power = 2;
  count->add_option("--profile", profile_text, "circle sizes, e.g. 2,2")->required();
  count->add_flag("--brute-force", brute, "also enumerate S_n directly (<= 10 points)");
  count->add_option("--power", power, "count factorizations into p disc factors (p >= 2)");
  count->add_flag("-v,--verbose", verbose, "print every method");

  // moebius
  auto* moeb = app.add_subcommand("moebius", "Moebius function on partitioned permutations");
  std::string diagram_text, algorithm = "recursion";
  int moeb_order = 0;
  moeb->add_option("--diagram", diagram_text, "single value, e.g. 2,2");
  moeb->add_option("--order", moeb_order, "print the table of all diagrams up to this size as JSON");
  moeb->add_option("--algorithm", algorithm, "recursion | geometric | table")
      ->check(CLI::IsMember({"recursion", "geometric", "table"}));

  // convolve
  auto* conv = app.add_subcommand("convolve", "convolution of multiplicative functions");
  std::string f_spec, g_spec;
  int conv_order = 4;
  conv->add_option("--f", f_spec, "JSON file, '-' or zeta|mu|delta")->required();
  conv->add_option("--g", g_spec, "JSON file, '-' or zeta|mu|delta")->required();
  conv->add_option("--order", conv_order, "largest diagram size");

  // factorize
  auto* fact = app.add_subcommand("factorize", "list factorizations (V,pi)(W,sigma) = (U,gamma)");
  std::string fact_profile, fact_perm, fact_blocks, fact_json;
  bool nc_only = false;
  fact->add_option("--profile", fact_profile, "gamma = gamma_profile and U = 1_n");
  fact->add_option("--perm", fact_perm, "gamma in cycle notation, e.g. (1,2)(3,4)");
  fact->add_option("--blocks", fact_blocks, "U, e.g. {1,2,3,4}; default 1_n");
  fact->add_option("--target", fact_json, "JSON {\"blocks\":..,\"perm_cycles\":..}");
  fact->add_flag("--nc", nc_only, "only PS_NC: factors (V,pi)(0,pi^-1 gamma)");

  // transforms
  auto* m2c = app.add_subcommand("m2c", "moment series to cumulant series (first and second order)");
  auto* c2m = app.add_subcommand("c2m", "cumulant series to moment series (first and second order)");
  std::string tr_input = "-";
  int tr_trunc = -1;
  for (auto* sc : {m2c, c2m}) {
    sc->add_option("--input", tr_input, "JSON {\"first\":series,\"second\":series}; '-' for stdin");
    sc->add_option("--trunc", tr_trunc, "truncate the input first");
  }

  // series2
  auto* s2 = app.add_subcommand("series2", "second-order evaluation from cumulant series C, C2");
  std::string s2_input = "-", s2_at;
  s2->add_option("--input", s2_input, "JSON {\"first\":C,\"second\":C2}");
  s2->add_option("--at", s2_at, "x0,y0 rationals: also report the Cauchy-form residual there");

  // wg
  auto* wg = app.add_subcommand("wg", "Weingarten function table");
  int wg_n = 2;
  std::string wg_N;
  bool full_basis = false;
  wg->add_option("--n", wg_n, "order")->required();
  wg->add_option("--N", wg_N, "matrix size (rational)")->required();
  wg->add_flag("--full-basis", full_basis, "invert the full n! x n! Gram matrix (n <= 5)");

  // haar-moment
  auto* haar = app.add_subcommand("haar-moment", "exact Haar unitary monomial expectation");
  int haar_n = -1, haar_N = 0;
  std::string pattern;
  std::size_t haar_mc = 0;
  std::uint64_t seed = 1;
  int threads = 0;
  haar->add_option("--n", haar_n, "degree (checked against the pattern)");
  haar->add_option("--pattern", pattern, "e.g. '|u11|^4' or 'u11 u22 ubar12 ubar21'")->required();
  haar->add_option("--N", haar_N, "matrix size")->required();
  haar->add_option("--samples", haar_mc, "also print a Monte Carlo estimate");
  haar->add_option("--seed", seed);
  haar->add_option("--threads", threads);

  // finite-n
  auto* fin = app.add_subcommand("finite-n", "finite-N moment-cumulant system");
  std::string fin_input = "-", fin_N, direction = "kappa", method = "direct";
  int fin_order = 3;
  fin->add_option("--input", fin_input, "multfn JSON of phi (or kappa with --direction phi)");
  fin->add_option("--N", fin_N, "matrix size")->required();
  fin->add_option("--order", fin_order, "largest n");
  fin->add_option("--direction", direction, "kappa: phi -> kappa, phi: kappa -> phi")
      ->check(CLI::IsMember({"kappa", "phi"}));
  fin->add_option("--method", method, "direct | solve")->check(CLI::IsMember({"direct", "solve"}));

  // simulate
  auto* sim = app.add_subcommand("simulate", "Monte Carlo checks, CSV report");
  std::string ensemble = "gue", ensemble_b, kind = "fluctuations";
  int sim_N = 100, sim_n = 2, batches = 20;
  std::size_t samples = 2000;
  sim->add_option("--ensemble", ensemble, "gue | wishart:c | diag:v,.. | haar-diag:v,.. | haar-gue");
  sim->add_option("--with", ensemble_b, "second ensemble for --kind freeness");
  sim->add_option("--kind", kind, "fluctuations | entries | freeness")
      ->check(CLI::IsMember({"fluctuations", "entries", "freeness"}));
  sim->add_option("--N", sim_N, "matrix size");
  sim->add_option("--n", sim_n, "largest power / cycle length");
  sim->add_option("--samples", samples);
  sim->add_option("--seed", seed);
  sim->add_option("--threads", threads, "worker threads; falls back to HOFC_THREADS");
  sim->add_option("--batches", batches, "batches for standard errors");

  // check
  auto* chk = app.add_subcommand("check", "run the acceptance criteria");
  std::vector<int> only;
  std::uint64_t check_seed = AcceptanceOptions{}.seed;
  chk->add_option("--only", only, "criterion numbers");
  chk->add_option("--seed", check_seed);
  chk->add_option("--threads", threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*count) {
      auto prof = parse_int_list(profile_text);
      for (int k : prof) require(k >= 1, "circle sizes must be positive");
      Integer closed = zeta_power_closed_form(power, prof);
      std::vector<std::pair<std::string, Integer>> methods{{"closed_form", closed}};
      int n = 0;
      for (int k : prof) n += k;
      if (power == 2) {
        methods.emplace_back("circle_recursion", count_recursive(prof));
        if (prof.size() == 2) methods.emplace_back("two_circle_recursion", count_recursive2(prof[0], prof[1]));
        methods.emplace_back("point_removal", count_rec_fact(PP(SetPartition::coarsest(n), Permutation::gamma(prof))));
        if (brute) methods.emplace_back("brute_force", count_snc_bruteforce(prof));
      } else {
        methods.emplace_back("zeta_power", zeta_power(power, prof));
      }
      bool agree = true;
      for (const auto& [name, v] : methods) agree = agree && v == closed;
      std::ostringstream os;
      if (verbose || !agree)
        for (const auto& [name, v] : methods) os << name << " " << v.get_str() << "\n";
      else
        os << closed.get_str() << "\n";
      write_output(output, os.str());
      if (!agree) {
        std::cerr << "error: counting methods disagree\n";
        return kExitAcceptance;
      }
    } else if (*moeb) {
      auto compute = [&](int n) {
        if (algorithm == "table") return moebius_table(n);
        if (algorithm == "geometric") return moebius_geometric(n);
        return moebius_recursion(n);
      };
      if (!diagram_text.empty()) {
        YoungDiagram d = YoungDiagram::parse(diagram_text);
        write_output(output, to_text(compute(d.size()).at(d)));
      } else {
        require(moeb_order >= 1, "give --diagram or --order");
        write_output(output, multfn_to_json(compute(moeb_order)).dump(2));
      }
    } else if (*conv) {
      require(conv_order >= 1, "order must be positive");
      MultFn f = named_or_file(f_spec, conv_order), g = named_or_file(g_spec, conv_order);
      write_output(output, multfn_to_json(convolve(f, g, conv_order)).dump(2));
    } else if (*fact) {
      PP target;
      if (!fact_json.empty()) {
        target = pp_from_json(parse_json(fact_json));
      } else {
        Permutation gamma;
        if (!fact_profile.empty())
          gamma = Permutation::gamma(parse_int_list(fact_profile));
        else if (!fact_perm.empty())
          gamma = Permutation::parse(fact_perm);
        else
          throw PreconditionError("give --profile, --perm or --target");
        SetPartition U = fact_blocks.empty() ? SetPartition::coarsest(gamma.size())
                                             : parse_partition(fact_blocks, gamma.size());
        target = PP(U, gamma);
      }
      std::ostringstream os;
      if (nc_only) {
        auto list = ps_nc(target.partition(), target.perm());
        for (const auto& x : list)
          os << x.to_string() << " * " << PP::disc(x.perm().inverse() * target.perm()).to_string() << "\n";
        os << list.size() << " factorizations in PS_NC of " << target.to_string() << "\n";
      } else {
        const auto& list = factorizations_cached(target);
        for (const auto& [a, b] : list) os << a.to_string() << " * " << b.to_string() << "\n";
        os << list.size() << " factorizations of " << target.to_string() << "\n";
      }
      write_output(output, os.str());
    } else if (*m2c || *c2m) {
      Json in = parse_json(read_input(tr_input));
      write_output(output, transform_document(in, static_cast<bool>(*m2c), tr_trunc).dump(2));
    } else if (*s2) {
      Json in = parse_json(read_input(s2_input));
      if (!in.contains("first")) throw ParseError("series2 input needs \"first\"");
      Series1 C = series1_from_json(in.at("first"));
      Series2 C2 = in.contains("second") ? series2_from_json(in.at("second")) : Series2(C.trunc());
      int t = std::min(C.trunc(), C2.trunc());
      C = C.truncated(t);
      C2 = C2.truncated(t);
      Json out;
      Series2 H = C2 + tilde_c(C);
      Series1 M = c2m_first(C);
      Series2 M2 = c2m_second(C, C2);
      out["H"] = series_to_json(H);
      out["M"] = series_to_json(M);
      out["M2"] = series_to_json(M2);
      if (!s2_at.empty()) {
        auto pos = s2_at.find(',');
        if (pos == std::string::npos) throw ParseError("--at expects x0,y0");
        Scalar x0 = parse_scalar(s2_at.substr(0, pos)), y0 = parse_scalar(s2_at.substr(pos + 1));
        out["cauchy_residual"] = series_to_json(cauchy_residual(M, M2, C2, x0, y0));
      }
      write_output(output, out.dump(2));
    } else if (*wg) {
      Scalar N = parse_scalar(wg_N);
      write_output(output, wg_to_json(full_basis ? wg_table_full_basis(wg_n, N) : wg_table(wg_n, N)).dump(2));
    } else if (*haar) {
      HaarPattern p = parse_pattern(pattern);
      if (haar_n >= 0)
        require(static_cast<int>(p.ip.size()) == haar_n,
                "pattern has degree " + std::to_string(p.ip.size()) + ", not --n " + std::to_string(haar_n));
      std::string text = to_text(haar_monomial_expectation(p.ip, p.jp, p.i, p.j, Scalar(haar_N)));
      if (haar_mc > 0) {
        SampleConfig cfg{haar_mc, seed, threads_option(threads), 20};
        Estimate e = haar_monomial_estimate(p.ip, p.jp, p.i, p.j, haar_N, cfg);
        std::ostringstream os;
        os.precision(8);
        os << text << "\nmonte_carlo " << e.value << " +- " << e.std_err;
        text = os.str();
      }
      write_output(output, text);
    } else if (*fin) {
      FiniteNTable in{parse_scalar(fin_N), multfn_from_json(parse_json(read_input(fin_input)))};
      FiniteNTable out = direction == "phi"    ? phiN_from_kappaN(in, fin_order)
                         : method == "solve" ? kappaN_from_phiN_solve(in, fin_order)
                                             : kappaN_from_phiN(in, fin_order);
      write_output(output, finite_n_to_json(out).dump(2));
    } else if (*sim) {
      require(sim_n >= 1, "--n must be positive");
      SampleConfig cfg{samples, seed, threads_option(threads), batches};
      EnsembleSpec A = parse_ensemble(ensemble, sim_N);
      FluctuationReport rep;
      if (kind == "fluctuations") {
        std::vector<std::pair<int, int>> mn;
        std::vector<std::vector<int>> third;
        for (int m = 1; m <= sim_n; ++m) {
          for (int n = m; n <= sim_n; ++n) mn.emplace_back(m, n);
          third.push_back({m, m, m});
        }
        rep = verify_fluctuations(A, mn, cfg, third);
      } else if (kind == "entries") {
        std::vector<std::vector<int>> cycles;
        for (int n = 1; n <= sim_n; ++n) cycles.push_back({n});
        for (int m = 1; m <= sim_n; ++m)
          for (int n = m; m + n <= sim_n + 1; ++n) cycles.push_back({m, n});
        rep = verify_entry_cumulants(A, cycles, cfg);
      } else {
        require(!ensemble_b.empty(), "--kind freeness needs --with");
        EnsembleSpec B = parse_ensemble(ensemble_b, sim_N);
        std::vector<FreenessQuery> qs = {{{1}, {1}, {1}, {1}},
                                         {{1, 1}, {1, 1}, {1, 1}, {1, 1}},
                                         {{1}, {1}, {1, 1}, {1, 1}},
                                         {{2}, {1}, {1}, {1}}};
        rep = verify_asymptotic_freeness(A, B, qs, cfg);
      }
      write_output(output, rep.to_csv());
    } else if (*chk) {
      AcceptanceOptions opt;
      opt.seed = check_seed;
      opt.threads = threads_option(threads);
      if (only.empty())
        for (int id = 1; id <= kCriterionCount; ++id) only.push_back(id);
      int failed = 0;
      for (int id : only) {
        require(id >= 1 && id <= kCriterionCount, "no criterion " + std::to_string(id));
        for (const auto& r : run_acceptance(opt, {id})) {
          std::cout << format_result(r) << std::endl;
          failed += r.pass ? 0 : 1;
        }
      }
      if (failed) return kExitAcceptance;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const SingularMatrix& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return 0;
}
