#include "hofc/json_io.hpp"

#include <regex>

#include "hofc/errors.hpp"

namespace hofc {

namespace {

// Malformed documents are parse errors, not precondition violations.
void doc_require(bool ok, const std::string& what) {
  if (!ok) throw ParseError(what);
}


// Wraps nlohmann type errors so that malformed documents surface as ParseError.
template <class F>
auto guarded(const char* what, F fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

std::vector<int> int_list(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers");
  std::vector<int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("expected an integer");
    v.push_back(x.get<int>());
  }
  return v;
}

std::vector<int> index_key(const std::string& key, std::size_t arity) {
  static const std::regex one(R"(\(\s*(\d+)\s*\))"), two(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  std::smatch m;
  if (arity == 1 && std::regex_match(key, m, one)) return {std::stoi(m[1])};
  if (arity == 2 && std::regex_match(key, m, two)) return {std::stoi(m[1]), std::stoi(m[2])};
  throw ParseError("bad coefficient key: " + key);
}

}  // namespace

Json scalar_to_json(const Scalar& x) { return to_pq(x); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw ParseError("exact values must be \"p/q\" strings");
}

Json multfn_to_json(const MultFn& f) {
  Json arr = Json::array();
  for (const auto& [d, v] : f.table()) arr.push_back({{"diagram", d.parts()}, {"value", scalar_to_json(v)}});
  return arr;
}

Json multfn_to_json(const MultFn& f, const std::vector<std::string>& alphabet) {
  return {{"alphabet", alphabet}, {"order", f.order_bound()}, {"values", multfn_to_json(f)}};
}

MultFn multfn_from_json(const Json& j, std::vector<std::string>* alphabet) {
  return guarded("multfn", [&] {
    const Json* list = &j;
    int order = -1;
    if (j.is_object()) {
      if (!j.contains("values")) throw ParseError("multfn object needs \"values\"");
      list = &j.at("values");
      if (j.contains("order")) order = j.at("order").get<int>();
      if (alphabet && j.contains("alphabet")) *alphabet = j.at("alphabet").get<std::vector<std::string>>();
    }
    if (!list->is_array()) throw ParseError("multfn values must be a list");
    std::vector<std::pair<YoungDiagram, Scalar>> entries;
    int top = 0;
    for (const auto& e : *list) {
      auto parts = int_list(e.at("diagram"));
      for (int p : parts)
        if (p <= 0) throw ParseError("diagram parts must be positive");
      YoungDiagram d(parts);
      top = std::max(top, d.size());
      entries.emplace_back(d, scalar_from_json(e.at("value")));
    }
    MultFn f(order >= 0 ? order : top);
    for (auto& [d, v] : entries) f.set(d, v);
    return f;
  });
}

Json series_to_json(const Series1& s) {
  Json c = Json::object();
  for (int k = 0; k <= s.trunc(); ++k)
    if (s[k] != 0) c["(" + std::to_string(k) + ")"] = to_pq(s[k]);
  return {{"trunc", s.trunc()}, {"coeffs", c}};
}

Json series_to_json(const Series2& s) {
  Json c = Json::object();
  for (int i = 0; i <= s.trunc(); ++i)
    for (int k = 0; i + k <= s.trunc(); ++k)
      if (s.coeff(i, k) != 0) c["(" + std::to_string(i) + "," + std::to_string(k) + ")"] = to_pq(s.coeff(i, k));
  return {{"trunc", s.trunc()}, {"coeffs", c}};
}

Series1 series1_from_json(const Json& j) {
  return guarded("series", [&] {
    int t = j.at("trunc").get<int>();
    doc_require(t >= 0, "truncation must be non-negative");
    Series1 s(t);
    for (const auto& [key, v] : j.at("coeffs").items()) {
      int k = index_key(key, 1)[0];
      doc_require(k <= t, "coefficient above the truncation: " + key);
      s[k] = scalar_from_json(v);
    }
    return s;
  });
}

Series2 series2_from_json(const Json& j) {
  return guarded("series", [&] {
    int t = j.at("trunc").get<int>();
    doc_require(t >= 0, "truncation must be non-negative");
    Series2 s(t);
    for (const auto& [key, v] : j.at("coeffs").items()) {
      auto ij = index_key(key, 2);
      doc_require(ij[0] + ij[1] <= t, "coefficient above the truncation: " + key);
      s.at(ij[0], ij[1]) = scalar_from_json(v);
    }
    return s;
  });
}

Json wg_to_json(const WeingartenTable& t) {
  Json w = Json::object();
  for (const auto& [d, v] : t.values) w[d.to_string()] = to_pq(v);
  return {{"n", t.n}, {"N", to_pq(t.N)}, {"wg", w}};
}

WeingartenTable wg_from_json(const Json& j) {
  return guarded("wg", [&] {
    WeingartenTable t;
    t.n = j.at("n").get<int>();
    t.N = scalar_from_json(j.at("N"));
    for (const auto& [key, v] : j.at("wg").items()) {
      YoungDiagram d = YoungDiagram::parse(key);
      doc_require(d.size() == t.n, "Weingarten entry " + key + " has the wrong size");
      t.values[d] = scalar_from_json(v);
    }
    return t;
  });
}

Json finite_n_to_json(const FiniteNTable& t) {
  return {{"N", to_pq(t.N)}, {"order", t.values.order_bound()}, {"values", multfn_to_json(t.values)}};
}

FiniteNTable finite_n_from_json(const Json& j) {
  return guarded("finite-N table", [&] {
    FiniteNTable t;
    t.N = scalar_from_json(j.at("N"));
    t.values = multfn_from_json(j);
    return t;
  });
}

Json pp_to_json(const PP& x) {
  Json blocks = Json::array(), cycles = Json::array();
  for (auto b : x.partition().blocks()) {
    for (auto& v : b) ++v;
    blocks.push_back(b);
  }
  for (auto c : x.perm().cycles()) {
    for (auto& v : c) ++v;
    cycles.push_back(c);
  }
  return {{"blocks", blocks}, {"perm_cycles", cycles}};
}

PP pp_from_json(const Json& j) {
  return guarded("partitioned permutation", [&] {
    std::vector<std::vector<int>> blocks, cycles;
    int n = 0;
    for (const auto& b : j.at("blocks")) {
      blocks.push_back(int_list(b));
      for (int v : blocks.back()) n = std::max(n, v);
    }
    for (const auto& c : j.at("perm_cycles")) cycles.push_back(int_list(c));
    return PP(SetPartition::from_blocks(n, blocks), Permutation::from_cycles(n, cycles));
  });
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace hofc
