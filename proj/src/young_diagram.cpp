#include "hofc/young_diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "hofc/errors.hpp"

namespace hofc {

YoungDiagram::YoungDiagram(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) require(p > 0, "Young diagram parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int YoungDiagram::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

Integer YoungDiagram::class_size() const {
  std::map<int, int> mult;
  for (int p : parts_) ++mult[p];
  Integer den = 1;
  for (auto [part, m] : mult) {
    Integer pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(m));
    den *= pk * factorial(m);
  }
  return factorial(size()) / den;
}

std::string YoungDiagram::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

YoungDiagram YoungDiagram::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '(' && c != ')' && c != '[' && c != ']') s += c;
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw ParseError("empty part in diagram: " + text);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("bad diagram: " + text);
    }
    if (used != tok.size()) throw ParseError("bad diagram: " + text);
    if (v <= 0) throw PreconditionError("diagram parts must be positive: " + text);
    parts.push_back(v);
  }
  return YoungDiagram(parts);
}

std::vector<YoungDiagram> diagrams_of(int n) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxp) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  if (n == 0) return {YoungDiagram()};
  rec(n, n);
  std::stable_sort(out.begin(), out.end(),
                   [](const YoungDiagram& a, const YoungDiagram& b) { return a.length() < b.length(); });
  return out;
}

std::vector<YoungDiagram> diagrams_up_to(int n) {
  std::vector<YoungDiagram> out;
  for (int k = 1; k <= n; ++k) {
    auto d = diagrams_of(k);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

}  // namespace hofc
