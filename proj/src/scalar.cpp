#include "hofc/scalar.hpp"

#include <cctype>

#include "hofc/errors.hpp"

namespace hofc {

std::string to_pq(const Scalar& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_text(const Scalar& x) { return x.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view raw) {
  std::string_view s = raw;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool neg = false;
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  Scalar out;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw ParseError("bad rational: " + std::string(raw));
    Integer d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator: " + std::string(raw));
    out = Scalar(Integer(std::string(num)), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
      throw ParseError("bad decimal: " + std::string(raw));
    Integer num{std::string(ip.empty() ? "0" : ip) + std::string(fp)};
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    out = Scalar(num, den);
  } else {
    if (!all_digits(body)) throw ParseError("bad number: " + std::string(raw));
    out = Scalar(Integer(std::string(body)));
  }
  out.canonicalize();
  return neg ? Scalar(-out) : out;
}

Scalar pow(const Scalar& x, int e) {
  if (e < 0) {
    if (x == 0) throw PreconditionError("negative power of zero");
    return pow(Scalar(1) / x, -e);
  }
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  Scalar r(n, d);
  r.canonicalize();
  return r;
}

Integer factorial(int n) {
  require(n >= 0, "factorial of negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace hofc
