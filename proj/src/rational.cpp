#include "zonoforge/rational.hpp"

#include <stdexcept>

namespace zonoforge {

namespace {

mpz_class parse_integer(std::string_view text, bool allow_sign) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t start = 0;
  if (s[0] == '-' || s[0] == '+') {
    if (!allow_sign) throw std::invalid_argument("unexpected sign in '" + s + "'");
    start = 1;
  }
  if (start == s.size()) throw std::invalid_argument("malformed integer '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

}  // namespace

Rat::Rat(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(mpq_class(parse_integer(text, true)));
  return from_parts(text.substr(0, slash), text.substr(slash + 1));
}

Rat Rat::from_parts(std::string_view num, std::string_view den) {
  mpz_class n = parse_integer(num, true);
  mpz_class d = parse_integer(den, false);
  if (d == 0) throw std::invalid_argument("zero denominator");
  return Rat(mpq_class(n, d));
}

std::string Rat::str() const {
  if (is_integer()) return num_str();
  return num_str() + "/" + den_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rat factorial(unsigned k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rat(mpq_class(f));
}

}  // namespace zonoforge
