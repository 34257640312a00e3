#include "zonoforge/qpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zonoforge {

namespace {

void enumerate_degree(std::size_t nvars, unsigned remaining, Exponent& cur, std::size_t pos,
                      std::vector<Exponent>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  // Ascending lexicographic: smallest leading entry first.
  for (unsigned e = 0; e <= remaining; ++e) {
    cur[pos] = e;
    enumerate_degree(nvars, remaining - e, cur, pos + 1, out);
  }
}

// Falling factorial b (b-1) ... (b-a+1).
Rat falling(unsigned b, unsigned a) {
  mpz_class r = 1;
  for (unsigned i = 0; i < a; ++i) r *= (b - i);
  return Rat(mpq_class(r));
}

}  // namespace

unsigned total_degree(const Exponent& s) { return std::accumulate(s.begin(), s.end(), 0u); }

std::vector<Exponent> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Exponent> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponent cur(nvars, 0);
  enumerate_degree(nvars, degree, cur, 0, out);
  return out;
}

MPoly::MPoly(std::size_t nvars, Terms terms) : nvars_(nvars) {
  for (auto& [s, c] : terms) add_term(s, c);
}

MPoly MPoly::constant(std::size_t nvars, const Rat& c) {
  MPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MPoly MPoly::monomial(const Exponent& s, const Rat& c) {
  MPoly p(s.size());
  p.add_term(s, c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  Exponent s(nvars, 0);
  s[index] = 1;
  return monomial(s);
}

MPoly MPoly::linear_form(std::span<const int> coeffs) {
  MPoly p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Exponent s(coeffs.size(), 0);
    s[i] = 1;
    p.add_term(s, Rat(coeffs[i]));
  }
  return p;
}

int MPoly::degree() const {
  int d = -1;
  for (const auto& [s, c] : terms_) d = std::max(d, static_cast<int>(total_degree(s)));
  return d;
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = total_degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& kv) { return total_degree(kv.first) == d; });
}

void MPoly::add_term(const Exponent& s, const Rat& c) {
  if (s.size() != nvars_) throw std::invalid_argument("exponent length does not match nvars");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MPoly::check_same(const MPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable-count mismatch");
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_same(o);
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_same(o);
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_) v *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_same(b);
  MPoly r(a.nvars_);
  Exponent s(a.nvars_);
  for (const auto& [sa, ca] : a.terms_) {
    for (const auto& [sb, cb] : b.terms_) {
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = sa[i] + sb[i];
      r.add_term(s, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly r = constant(nvars_, Rat(1));
  MPoly base = *this;
  while (k) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

MPoly MPoly::reversed() const {
  MPoly r(nvars_);
  for (const auto& [s, c] : terms_) r.add_term(Exponent(s.rbegin(), s.rend()), c);
  return r;
}

MPoly MPoly::embedded(std::size_t nvars) const {
  if (nvars < nvars_) throw std::invalid_argument("cannot embed into fewer variables");
  MPoly r(nvars);
  for (const auto& [s, c] : terms_) {
    Exponent e = s;
    e.resize(nvars, 0);
    r.add_term(e, c);
  }
  return r;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    Rat mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant_term = total_degree(s) == 0;
    if (constant_term || mag != Rat(1)) {
      os << mag.str();
      if (!constant_term) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << "t" << (i + 1);
      if (s[i] > 1) os << "^" << s[i];
    }
  }
  return os.str();
}

MPoly add(const MPoly& a, const MPoly& b) { return a + b; }
MPoly mul(const MPoly& a, const MPoly& b) { return a * b; }

MPoly apply_diff(const MPoly& op, const MPoly& target) {
  if (op.nvars() != target.nvars()) throw std::invalid_argument("variable-count mismatch");
  const std::size_t n = op.nvars();
  MPoly r(n);
  Exponent e(n);
  for (const auto& [so, co] : op.terms()) {
    for (const auto& [st, ct] : target.terms()) {
      bool divides = true;
      for (std::size_t i = 0; i < n && divides; ++i) divides = st[i] >= so[i];
      if (!divides) continue;
      Rat c = co * ct;
      for (std::size_t i = 0; i < n; ++i) {
        e[i] = st[i] - so[i];
        if (so[i]) c *= falling(st[i], so[i]);
      }
      r.add_term(e, c);
    }
  }
  return r;
}

MPoly differentiate(const MPoly& target, const Exponent& s) {
  return apply_diff(MPoly::monomial(s), target);
}

std::set<Exponent> support(const MPoly& p) {
  std::set<Exponent> out;
  for (const auto& [s, c] : p.terms()) out.insert(s);
  return out;
}

MPoly normalized_monomial(const Exponent& s) {
  Rat denom(1);
  for (unsigned e : s) denom *= factorial(e);
  return MPoly::monomial(s, Rat(1) / denom);
}

Rat eval(const MPoly& p, std::span<const Rat> point) {
  if (point.size() != p.nvars()) throw std::invalid_argument("point length does not match nvars");
  Rat total(0);
  for (const auto& [s, c] : p.terms()) {
    Rat v = c;
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (unsigned k = 0; k < s[i]; ++k) v *= point[i];
    }
    total += v;
  }
  return total;
}

Rat coeff_of(const MPoly& p, const Exponent& s) {
  auto it = p.terms().find(s);
  return it == p.terms().end() ? Rat(0) : it->second;
}

}  // namespace zonoforge
