#include "hesspave/polynomial.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace hesspave {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(Coordinate c) {
  return "x_{" + std::to_string(c.row) + "," + std::to_string(c.col) + "}";
}

// ------------------------------------------------------------------- Monomial

Monomial Monomial::of(Coordinate c, unsigned exponent) {
  Monomial m;
  if (exponent) m.factors_.push_back({c, exponent});
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

unsigned Monomial::exponent(Coordinate c) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), c,
                             [](const auto& f, Coordinate key) { return f.first < key; });
  return (it != factors_.end() && it->first == c) ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [c, e] : factors_)
    if (other.exponent(c) < e) return false;
  return true;
}

Monomial Monomial::cofactor_in(const Monomial& other) const {
  Monomial q;
  for (const auto& [c, e] : other.factors_) {
    const unsigned mine = exponent(c);
    if (mine > e) throw std::domain_error("monomial does not divide");
    if (e > mine) q.factors_.push_back({c, e - mine});
  }
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
      out.factors_.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->first < ia->first) {
      out.factors_.push_back(*ib++);
    } else {
      out.factors_.push_back({ia->first, ia->second + ib->second});
      ++ia;
      ++ib;
    }
  }
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [c, e] : factors_) {
    if (!out.empty()) out += '*';
    out += hesspave::to_string(c);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool LexOrder::operator()(const Monomial& a, const Monomial& b) const {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) {
      // The side holding the smaller coordinate has a positive exponent in a
      // more significant variable where the other side has zero.
      return fb[i].first < fa[i].first;
    }
    if (fa[i].second != fb[i].second) return fa[i].second < fb[i].second;
  }
  return fa.size() < fb.size();
}

// ----------------------------------------------------------------- Polynomial

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.emplace(Monomial{}, Rational(c));
}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(Coordinate c) { return term(Rational(1), Monomial::of(c)); }

Polynomial Polynomial::term(const Rational& c, Monomial m) {
  Polynomial p;
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& [m, _] : terms_) d = std::max(d, m.degree());
  return d;
}

std::set<Coordinate> Polynomial::variables() const {
  std::set<Coordinate> out;
  for (const auto& [m, _] : terms_)
    for (const auto& f : m.factors()) out.insert(f.first);
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, Rational(-c));
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, Rational(ca * cb));
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial operator-(Polynomial a) {
  for (auto& [_, c] : a.terms_) c = -c;
  return a;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto& [lead_m, lead_c] = *divisor.terms_.rbegin();
  Polynomial quotient;
  Polynomial rem = *this;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms_.rbegin();
    if (!lead_m.divides(rm)) throw std::domain_error("polynomial division is not exact");
    Polynomial t = term(Rational(rc / lead_c), lead_m.cofactor_in(rm));
    quotient += t;
    rem -= t * divisor;
  }
  return quotient;
}

Polynomial Polynomial::substitute(const std::map<Coordinate, Rational>& values) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    Monomial rest;
    for (const auto& [var, e] : m.factors()) {
      auto it = values.find(var);
      if (it == values.end()) {
        rest = rest * Monomial::of(var, e);
      } else {
        Rational pw = 1;
        for (unsigned k = 0; k < e; ++k) pw *= it->second;
        coeff *= pw;
      }
    }
    out.add_term(rest, coeff);
  }
  return out;
}

Polynomial Polynomial::rename(const std::map<Coordinate, Coordinate>& mapping) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Monomial renamed;
    for (const auto& [var, e] : m.factors()) {
      auto it = mapping.find(var);
      renamed = renamed * Monomial::of(it == mapping.end() ? var : it->second, e);
    }
    out.add_term(renamed, c);
  }
  return out;
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_mod(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_ui();
}

}  // namespace

std::uint32_t Polynomial::evaluate_mod(std::uint32_t p,
                                       const std::map<Coordinate, std::uint32_t>& values) const {
  std::uint64_t acc = 0;
  for (const auto& [m, c] : terms_) {
    const std::uint64_t den = reduce_mod(c.get_den(), p);
    if (den == 0) throw std::domain_error("coefficient denominator vanishes mod p");
    std::uint64_t t = reduce_mod(c.get_num(), p) * pow_mod(den, p - 2, p) % p;
    for (const auto& [var, e] : m.factors()) {
      auto it = values.find(var);
      if (it == values.end()) throw std::invalid_argument("no value for " + hesspave::to_string(var));
      t = t * pow_mod(it->second, e, p) % p;
    }
    acc = (acc + t) % p;
  }
  return static_cast<std::uint32_t>(acc);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (m.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += m.to_string();
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::vector<std::array<int, 3>>>> Polynomial::monomial_list() const {
  std::vector<std::pair<std::string, std::vector<std::array<int, 3>>>> out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::vector<std::array<int, 3>> vars;
    for (const auto& [c, e] : it->first.factors()) vars.push_back({c.row, c.col, static_cast<int>(e)});
    out.emplace_back(it->second.get_str(), std::move(vars));
  }
  return out;
}

}  // namespace hesspave
