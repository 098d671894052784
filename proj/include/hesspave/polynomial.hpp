#ifndef HESSPAVE_POLYNOMIAL_HPP
#define HESSPAVE_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hesspave {

using Rational = mpq_class;

std::string to_string(const Rational& q);

/// The variable x_{row,col}; in the B_k(w) generators it is the coordinate
/// that sits at matrix entry (row, col).
struct Coordinate {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Coordinate&, const Coordinate&) = default;
};

std::string to_string(Coordinate c);

/// A power product of coordinates, factors sorted by coordinate.
class Monomial {
public:
  Monomial() = default;
  static Monomial of(Coordinate c, unsigned exponent = 1);

  const std::vector<std::pair<Coordinate, unsigned>>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  unsigned degree() const;
  unsigned exponent(Coordinate c) const;
  bool divides(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial cofactor_in(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

private:
  std::vector<std::pair<Coordinate, unsigned>> factors_;
};

/// Lexicographic term order in which a smaller coordinate is a more
/// significant variable. Compatible with multiplication.
struct LexOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over the rationals in canonical form: no
/// zero coefficients, terms keyed by monomial. Equality is term equality.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, LexOrder>;

  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  static Polynomial variable(Coordinate c);
  static Polynomial term(const Rational& c, Monomial m);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  unsigned degree() const;
  std::set<Coordinate> variables() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Quotient when `divisor` divides exactly; throws std::domain_error otherwise.
  Polynomial divide_exact(const Polynomial& divisor) const;

  /// Replaces the listed coordinates by constants; others stay symbolic.
  Polynomial substitute(const std::map<Coordinate, Rational>& values) const;
  /// Replaces variables by other variables; unlisted ones are kept.
  Polynomial rename(const std::map<Coordinate, Coordinate>& mapping) const;
  /// Value mod p of a polynomial under a full assignment of its variables.
  std::uint32_t evaluate_mod(std::uint32_t p, const std::map<Coordinate, std::uint32_t>& values) const;

  /// Leading term first, e.g. "x_{4,5}*x_{5,6} + x_{4,6}".
  std::string to_string() const;
  /// [[coeff, [[row, col, exp], ...]], ...] suitable for JSON export.
  std::vector<std::pair<std::string, std::vector<std::array<int, 3>>>> monomial_list() const;

private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

}  // namespace hesspave

#endif
