#ifndef HESSPAVE_DOMAIN_HPP
#define HESSPAVE_DOMAIN_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "hesspave/polynomial.hpp"

namespace hesspave {

// Scalar domains. Each supplies value_type, is_field, and the ring
// operations; `div` is exact division (a true quotient in a field, and a
// quotient that must divide evenly in the polynomial ring).

struct RationalField {
  using value_type = Rational;
  static constexpr bool is_field = true;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long v) const { return v; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type div(const value_type& a, const value_type& b) const {
    if (b == 0) throw std::domain_error("division by zero");
    return a / b;
  }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string to_string(const value_type& a) const { return a.get_str(); }
  std::string name() const { return "QQ"; }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Z/p for a prime p < 2^31.
class PrimeField {
public:
  using value_type = std::uint32_t;
  static constexpr bool is_field = true;

  PrimeField() = default;
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  value_type zero() const { return 0; }
  value_type one() const { return 1 % p_; }
  value_type from_int(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<value_type>(r < 0 ? r + static_cast<long>(p_) : r);
  }
  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const;
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }
  std::string to_string(value_type a) const { return std::to_string(a); }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
  friend bool operator==(const PrimeField&, const PrimeField&) = default;

  static bool is_prime(std::uint64_t p);

private:
  std::uint32_t p_ = 2;
};

/// QQ[x_{ab}] with exact division.
struct PolynomialRing {
  using value_type = Polynomial;
  static constexpr bool is_field = false;

  value_type zero() const { return {}; }
  value_type one() const { return Polynomial(1L); }
  value_type from_int(long v) const { return Polynomial(v); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type div(const value_type& a, const value_type& b) const { return a.divide_exact(b); }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string to_string(const value_type& a) const { return a.to_string(); }
  std::string name() const { return "QQ[x]"; }
  friend bool operator==(const PolynomialRing&, const PolynomialRing&) { return true; }
};

}  // namespace hesspave

#endif
