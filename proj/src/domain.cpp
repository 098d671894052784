#include "hesspave/domain.hpp"

namespace hesspave {

bool PrimeField::is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("field size " + std::to_string(p) + " is not a prime below 2^31");
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a % p_ == 0) throw std::domain_error("division by zero in " + name());
  std::uint64_t r = 1, b = a, e = p_ - 2;
  while (e) {
    if (e & 1) r = r * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return static_cast<value_type>(r);
}

}  // namespace hesspave
