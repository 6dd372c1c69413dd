#include "excol/exactlin/field.hpp"

#include "excol/error.hpp"

namespace excol::lin {

Rationals::Element Rationals::inv(const Element& a) const {
  if (is_zero(a)) throw Error("division by zero in Q");
  return Element(1) / a;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
    throw Error("field characteristic must be a prime below 2^32, got " + std::to_string(p));
  }
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw Error("division by zero in " + name());
  // Fermat: a^(p-2)
  Element result = 1;
  Element base = a;
  std::uint64_t e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

PrimeField::Element PrimeField::from_int(long v) const {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += static_cast<long>(p_);
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const {
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0) {
    throw Error("coefficient " + q.get_str() + " has denominator divisible by " +
                std::to_string(p_));
  }
  return mul(static_cast<Element>(num.get_ui()), inv(static_cast<Element>(den.get_ui())));
}

}  // namespace excol::lin
