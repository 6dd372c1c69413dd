#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

namespace excol::lin {

// Field objects in the fflas-ffpack style: elements are plain values and the
// field object carries the arithmetic. Both fields expose the same interface
// so that every linear-algebra routine is a template over `Field`.

class Rationals {
 public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const;

  // y += a * x
  void add_mul(Element& y, const Element& a, const Element& x) const { y += a * x; }

  Element from_rational(const mpq_class& q) const {
    Element r = q;
    r.canonicalize();
    return r;
  }
  Element from_int(long v) const { return Element(v); }
  std::string to_string(const Element& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }
  std::uint64_t characteristic() const { return 0; }
};

class PrimeField {
 public:
  using Element = std::uint64_t;

  // p must be a prime below 2^32 so that products fit in 64 bits.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  bool equal(Element a, Element b) const { return a == b; }

  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element mul(Element a, Element b) const { return (a * b) % p_; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const;

  void add_mul(Element& y, Element a, Element x) const { y = add(y, mul(a, x)); }

  // Throws if the denominator vanishes mod p.
  Element from_rational(const mpq_class& q) const;
  Element from_int(long v) const;
  std::string to_string(Element a) const { return std::to_string(a); }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
  std::uint64_t characteristic() const { return p_; }

 private:
  std::uint64_t p_;
};

inline constexpr std::uint64_t kDefaultPrime = 32003;

bool is_prime(std::uint64_t p);

}  // namespace excol::lin
