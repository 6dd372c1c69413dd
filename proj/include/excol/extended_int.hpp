#pragma once

#include <compare>
#include <string>

namespace excol {

// An integer or ±infinity. Addition saturates; +inf absorbs -inf, because a
// sum over a chain with an empty link describes a zero space.
class ExtendedInt {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  constexpr ExtendedInt() = default;
  constexpr ExtendedInt(long v) : kind_(Kind::Finite), value_(v) {}  // NOLINT: implicit by design

  static constexpr ExtendedInt pos_inf() { return ExtendedInt(Kind::PosInf); }
  static constexpr ExtendedInt neg_inf() { return ExtendedInt(Kind::NegInf); }

  constexpr bool finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  constexpr Kind kind() const { return kind_; }
  constexpr long value() const { return value_; }

  friend constexpr ExtendedInt operator+(ExtendedInt a, ExtendedInt b) {
    if (a.is_pos_inf() || b.is_pos_inf()) return pos_inf();
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    return ExtendedInt(a.value_ + b.value_);
  }
  friend constexpr ExtendedInt operator-(ExtendedInt a, long b) { return a + ExtendedInt(-b); }

  friend constexpr bool operator==(ExtendedInt a, ExtendedInt b) {
    return a.kind_ == b.kind_ && (!a.finite() || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtendedInt a, ExtendedInt b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    if (!a.finite()) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const {
    if (is_pos_inf()) return "+inf";
    if (is_neg_inf()) return "-inf";
    return std::to_string(value_);
  }

 private:
  constexpr explicit ExtendedInt(Kind k) : kind_(k) {}
  Kind kind_ = Kind::Finite;
  long value_ = 0;
};

}  // namespace excol
