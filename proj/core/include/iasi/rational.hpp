#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace iasi {

/// Exact fraction for closed-form formulas; kept normalized (gcd 1, den > 0)
/// so non-integer values are detected rather than rounded.
class Rational {
 public:
  constexpr Rational(std::int64_t num = 0, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const auto g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr bool is_integer() const { return den_ == 1; }

  friend constexpr Rational operator+(Rational a, Rational b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator-(Rational a, Rational b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator*(Rational a, Rational b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend constexpr Rational operator/(Rational a, Rational b) {
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend constexpr bool operator==(Rational a, Rational b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr std::strong_ordering operator<=>(Rational a, Rational b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace iasi
