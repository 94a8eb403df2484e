#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qfactor {

// Exact rational shifts.  Float keys would break term merging in the
// operator algebra, so shifts are kept as normalized num/den pairs.
class Rational {
public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0)
      throw std::invalid_argument("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }
  static Rational half(std::int64_t halves) { return Rational(halves, 2); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(Rational a, Rational b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(Rational a, Rational b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(Rational a) { return Rational(-a.num_, a.den_); }
  friend bool operator==(Rational a, Rational b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(Rational a, Rational b) { return !(a == b); }
  friend bool operator<(Rational a, Rational b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

  std::string str() const {
    if (den_ == 1)
      return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  std::int64_t num_;
  std::int64_t den_;
};

} // namespace qfactor
