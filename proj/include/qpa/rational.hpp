#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qpa {

// Exact rational arithmetic on an int64 numerator / denominator pair.
//
// Every intermediate runs through __int128 and every stored value is fully
// reduced with a positive denominator. A reduced result that still does not
// fit in int64 throws std::overflow_error rather than losing exactness.
// The oracle paths (word sums at n <= 10) keep reduced denominators below
// ~4e18, so the representation has headroom but it is not unlimited.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int64_t num, int64_t den) { set_reduced(num, den); }

  int64_t numerator() const { return num_; }
  int64_t denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  double to_double() const {
    return static_cast<double>(static_cast<long double>(num_) /
                               static_cast<long double>(den_));
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Smallest integer >= value.
  int64_t ceil() const {
    if (num_ >= 0) {
      return narrow((static_cast<__int128>(num_) + den_ - 1) / den_);
    }
    return num_ / den_;  // truncation toward zero is ceil for negatives
  }

  Rational& operator+=(const Rational& o) {
    int64_t g = gcd64(den_, o.den_);
    __int128 left = static_cast<__int128>(num_) * (o.den_ / g);
    __int128 right = static_cast<__int128>(o.num_) * (den_ / g);
    __int128 num;
    if (__builtin_add_overflow(left, right, &num)) {
      throw std::overflow_error("rational: addition overflow");
    }
    set_reduced128(num, static_cast<__int128>(den_ / g) * o.den_);
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += Rational(-o.num_, o.den_); }

  Rational& operator*=(const Rational& o) {
    // Cross-reduce first so the final product is already in lowest terms.
    int64_t g1 = gcd64(num_, o.den_);
    int64_t g2 = gcd64(o.num_, den_);
    num_ = narrow(static_cast<__int128>(num_ / g1) * (o.num_ / g2));
    den_ = narrow(static_cast<__int128>(den_ / g2) * (o.den_ / g1));
    return *this;
  }

  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational: division by zero");
    return *this *= Rational(o.den_, o.num_);
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  static constexpr __int128 kInt64Max = INT64_MAX;
  static constexpr __int128 kInt64Min = INT64_MIN;

  static int64_t narrow(__int128 v) {
    if (v > kInt64Max || v < kInt64Min) {
      throw std::overflow_error("rational: value exceeds 64-bit exact range");
    }
    return static_cast<int64_t>(v);
  }

  static int64_t gcd64(int64_t a, int64_t b) {
    unsigned __int128 x = a < 0 ? -static_cast<__int128>(a) : a;
    unsigned __int128 y = b < 0 ? -static_cast<__int128>(b) : b;
    while (y != 0) {
      unsigned __int128 t = x % y;
      x = y;
      y = t;
    }
    return x == 0 ? 1 : static_cast<int64_t>(x);
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    unsigned __int128 x = a < 0 ? static_cast<unsigned __int128>(-(a + 1)) + 1 : a;
    unsigned __int128 y = b < 0 ? static_cast<unsigned __int128>(-(b + 1)) + 1 : b;
    while (y != 0) {
      unsigned __int128 t = x % y;
      x = y;
      y = t;
    }
    return static_cast<__int128>(x);
  }

  void set_reduced(int64_t num, int64_t den) {
    set_reduced128(num, den);
  }

  void set_reduced128(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) {
      num_ = 0;
      den_ = 1;
      return;
    }
    __int128 g = gcd128(num, den);
    num_ = narrow(num / g);
    den_ = narrow(den / g);
  }

  int64_t num_ = 0;
  int64_t den_ = 1;
};

// base^exp for a nonnegative integer exponent.
inline Rational pow(Rational base, int64_t exp) {
  if (exp < 0) throw std::invalid_argument("pow: negative exponent");
  Rational result(1);
  while (exp > 0) {
    if (exp & 1) result *= base;
    exp >>= 1;
    if (exp > 0) base *= base;
  }
  return result;
}

}  // namespace qpa
