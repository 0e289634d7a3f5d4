#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "bds/errors.hpp"

namespace bds {

// Exact rational arithmetic for slack parameters and measured ratios.
// The degree-threshold formulas must not inherit floating-point error:
// ceil(5*(5/eps+1)*2*alpha) evaluated in doubles can round the wrong way
// for eps like 1/3.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long value) : num_(value), den_(1) {}
  Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw input_error("rational with zero denominator");
    normalize();
  }

  // Accepts "3", "-3", "1/2", "0.25".
  static Rational parse(std::string_view text);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_positive() const { return num_ > 0; }

  long long floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  long long ceil() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(check(i128(a.num_) * b.den_ + i128(b.num_) * a.den_),
                    check(i128(a.den_) * b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(check(i128(a.num_) * b.den_ - i128(b.num_) * a.den_),
                    check(i128(a.den_) * b.den_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(check(i128(a.num_) * b.num_), check(i128(a.den_) * b.den_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw input_error("rational division by zero");
    return Rational(check(i128(a.num_) * b.den_), check(i128(a.den_) * b.num_));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  using i128 = __int128;

  static long long check(i128 v) {
    constexpr i128 kMax = INT64_MAX / 2;
    if (v > kMax || v < -kMax) throw input_error("rational arithmetic overflow");
    return static_cast<long long>(v);
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  long long num_ = 0;
  long long den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw input_error("empty rational literal");
  std::string s(text);
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      long long den = 1;
      for (size_t i = dot + 1; i < s.size(); ++i) {
        if (den > INT64_MAX / 10) throw input_error("rational literal too precise: " + s);
        den *= 10;
      }
      return Rational(std::stoll(digits), den);
    }
    return Rational(std::stoll(s));
  } catch (const input_error&) {
    throw;
  } catch (const std::logic_error&) {
    throw input_error("malformed rational literal: " + s);
  }
}

}  // namespace bds
