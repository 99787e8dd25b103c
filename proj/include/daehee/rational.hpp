#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace daehee {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number over arbitrary-precision integers.
///
/// Canonical form is maintained on every operation: the denominator is
/// always positive, numerator and denominator are coprime, and zero is
/// stored as 0/1. Equality is therefore structural.
class Rational {
public:
  Rational() = default;
  Rational(long long n) : v_(n) {}
  Rational(const BigInt& n) : v_(n) {}
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
  Rational(BigInt num, BigInt den) {
    if (den.is_zero())
      throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    v_ = Backend(num, den);  // backend reduces to lowest terms
  }

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_.sign(); }

  Rational operator-() const { return Rational(Backend(-v_)); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(Backend(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(Backend(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(Backend(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero())
      throw std::domain_error("Rational: division by zero");
    return Rational(Backend(a.v_ / b.v_));
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational inverse() const {
    if (is_zero())
      throw std::domain_error("Rational: inverse of zero");
    return Rational(denominator(), numerator());
  }

  /// "p" when integral, "p/q" otherwise; sign carried by the numerator.
  std::string str() const {
    if (is_integer())
      return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  /// Parses the str() form: optional sign, digits, optional "/digits".
  static Rational from_string(const std::string& s) {
    auto bad = [&] { return std::invalid_argument("Rational: cannot parse '" + s + "'"); };
    std::size_t pos = 0;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      neg = s[pos] == '-';
      ++pos;
    }
    auto digits = [&](std::size_t from, std::size_t to) {
      if (from == to)
        throw bad();
      for (std::size_t i = from; i < to; ++i)
        if (s[i] < '0' || s[i] > '9')
          throw bad();
      return BigInt(s.substr(from, to - from));
    };
    std::size_t slash = s.find('/', pos);
    BigInt num, den = 1;
    if (slash == std::string::npos) {
      num = digits(pos, s.size());
    } else {
      num = digits(pos, slash);
      den = digits(slash + 1, s.size());
      if (den.is_zero())
        throw std::domain_error("Rational: zero denominator in '" + s + "'");
    }
    if (neg)
      num = -num;
    return Rational(num, den);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

private:
  using Backend = boost::multiprecision::cpp_rational;
  explicit Rational(Backend v) : v_(std::move(v)) {}
  Backend v_;
};

/// Integer power with negative exponents allowed (0^0 = 1).
inline Rational pow(const Rational& base, long long e) {
  if (e == 0)
    return Rational(1);
  Rational b = base;
  unsigned long long mag;
  if (e < 0) {
    b = base.inverse();
    mag = static_cast<unsigned long long>(-(e + 1)) + 1ULL;
  } else {
    mag = static_cast<unsigned long long>(e);
  }
  Rational r(1);
  while (mag) {
    if (mag & 1)
      r *= b;
    mag >>= 1;
    if (mag)
      b *= b;
  }
  return r;
}

inline BigInt factorial(std::size_t n) {
  BigInt r = 1;
  for (std::size_t i = 2; i <= n; ++i)
    r *= static_cast<unsigned long long>(i);
  return r;
}

inline BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n)
    return BigInt(0);
  if (k > n - k)
    k = n - k;
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= static_cast<unsigned long long>(n - k + i);
    r /= static_cast<unsigned long long>(i);  // exact at every step
  }
  return r;
}

}  // namespace daehee
