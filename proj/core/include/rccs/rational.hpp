#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace rccs {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator. All classical probabilities are Rationals.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error on a zero denominator.
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Parses "n", "-n", "p/q" or "-p/q" with decimal digits only. Fractions
  /// are reduced; "1/0", "+1", "1.5" and embedded whitespace are rejected
  /// with InputError.
  static Rational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  /// "p/q" in lowest terms, or "n" when the denominator is 1.
  std::string to_string() const;
  double to_double() const;
  /// Fixed-point decimal with `digits` fractional digits, e.g. "0.187500".
  std::string to_decimal(int digits = 6) const;

  bool is_zero() const { return value_ == 0; }
  int sign() const { return value_.sign(); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error when dividing by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& r);

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  using Impl = boost::multiprecision::cpp_rational;
  explicit Rational(Impl value) : value_(std::move(value)) {}

  Impl value_;
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace rccs
