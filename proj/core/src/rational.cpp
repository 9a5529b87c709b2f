#include "rccs/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "rccs/errors.hpp"

namespace rccs {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

const char* to_string(Gate gate) noexcept {
  switch (gate) {
    case Gate::NotCorrelated: return "not-correlated";
    case Gate::NotLogicallyIndependent: return "not-logically-independent";
    case Gate::Incompatible: return "incompatible";
    case Gate::ZeroMeasure: return "zero-measure";
    case Gate::CarveOutOfRange: return "carve-out-of-range";
    case Gate::ScreeningOffFails: return "screening-off-fails";
  }
  return "unknown";
}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = Impl(numerator, denominator);
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InputError("malformed rational \"" + std::string(text) + "\": expected \"n\" or \"p/q\"");
  }
  BigInt n{std::string(num)};
  BigInt d{std::string(den)};
  if (d == 0) throw InputError("malformed rational \"" + std::string(text) + "\": zero denominator");
  if (negative) n = -n;
  return Rational(n, d);
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

std::string Rational::to_string() const {
  const BigInt d = denominator();
  if (d == 1) return numerator().str();
  return numerator().str() + "/" + d.str();
}

double Rational::to_double() const { return value_.convert_to<double>(); }

std::string Rational::to_decimal(int digits) const {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const BigInt n = numerator();
  const BigInt d = denominator();
  BigInt magnitude = abs(n) * scale;
  // round half away from zero
  BigInt scaled = (2 * magnitude + d) / (2 * d);
  std::string s = scaled.str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  if (n < 0 && scaled != 0) s.insert(0, "-");
  return s;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.value_ == 0) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational operator-(const Rational& r) { return Rational(Rational::Impl(-r.value_)); }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (lhs.value_ < rhs.value_) return std::strong_ordering::less;
  if (rhs.value_ < lhs.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace rccs
