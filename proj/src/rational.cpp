#include "pmcover/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "pmcover/errors.hpp"

namespace pmcover {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ParseError("rational overflow");
  return out;
}

std::int64_t pow10(int exponent) {
  std::int64_t out = 1;
  for (int i = 0; i < exponent; ++i) out = checked_mul(out, 10);
  return out;
}

// Exact value of a decimal literal such as "-12.5e-3".
Rational parse_decimal(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::int64_t mantissa = 0;
  int fraction_digits = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mantissa = checked_mul(mantissa, 10);
      if (__builtin_add_overflow(mantissa, ch - '0', &mantissa)) throw ParseError("rational overflow");
      any_digit = true;
      if (seen_point) ++fraction_digits;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw ParseError("not a number: '" + text + "'");
  int exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    char* end = nullptr;
    const long e = std::strtol(text.c_str() + pos + 1, &end, 10);
    if (end == text.c_str() + pos + 1 || *end != '\0') throw ParseError("bad exponent in '" + text + "'");
    exponent = static_cast<int>(e);
    pos = text.size();
  }
  if (pos != text.size()) throw ParseError("trailing characters in '" + text + "'");
  const int shift = exponent - fraction_digits;
  if (negative) mantissa = -mantissa;
  if (shift >= 0) return Rational(checked_mul(mantissa, pow10(shift)), 1);
  return Rational(mantissa, pow10(-shift));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw ValidationError("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return parse_decimal(text);
  const Rational num = parse_decimal(text.substr(0, slash));
  const Rational den = parse_decimal(text.substr(slash + 1));
  if (!num.is_integer() || !den.is_integer()) throw ParseError("fraction parts must be integers: '" + text + "'");
  if (den.num() == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rational(num.num(), den.num());
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw ParseError("non-finite weight");
  std::int64_t scale = 1;
  for (int digits = 0; digits <= 12; ++digits, scale *= 10) {
    const double scaled = value * static_cast<double>(scale);
    if (std::fabs(scaled) > 9.0e15) break;
    const auto rounded = static_cast<std::int64_t>(std::llround(scaled));
    if (static_cast<double>(rounded) / static_cast<double>(scale) == value) return Rational(rounded, scale);
  }
  throw ParseError("weight has no short exact decimal form; write it as \"p/q\"");
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a / g, b, &out)) throw ValidationError("weight scale overflows 64 bits");
  return out;
}

}  // namespace pmcover
