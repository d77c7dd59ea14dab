#pragma once

#include <cstdint>
#include <string>

namespace pmcover {

// Exact nonnegative-or-signed fraction with 64-bit parts, always reduced
// and with a positive denominator. Used for element weights only; bound
// evaluation that needs unbounded precision goes through Boost rationals.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Accepts "7", "-3", "3/4" and plain decimals such as "0.25" or "1e-3".
  static Rational parse(const std::string& text);
  // Exact conversion of a double that has a short decimal expansion
  // (at most 12 fractional digits); throws ParseError otherwise.
  static Rational from_double(double value);

  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Least common multiple with overflow detection (throws ValidationError).
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

}  // namespace pmcover
