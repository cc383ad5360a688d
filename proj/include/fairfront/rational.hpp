#pragma once

#include <cstdint>
#include <string>

namespace fairfront {

// Exact rational with int64 numerator/denominator. Always normalized:
// den > 0, gcd(|num|, den) == 1. Comparisons and arithmetic go through
// __int128 intermediates; a result that cannot be renormalized into int64
// throws. Fairness values live comfortably inside these bounds (counts and
// bound denominators are small), so a throw here means a logic error, not a
// data problem.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t n);  // NOLINT: implicit int -> Rational is intended
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  double to_double() const;
  std::string to_string() const;  // "num/den", or "num" when den == 1

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational rat_min(const Rational& a, const Rational& b);
Rational rat_max(const Rational& a, const Rational& b);

// Accepts "3/4", "-1/2", "2", or a decimal like "0.25" (exact: 0.25 -> 1/4).
Rational parse_rational(const std::string& text);

}  // namespace fairfront
