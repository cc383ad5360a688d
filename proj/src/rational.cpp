#include "fairfront/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace fairfront {

namespace {

using i128 = __int128;

std::int64_t checked_narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw std::overflow_error("rational overflow");
  }
  return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(std::int64_t n) : num_(n), den_(1) {}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  i128 nn = n, dd = d;
  if (dd < 0) {
    nn = -nn;
    dd = -dd;
  }
  i128 g = gcd128(nn, dd);
  if (g > 1) {
    nn /= g;
    dd /= g;
  }
  num_ = checked_narrow(nn);
  den_ = checked_narrow(dd);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = checked_narrow(-static_cast<i128>(num_));
  r.den_ = den_;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
  i128 d = static_cast<i128>(den_) * o.den_;
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num_ = checked_narrow(n);
  r.den_ = checked_narrow(d);
  return r;
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  i128 n = static_cast<i128>(num_) * o.num_;
  i128 d = static_cast<i128>(den_) * o.den_;
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num_ = checked_narrow(n);
  r.den_ = checked_narrow(d);
  return r;
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<i128>(num_) * o.den_ < static_cast<i128>(o.num_) * den_;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational rat_min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("cannot parse rational '" + text + "'");
  };
  if (text.empty()) return fail();
  std::size_t pos = 0;
  bool neg = false;
  if (text[pos] == '+' || text[pos] == '-') {
    neg = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](i128& out) {
    std::size_t start = pos;
    out = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      out = out * 10 + (text[pos] - '0');
      if (out > INT64_MAX) throw std::overflow_error("rational overflow");
      ++pos;
    }
    return pos > start;
  };

  i128 whole = 0;
  if (!digits(whole)) return fail();
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    i128 den = 0;
    if (!digits(den) || pos != text.size() || den == 0) return fail();
    return Rational(checked_narrow(neg ? -whole : whole), checked_narrow(den));
  }
  i128 num = whole, den = 1;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      num = num * 10 + (text[pos] - '0');
      den *= 10;
      if (num > INT64_MAX || den > INT64_MAX) {
        throw std::overflow_error("rational overflow");
      }
      ++pos;
    }
    if (pos == start) return fail();
  }
  if (pos != text.size()) return fail();
  return Rational(checked_narrow(neg ? -num : num), checked_narrow(den));
}

}  // namespace fairfront
