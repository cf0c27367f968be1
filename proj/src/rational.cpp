#include "wmst/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "wmst/errors.hpp"

namespace wmst {
namespace {

using Wide = __int128;

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(Wide value) {
  return value >= std::numeric_limits<std::int64_t>::min() &&
         value <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_integer(std::string_view digits, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
    throw WmstError(ErrorCode::kParseError, "invalid rational literal '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(numerator, denominator);
}

Rational Rational::from_wide(Wide numerator, Wide denominator) {
  if (denominator == 0) throw std::domain_error("rational division by zero");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  Wide g = wide_gcd(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  if (!fits(numerator) || !fits(denominator)) {
    throw std::overflow_error("rational arithmetic exceeds 64-bit range");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(numerator);
  r.den_ = static_cast<std::int64_t>(denominator);
  return r;
}

Rational Rational::parse(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) throw WmstError(ErrorCode::kParseError, "empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t p = parse_integer(text.substr(0, slash), whole);
    std::int64_t q = parse_integer(text.substr(slash + 1), whole);
    if (q == 0) throw WmstError(ErrorCode::kParseError, "zero denominator in '" + std::string(whole) + "'");
    return Rational(p, q);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    bool negative = !text.empty() && text.front() == '-';
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (negative || (!int_part.empty() && int_part.front() == '+')) int_part.remove_prefix(1);
    if (frac_part.empty() || frac_part.size() > 18) {
      throw WmstError(ErrorCode::kParseError, "invalid decimal literal '" + std::string(whole) + "'");
    }
    std::int64_t ip = int_part.empty() ? 0 : parse_integer(int_part, whole);
    std::int64_t fp = parse_integer(frac_part, whole);
    if (ip < 0 || fp < 0) {
      throw WmstError(ErrorCode::kParseError, "invalid decimal literal '" + std::string(whole) + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    Rational value = Rational(ip) + Rational(fp, scale);
    return negative ? -value : value;
  }

  if (text.front() == '+') text.remove_prefix(1);
  return Rational(parse_integer(text, whole));
}

double Rational::to_double() const noexcept {
  return static_cast<double>(to_long_double());
}

long double Rational::to_long_double() const noexcept {
  return static_cast<long double>(num_) / static_cast<long double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return to_fraction_string();
}

std::string Rational::to_fraction_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    *this = from_wide(Wide(num_) + rhs.num_, den_);
  } else {
    *this = from_wide(Wide(num_) * rhs.den_ + Wide(rhs.num_) * den_, Wide(den_) * rhs.den_);
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    *this = from_wide(Wide(num_) - rhs.num_, den_);
  } else {
    *this = from_wide(Wide(num_) * rhs.den_ - Wide(rhs.num_) * den_, Wide(den_) * rhs.den_);
  }
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  *this = from_wide(Wide(num_) * rhs.num_, Wide(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
  *this = from_wide(Wide(num_) * rhs.den_, Wide(den_) * rhs.num_);
  return *this;
}

Rational Rational::operator-() const {
  return from_wide(-Wide(num_), den_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept {
  if (lhs.den_ == rhs.den_) return lhs.num_ <=> rhs.num_;
  Wide a = Wide(lhs.num_) * rhs.den_;
  Wide b = Wide(rhs.num_) * lhs.den_;
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational abs(const Rational& value) {
  return value.sign() < 0 ? -value : value;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace wmst
