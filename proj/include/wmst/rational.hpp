#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace wmst {

/// Exact rational number backed by 64-bit integers.
///
/// Values are always kept in lowest terms with a positive denominator, so
/// structural equality is numeric equality. Intermediate products are formed
/// in 128 bits and reduced before narrowing; a result whose reduced form does
/// not fit in 64 bits raises std::overflow_error rather than wrapping.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT: implicit by design of the numeric type
  Rational(std::int64_t numerator, std::int64_t denominator);

  /// Accepts "a", "a/b" and plain decimal literals such as "0.25" or "-1.5";
  /// decimals are converted exactly using a power-of-ten denominator.
  static Rational parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  bool is_positive() const noexcept { return num_ > 0; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  double to_double() const noexcept;
  long double to_long_double() const noexcept;

  /// "3" for integers, "3/2" otherwise.
  std::string to_string() const;
  /// Always "num/den", e.g. "3/1". Used by the instance file format.
  std::string to_fraction_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept;

 private:
  static Rational from_wide(__int128 numerator, __int128 denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational abs(const Rational& value);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace wmst
