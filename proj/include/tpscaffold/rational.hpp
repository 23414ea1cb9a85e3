#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace tpscaffold {

/// Exact rational number in canonical form (gcd(|num|, den) = 1, den > 0).
///
/// Thin value wrapper over GMP's mpq_class. Every public constructor and
/// operator leaves the value canonical; division by zero throws
/// std::domain_error instead of aborting inside GMP.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(const mpz_class& numerator, const mpz_class& denominator);

  explicit Rational(mpq_class value);

  /// Parses "p" or "p/q" (optional leading sign on p, q > 0). Throws
  /// std::invalid_argument on malformed text and std::domain_error on q = 0.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& get() const noexcept { return value_; }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_positive() const noexcept { return sign() > 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational inverse() const;

  /// Canonical text: "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

 private:
  mpq_class value_;
};

/// Smallest integer >= x.
Rational ceil(const Rational& x);

}  // namespace tpscaffold
