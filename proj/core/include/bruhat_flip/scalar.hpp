#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

namespace bflip {

/// Exact rational with 64-bit numerator and denominator. Arithmetic is carried
/// out in 128 bits and throws std::overflow_error when a result does not fit.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(implicit)
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  int sign() const { return (num_ > 0) - (num_ < 0); }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string to_string() const;
  /// Accepts "n" or "n/d".
  static Rational parse(const std::string& text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Element a + b*sqrt(5) of Q(sqrt 5). Crystallographic groups only ever use
/// the rational part.
class Scalar {
 public:
  constexpr Scalar() = default;
  constexpr Scalar(std::int64_t a) : a_(a) {}  // NOLINT(implicit)
  Scalar(Rational a) : a_(a) {}                // NOLINT(implicit)
  Scalar(Rational a, Rational b) : a_(a), b_(b) {}

  /// The golden ratio (1 + sqrt 5) / 2.
  static Scalar golden();

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }

  int sign() const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  Scalar operator-() const { return {-a_, -b_}; }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar&, const Scalar&) = default;
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

  std::size_t hash() const;
  std::string to_string() const;

 private:
  Rational a_;
  Rational b_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace bflip

template <>
struct std::hash<bflip::Scalar> {
  std::size_t operator()(const bflip::Scalar& s) const noexcept { return s.hash(); }
};
