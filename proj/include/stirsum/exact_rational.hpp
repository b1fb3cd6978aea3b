#ifndef STIRSUM_EXACT_RATIONAL_HPP
#define STIRSUM_EXACT_RATIONAL_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "stirsum/exact_int.hpp"

namespace stirsum {

// Rational number kept in lowest terms with a positive denominator.
// Normalization happens on construction, so == is structural.
class ExactRational {
 public:
  ExactRational() : den_(1) {}
  ExactRational(ExactInt numerator);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  ExactRational(T v) : ExactRational(ExactInt(v)) {}  // NOLINT(google-explicit-constructor)

  // Throws std::domain_error when denominator is zero.
  ExactRational(ExactInt numerator, ExactInt denominator);

  // "num" or "num/den"; the result is normalized, so "2/4" reads as 1/2.
  static ExactRational parse(std::string_view text);

  const ExactInt& numerator() const noexcept { return num_; }
  const ExactInt& denominator() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == ExactInt(1); }
  int sign() const noexcept { return num_.sign(); }

  // "num/den", or just "num" when the denominator is 1.
  std::string to_string() const;

  ExactRational operator-() const;
  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);  // throws std::domain_error on zero

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

  friend std::ostream& operator<<(std::ostream& os, const ExactRational& v);

 private:
  struct Reduced {};
  ExactRational(ExactInt numerator, ExactInt denominator, Reduced)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}

  void normalize();

  ExactInt num_;
  ExactInt den_;
};

inline std::string to_string(const ExactRational& v) { return v.to_string(); }

}  // namespace stirsum

#endif  // STIRSUM_EXACT_RATIONAL_HPP
