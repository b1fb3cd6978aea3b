#ifndef STIRSUM_EXACT_INT_HPP
#define STIRSUM_EXACT_INT_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace stirsum {

struct DivMod;

// Arbitrary-precision signed integer.
//
// Values are immutable from the caller's point of view; every operation
// returns a fresh value. Zero is canonical (sign 0). Storage is a GMP
// integer, so there is no overflow and no rounding anywhere.
class ExactInt {
 public:
  ExactInt() = default;

  template <std::signed_integral T>
  ExactInt(T v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral T>
  ExactInt(T v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  // Accepts an optional leading '-' followed by decimal digits; "-0" is zero.
  // Throws std::invalid_argument on anything else.
  static ExactInt parse(std::string_view text);

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool fits_int64() const noexcept;
  std::int64_t to_int64() const;  // throws std::overflow_error if !fits_int64()

  std::string to_string() const;

  ExactInt abs() const;

  ExactInt operator-() const;
  ExactInt& operator+=(const ExactInt& rhs);
  ExactInt& operator-=(const ExactInt& rhs);
  ExactInt& operator*=(const ExactInt& rhs);

  friend ExactInt operator+(ExactInt lhs, const ExactInt& rhs) { return lhs += rhs; }
  friend ExactInt operator-(ExactInt lhs, const ExactInt& rhs) { return lhs -= rhs; }
  friend ExactInt operator*(ExactInt lhs, const ExactInt& rhs) { return lhs *= rhs; }

  friend bool operator==(const ExactInt& a, const ExactInt& b) noexcept { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) noexcept {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactInt& v);

 private:
  explicit ExactInt(mpz_class v) : value_(std::move(v)) {}

  friend DivMod divmod(const ExactInt& a, const ExactInt& b);
  friend ExactInt divide_exact(const ExactInt& a, const ExactInt& b);
  friend ExactInt gcd(const ExactInt& a, const ExactInt& b);
  friend ExactInt pow(const ExactInt& base, unsigned long exponent);

  mpz_class value_;
};

// Truncated division: quotient rounds toward zero, remainder takes the
// sign of the dividend, a == quotient * b + remainder.
struct DivMod {
  ExactInt quotient;
  ExactInt remainder;
};

// Throws std::domain_error when b is zero.
DivMod divmod(const ExactInt& a, const ExactInt& b);

// a / b when b divides a. Throws std::domain_error if b is zero or the
// division leaves a remainder.
ExactInt divide_exact(const ExactInt& a, const ExactInt& b);

// Non-negative gcd; gcd(0, 0) == 0.
ExactInt gcd(const ExactInt& a, const ExactInt& b);

ExactInt pow(const ExactInt& base, unsigned long exponent);

inline std::string to_string(const ExactInt& v) { return v.to_string(); }

}  // namespace stirsum

#endif  // STIRSUM_EXACT_INT_HPP
