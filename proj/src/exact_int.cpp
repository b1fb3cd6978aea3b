#include "stirsum/exact_int.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace stirsum {

ExactInt ExactInt::parse(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return ExactInt(mpz_class(std::string(text), 10));
}

bool ExactInt::fits_int64() const noexcept {
  static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 platform expected");
  return value_.fits_slong_p();
}

std::int64_t ExactInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("ExactInt does not fit in int64: " + to_string());
  return value_.get_si();
}

std::string ExactInt::to_string() const { return value_.get_str(10); }

ExactInt ExactInt::abs() const {
  mpz_class r;
  mpz_abs(r.get_mpz_t(), value_.get_mpz_t());
  return ExactInt(std::move(r));
}

ExactInt ExactInt::operator-() const {
  mpz_class r;
  mpz_neg(r.get_mpz_t(), value_.get_mpz_t());
  return ExactInt(std::move(r));
}

ExactInt& ExactInt::operator+=(const ExactInt& rhs) {
  mpz_add(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

ExactInt& ExactInt::operator-=(const ExactInt& rhs) {
  mpz_sub(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

ExactInt& ExactInt::operator*=(const ExactInt& rhs) {
  mpz_mul(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactInt& v) { return os << v.to_string(); }

DivMod divmod(const ExactInt& a, const ExactInt& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  mpz_class q;
  mpz_class r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return DivMod{ExactInt(std::move(q)), ExactInt(std::move(r))};
}

ExactInt divide_exact(const ExactInt& a, const ExactInt& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!mpz_divisible_p(a.value_.get_mpz_t(), b.value_.get_mpz_t())) {
    throw std::domain_error("inexact division: " + a.to_string() + " / " + b.to_string());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return ExactInt(std::move(q));
}

ExactInt gcd(const ExactInt& a, const ExactInt& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return ExactInt(std::move(g));
}

ExactInt pow(const ExactInt& base, unsigned long exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.value_.get_mpz_t(), exponent);
  return ExactInt(std::move(r));
}

}  // namespace stirsum
