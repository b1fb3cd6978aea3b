#include "stirsum/exact_rational.hpp"

#include <ostream>
#include <stdexcept>

namespace stirsum {

ExactRational::ExactRational(ExactInt numerator) : num_(std::move(numerator)), den_(1) {}

ExactRational::ExactRational(ExactInt numerator, ExactInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
  normalize();
}

void ExactRational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = ExactInt(1);
    return;
  }
  ExactInt g = gcd(num_, den_);
  if (g != ExactInt(1)) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
}

ExactRational ExactRational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRational(ExactInt::parse(text));
  ExactInt den = ExactInt::parse(text.substr(slash + 1));
  if (den.is_zero()) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return ExactRational(ExactInt::parse(text.substr(0, slash)), std::move(den));
}

std::string ExactRational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

ExactRational ExactRational::operator-() const { return ExactRational(-num_, den_, Reduced{}); }

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) { return *this += -rhs; }

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.num_.is_zero()) throw std::domain_error("division by zero rational");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& v) { return os << v.to_string(); }

}  // namespace stirsum
