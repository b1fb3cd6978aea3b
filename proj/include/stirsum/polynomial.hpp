#ifndef STIRSUM_POLYNOMIAL_HPP
#define STIRSUM_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "stirsum/exact_int.hpp"
#include "stirsum/exact_rational.hpp"

namespace stirsum {

// Dense polynomial with coefficients in ascending degree order.
//
// Trailing zero coefficients are trimmed; the zero polynomial is stored as
// the single coefficient 0, so degree() == coefficients().size() - 1 always.
template <typename Coeff>
class Polynomial {
 public:
  Polynomial() : coeffs_{Coeff(0)} {}
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(Coeff c) { return Polynomial(std::vector<Coeff>{std::move(c)}); }

  // x + c
  static Polynomial linear(Coeff c) { return Polynomial(std::vector<Coeff>{std::move(c), Coeff(1)}); }

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  std::span<const Coeff> coefficients() const noexcept { return coeffs_; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Coeff(0); }

  // Coefficient of x^i; zero beyond the degree.
  Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0); }
  const Coeff& leading() const noexcept { return coeffs_.back(); }

  Coeff evaluate(const Coeff& x) const {
    Coeff acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  // q(x + c), expanded by Horner's scheme over the linear factor (x + c).
  Polynomial shifted(const Coeff& c) const {
    Polynomial acc;
    const Polynomial step = linear(c);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * step;
      acc.coeffs_[0] += *it;
      acc.trim();
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Coeff& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == Coeff(0)) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == Coeff(0)) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(Coeff(0));
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<ExactInt>;
using RatPolynomial = Polynomial<ExactRational>;

// x(x-1)...(x-p+1); the constant 1 for p = 0.
IntPolynomial falling_factorial_poly(unsigned p);

// x(x+1)...(x+p-1); coefficient t is the cycle number [p t].
IntPolynomial rising_factorial_poly(unsigned p);

// q(x + c).
IntPolynomial poly_shift(const IntPolynomial& q, const ExactInt& c);

RatPolynomial to_rational(const IntPolynomial& q);

// Coefficients joined by ", ", ascending.
template <typename Coeff>
std::string to_string(const Polynomial<Coeff>& q) {
  std::string out;
  for (const auto& c : q.coefficients()) {
    if (!out.empty()) out += ", ";
    out += c.to_string();
  }
  return out;
}

}  // namespace stirsum

#endif  // STIRSUM_POLYNOMIAL_HPP
