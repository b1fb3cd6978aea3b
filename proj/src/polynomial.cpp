#include "stirsum/polynomial.hpp"

namespace stirsum {

IntPolynomial falling_factorial_poly(unsigned p) {
  IntPolynomial acc = IntPolynomial::constant(ExactInt(1));
  for (unsigned j = 0; j < p; ++j) acc = acc * IntPolynomial::linear(-ExactInt(j));
  return acc;
}

IntPolynomial rising_factorial_poly(unsigned p) {
  IntPolynomial acc = IntPolynomial::constant(ExactInt(1));
  for (unsigned j = 0; j < p; ++j) acc = acc * IntPolynomial::linear(ExactInt(j));
  return acc;
}

IntPolynomial poly_shift(const IntPolynomial& q, const ExactInt& c) { return q.shifted(c); }

RatPolynomial to_rational(const IntPolynomial& q) {
  std::vector<ExactRational> coeffs;
  coeffs.reserve(q.coefficients().size());
  for (const auto& c : q.coefficients()) coeffs.emplace_back(c);
  return RatPolynomial(std::move(coeffs));
}

}  // namespace stirsum
