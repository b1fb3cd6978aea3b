#include "stirsum/catalan.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

#include "stirsum/combinatorics.hpp"
#include "stirsum/exact_rational.hpp"
#include "stirsum/stirling.hpp"

namespace stirsum {
namespace {

void require_pr(std::int64_t p, std::int64_t r, std::int64_t r_min) {
  if (p < 0 || r < r_min) {
    throw std::domain_error("need p >= 0 and r >= " + std::to_string(r_min) + ", got p=" + std::to_string(p) +
                            " r=" + std::to_string(r));
  }
}

}  // namespace

ExactInt weighted_row_sum(std::int64_t p, std::int64_t r) {
  require_pr(p, r, 1);
  auto row = StirlingTriangle::shared().row(p + 1);
  const ExactInt base(r);
  ExactInt power(1);
  ExactInt acc(0);
  for (std::int64_t t = 0; t <= p; ++t) {
    acc += power * row[static_cast<std::size_t>(t + 1)];
    power *= base;
  }
  return acc;
}

VerificationReport check_identity3(std::int64_t p, std::int64_t r) {
  require_pr(p, r, 1);
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.identity = "eq3";
  report.domain = "p=" + std::to_string(p) + ", r=" + std::to_string(r);
  report.record({{"p", p}, {"r", r}}, weighted_row_sum(p, r), divide_exact(factorial(p + r), factorial(r)));
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

VerificationReport check_inductive_step(std::int64_t p, std::int64_t r) {
  require_pr(p, r, 2);
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.identity = "inductive_step";
  report.domain = "p=" + std::to_string(p) + ", r=" + std::to_string(r);

  const ExactInt p_factorial = factorial(p);
  ExactInt rhs = p_factorial * (binomial(r + p + 1, p + 1) - ExactInt(1));
  for (std::int64_t j = 1; j < r; ++j) rhs -= weighted_row_sum(p, j);
  report.record({{"p", p}, {"r", r}}, weighted_row_sum(p, r), rhs);

  const ExactInt telescoped = p_factorial * (binomial(r + p + 1, p + 1) - binomial(r + p, p + 1));
  report.record({{"p", p}, {"r", r}}, telescoped, divide_exact(factorial(p + r), factorial(r)));

  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

ExactInt catalan_closed(std::int64_t p) {
  if (p < 0) throw std::domain_error("Catalan number for negative p " + std::to_string(p));
  return divide_exact(binomial(2 * p, p), ExactInt(p + 1));
}

CatalanRatio catalan_stirling_ratio(std::int64_t p) {
  if (p < 1) throw std::domain_error("Stirling form of the Catalan number needs p >= 1, got " + std::to_string(p));
  auto row = StirlingTriangle::shared().row(p + 1);
  const ExactInt base(p);
  ExactInt power(1);
  CatalanRatio ratio{ExactInt(0), ExactInt(0)};
  for (std::int64_t t = 1; t <= p + 1; ++t) {
    const ExactInt& cycles = row[static_cast<std::size_t>(t)];
    ratio.numerator += power * cycles;
    ratio.denominator += cycles;
    power *= base;
  }
  return ratio;
}

ExactInt catalan_stirling(std::int64_t p) {
  const CatalanRatio ratio = catalan_stirling_ratio(p);
  const DivMod qr = divmod(ratio.numerator, ratio.denominator);
  if (!qr.remainder.is_zero()) {
    throw std::logic_error("inexact Catalan quotient at p=" + std::to_string(p) + ": " + ratio.numerator.to_string() +
                           " / " + ratio.denominator.to_string());
  }
  return qr.quotient;
}

VerificationReport check_catalan(std::int64_t p) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.identity = "catalan";
  report.domain = "p=" + std::to_string(p);
  const CatalanRatio ratio = catalan_stirling_ratio(p);
  report.record({{"p", p}}, ratio.denominator, factorial(p + 1));
  const DivMod qr = divmod(ratio.numerator, ratio.denominator);
  if (qr.remainder.is_zero()) {
    report.record({{"p", p}}, qr.quotient, catalan_closed(p));
  } else {
    report.record({{"p", p}}, ExactRational(ratio.numerator, ratio.denominator), ExactRational(catalan_closed(p)));
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace stirsum
