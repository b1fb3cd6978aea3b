#include "stirsum/powersum.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

#include "stirsum/combinatorics.hpp"
#include "stirsum/stirling.hpp"

namespace stirsum {
namespace {

void require_domain(std::int64_t p, std::int64_t n) {
  if (p < 0 || n < 0) {
    throw std::domain_error("power sum needs p >= 0 and n >= 0, got p=" + std::to_string(p) +
                            " n=" + std::to_string(n));
  }
}

// S_0(n) .. S_p(n) via (q+1) S_q = (n+1)^{q+1} - 1 - sum_{t<q} C(q+1,t) S_t.
std::vector<ExactInt> binomial_recursion_table(std::int64_t p, std::int64_t n) {
  std::vector<ExactInt> sums;
  sums.reserve(static_cast<std::size_t>(p + 1));
  const ExactInt n1(n + 1);
  ExactInt n1_power = n1;               // (n+1)^{q+1}
  std::vector<ExactInt> pascal{1, 1};  // C(q+1, 0..q+1)
  for (std::int64_t q = 0; q <= p; ++q) {
    if (q > 0) {
      pascal.push_back(ExactInt(1));
      for (auto t = pascal.size() - 2; t > 0; --t) pascal[t] += pascal[t - 1];
    }
    ExactInt acc = n1_power - ExactInt(1);
    for (std::int64_t t = 0; t < q; ++t) acc -= pascal[static_cast<std::size_t>(t)] * sums[static_cast<std::size_t>(t)];
    sums.push_back(divide_exact(acc, ExactInt(q + 1)));
    n1_power *= n1;
  }
  return sums;
}

// S_0(n) .. S_p(n) via S_q = q! C(n+q+1, q+1) - q! - sum_{t<q} [q+1 t+1] S_t,
// using [q+1 q+1] = 1.
std::vector<ExactInt> stirling_recursion_table(std::int64_t p, std::int64_t n) {
  std::vector<ExactInt> sums;
  sums.reserve(static_cast<std::size_t>(p + 1));
  auto& triangle = StirlingTriangle::shared();
  ExactInt q_factorial(1);
  for (std::int64_t q = 0; q <= p; ++q) {
    if (q > 0) q_factorial *= ExactInt(q);
    auto row = triangle.row(q + 1);
    ExactInt acc = q_factorial * binomial(n + q + 1, q + 1) - q_factorial;
    for (std::int64_t t = 0; t < q; ++t) acc -= row[static_cast<std::size_t>(t + 1)] * sums[static_cast<std::size_t>(t)];
    sums.push_back(std::move(acc));
  }
  return sums;
}

}  // namespace

std::string_view to_string(PowerSumMethod method) {
  switch (method) {
    case PowerSumMethod::direct: return "direct";
    case PowerSumMethod::binomial_recursion: return "binomial";
    case PowerSumMethod::stirling_recursion: return "stirling";
  }
  return "unknown";
}

ExactInt powersum_direct(std::int64_t p, std::int64_t n) {
  require_domain(p, n);
  ExactInt sum(0);
  for (std::int64_t k = 1; k <= n; ++k) sum += pow(ExactInt(k), static_cast<unsigned long>(p));
  return sum;
}

ExactInt powersum_binomial(std::int64_t p, std::int64_t n) {
  require_domain(p, n);
  if (n == 0) return ExactInt(0);
  return binomial_recursion_table(p, n).back();
}

ExactInt powersum_stirling(std::int64_t p, std::int64_t n) {
  require_domain(p, n);
  if (n == 0) return ExactInt(0);
  return stirling_recursion_table(p, n).back();
}

ExactInt powersum(const PowerSumRequest& request) {
  switch (request.method) {
    case PowerSumMethod::direct: return powersum_direct(request.p, request.n);
    case PowerSumMethod::binomial_recursion: return powersum_binomial(request.p, request.n);
    case PowerSumMethod::stirling_recursion: return powersum_stirling(request.p, request.n);
  }
  throw std::invalid_argument("unknown power sum method");
}

std::vector<ExactInt> powersum_direct_table(std::int64_t p_max, std::int64_t n) {
  require_domain(p_max, n);
  std::vector<ExactInt> sums(static_cast<std::size_t>(p_max + 1), ExactInt(0));
  for (std::int64_t k = 1; k <= n; ++k) {
    const ExactInt base(k);
    ExactInt power(1);
    for (auto& s : sums) {
      s += power;
      power *= base;
    }
  }
  return sums;
}

RatPolynomial faulhaber_polynomial(std::int64_t p) {
  if (p < 0) throw std::domain_error("Faulhaber polynomial for negative p " + std::to_string(p));
  std::vector<RatPolynomial> polys;
  polys.reserve(static_cast<std::size_t>(p + 1));
  auto& triangle = StirlingTriangle::shared();
  IntPolynomial rising = IntPolynomial::linear(ExactInt(1));  // (n+1)...(n+q+1)
  ExactInt q_factorial(1);
  for (std::int64_t q = 0; q <= p; ++q) {
    if (q > 0) {
      q_factorial *= ExactInt(q);
      rising = rising * IntPolynomial::linear(ExactInt(q + 1));
    }
    // q! C(n+q+1, q+1) = rising / (q+1)
    RatPolynomial acc = to_rational(rising) * ExactRational(ExactInt(1), ExactInt(q + 1));
    acc -= RatPolynomial::constant(ExactRational(q_factorial));
    auto row = triangle.row(q + 1);
    for (std::int64_t t = 0; t < q; ++t) {
      acc -= polys[static_cast<std::size_t>(t)] * ExactRational(row[static_cast<std::size_t>(t + 1)]);
    }
    polys.push_back(std::move(acc));
  }
  return polys.back();
}

VerificationReport check_eq1(std::int64_t p, std::int64_t n) {
  require_domain(p, n);
  const auto start = std::chrono::steady_clock::now();
  const auto sums = powersum_direct_table(p, n);
  ExactInt lhs(1);
  for (std::int64_t t = 0; t <= p; ++t) lhs += binomial(p + 1, t) * sums[static_cast<std::size_t>(t)];
  VerificationReport report;
  report.identity = "eq1";
  report.domain = "p=" + std::to_string(p) + ", n=" + std::to_string(n);
  report.record({{"p", p}, {"n", n}}, lhs, pow(ExactInt(n + 1), static_cast<unsigned long>(p + 1)));
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

VerificationReport check_eq2(std::int64_t p, std::int64_t n) {
  require_domain(p, n);
  const auto start = std::chrono::steady_clock::now();
  const auto sums = powersum_direct_table(p, n);
  auto row = StirlingTriangle::shared().row(p + 1);
  const ExactInt p_factorial = factorial(p);
  ExactInt lhs = p_factorial;
  for (std::int64_t t = 0; t <= p; ++t) lhs += row[static_cast<std::size_t>(t + 1)] * sums[static_cast<std::size_t>(t)];
  VerificationReport report;
  report.identity = "eq2";
  report.domain = "p=" + std::to_string(p) + ", n=" + std::to_string(n);
  report.record({{"p", p}, {"n", n}}, lhs, p_factorial * binomial(n + p + 1, p + 1));
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

VerificationReport check_powersum_agreement(std::int64_t p, std::int64_t n) {
  require_domain(p, n);
  const auto start = std::chrono::steady_clock::now();
  const ExactInt direct = powersum_direct(p, n);
  VerificationReport report;
  report.identity = "powersum_agreement";
  report.domain = "p=" + std::to_string(p) + ", n=" + std::to_string(n);
  report.record({{"p", p}, {"n", n}}, powersum_binomial(p, n), direct);
  report.record({{"p", p}, {"n", n}}, powersum_stirling(p, n), direct);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace stirsum
