#ifndef STIRSUM_POWERSUM_HPP
#define STIRSUM_POWERSUM_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "stirsum/exact_int.hpp"
#include "stirsum/polynomial.hpp"
#include "stirsum/report.hpp"

namespace stirsum {

// Ways of computing S_p(n) = 1^p + 2^p + ... + n^p.
enum class PowerSumMethod {
  direct,              // literal summation; the ground truth
  binomial_recursion,  // 1 + sum_{t<=p} C(p+1,t) S_t(n) = (n+1)^{p+1}
  stirling_recursion,  // p! + sum_{t<=p} [p+1 t+1] S_t(n) = p! C(n+p+1, p+1)
};

std::string_view to_string(PowerSumMethod method);

struct PowerSumRequest {
  std::int64_t p = 0;
  std::int64_t n = 0;
  PowerSumMethod method = PowerSumMethod::direct;
};

// All three throw std::domain_error for negative p or n. S_p(0) == 0.
ExactInt powersum_direct(std::int64_t p, std::int64_t n);
ExactInt powersum_binomial(std::int64_t p, std::int64_t n);
ExactInt powersum_stirling(std::int64_t p, std::int64_t n);

ExactInt powersum(const PowerSumRequest& request);

// S_0(n), ..., S_{p_max}(n) by literal summation in a single pass over k.
std::vector<ExactInt> powersum_direct_table(std::int64_t p_max, std::int64_t n);

// The polynomial Q of degree p+1 with Q(n) = S_p(n) for all n >= 0,
// derived symbolically from the Stirling recursion with C(n+p+1, p+1)
// expanded as (n+1)(n+2)...(n+p+1)/(p+1)!.
RatPolynomial faulhaber_polynomial(std::int64_t p);

// Residual checks with every S_t taken from direct summation.
// One case each, params {p, n}.
VerificationReport check_eq1(std::int64_t p, std::int64_t n);
VerificationReport check_eq2(std::int64_t p, std::int64_t n);

// direct == binomial recursion == Stirling recursion; two cases, params {p, n}.
VerificationReport check_powersum_agreement(std::int64_t p, std::int64_t n);

}  // namespace stirsum

#endif  // STIRSUM_POWERSUM_HPP
