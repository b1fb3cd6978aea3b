#include "stirsum/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stirsum {

ExactInt factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("factorial of negative number " + std::to_string(n));
  ExactInt acc(1);
  for (std::int64_t i = 2; i <= n; ++i) acc *= ExactInt(i);
  return acc;
}

ExactInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::domain_error("binomial with negative n " + std::to_string(n));
  if (k < 0 || k > n) return ExactInt(0);
  k = std::min(k, n - k);
  // After step i the accumulator holds C(n-k+i, i), so every division is exact.
  ExactInt acc(1);
  for (std::int64_t i = 1; i <= k; ++i) {
    acc *= ExactInt(n - k + i);
    acc = divide_exact(acc, ExactInt(i));
  }
  return acc;
}

}  // namespace stirsum
