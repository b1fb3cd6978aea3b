#ifndef STIRSUM_COMBINATORICS_HPP
#define STIRSUM_COMBINATORICS_HPP

#include <cstdint>

#include "stirsum/exact_int.hpp"

namespace stirsum {

// n!. Throws std::domain_error for negative n.
ExactInt factorial(std::int64_t n);

// C(n, k), zero when k < 0 or k > n. Throws std::domain_error for negative n.
ExactInt binomial(std::int64_t n, std::int64_t k);

}  // namespace stirsum

#endif  // STIRSUM_COMBINATORICS_HPP
