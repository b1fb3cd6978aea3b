#ifndef STIRSUM_CATALAN_HPP
#define STIRSUM_CATALAN_HPP

#include <cstdint>

#include "stirsum/exact_int.hpp"
#include "stirsum/report.hpp"

namespace stirsum {

struct WeightedRowSum {
  std::int64_t p = 0;
  std::int64_t r = 1;
  ExactInt value;
};

struct CatalanValue {
  std::int64_t p = 0;
  ExactInt value;
};

// sum_{t=0}^{p} r^t [p+1 t+1], term by term from the Stirling row.
// Requires p >= 0, r >= 1 (std::domain_error otherwise).
ExactInt weighted_row_sum(std::int64_t p, std::int64_t r);

// weighted_row_sum(p, r) == (p+r)!/r!, right side from factorials.
// One case, params {p, r}.
VerificationReport check_identity3(std::int64_t p, std::int64_t r);

// For r >= 2, two cases with params {p, r}:
//   weighted_row_sum(p, r) == p! (C(r+p+1, p+1) - 1) - sum_{j<r} weighted_row_sum(p, j)
//   p! (C(r+p+1, p+1) - C(r+p, p+1)) == (p+r)!/r!
VerificationReport check_inductive_step(std::int64_t p, std::int64_t r);

// C(2p, p)/(p+1), p >= 0.
ExactInt catalan_closed(std::int64_t p);

// Numerator sum_{t=1}^{p+1} p^{t-1} [p+1 t] and denominator
// sum_{t=1}^{p+1} [p+1 t], both straight from row p+1.
struct CatalanRatio {
  ExactInt numerator;
  ExactInt denominator;
};
CatalanRatio catalan_stirling_ratio(std::int64_t p);

// numerator / denominator of the ratio above, p >= 1. The quotient must
// be exact; if it is not, throws std::logic_error naming p and both sides.
ExactInt catalan_stirling(std::int64_t p);

// Two cases with params {p}: denominator == (p+1)!, and
// catalan_stirling(p) == catalan_closed(p).
VerificationReport check_catalan(std::int64_t p);

}  // namespace stirsum

#endif  // STIRSUM_CATALAN_HPP
