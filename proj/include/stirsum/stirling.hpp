#ifndef STIRSUM_STIRLING_HPP
#define STIRSUM_STIRLING_HPP

#include <cstdint>
#include <deque>
#include <shared_mutex>
#include <span>
#include <vector>

#include "stirsum/exact_int.hpp"
#include "stirsum/report.hpp"

namespace stirsum {

// Unsigned Stirling numbers of the first kind [n k] (cycle numbers),
// built row by row from
//
//   [n+1 k] = n [n k] + [n k-1]
//
// and cached. Rows grow on demand up to the largest n requested. Rows are
// never moved once built, so the spans handed out stay valid for the
// lifetime of the triangle. All members are safe to call concurrently.
class StirlingTriangle {
 public:
  StirlingTriangle();
  StirlingTriangle(const StirlingTriangle&) = delete;
  StirlingTriangle& operator=(const StirlingTriangle&) = delete;

  // [n 0], ..., [n n]. Throws std::domain_error for negative n.
  std::span<const ExactInt> row(std::int64_t n);

  // [n k]; zero when k < 0 or k > n.
  ExactInt at(std::int64_t n, std::int64_t k);

  // Number of rows currently cached.
  std::size_t cached_rows() const;

  // Process-wide instance used by the free functions below.
  static StirlingTriangle& shared();

 private:
  mutable std::shared_mutex mutex_;
  std::deque<std::vector<ExactInt>> rows_;
};

ExactInt stirling(std::int64_t n, std::int64_t k);
std::vector<ExactInt> stirling_row(std::int64_t n);

// Largest n accepted by stirling_by_permutation_count (9! = 362880 permutations).
inline constexpr int kPermutationOracleMax = 9;

// Counts permutations of {0..n-1} with exactly k cycles by walking all n!
// permutations and decomposing each into cycles. Independent of the
// recurrence above. Throws std::invalid_argument for n > 9 and
// std::domain_error for negative n.
ExactInt stirling_by_permutation_count(int n, int k);

// For t = 0..p+1 checks
//
//   sum_{k=t}^{p+1} (-1)^{p+1-k} p^{k-t} C(k,t) [p+1 k] == [p+1 t],
//
// the coefficient identity obtained by expanding (x+p)^k inside the
// falling factorial [x+p]_{p+1} and matching it with the rising factorial
// [x]^{p+1}. One case per t, params {p, t}.
VerificationReport check_lemma1(std::int64_t p);

// Left-hand side of the above for a single t.
ExactInt lemma1_lhs(std::int64_t p, std::int64_t t);

}  // namespace stirsum

#endif  // STIRSUM_STIRLING_HPP
