#ifndef STIRSUM_HARMONIC_HPP
#define STIRSUM_HARMONIC_HPP

#include <cstdint>
#include <deque>
#include <shared_mutex>
#include <vector>

#include "stirsum/exact_rational.hpp"
#include "stirsum/report.hpp"

namespace stirsum {

// Growable prefix H_1, H_2, ... with H_k = H_{k-1} + 1/k.
// Safe to call concurrently.
class HarmonicTable {
 public:
  HarmonicTable() = default;
  HarmonicTable(const HarmonicTable&) = delete;
  HarmonicTable& operator=(const HarmonicTable&) = delete;

  // Throws std::domain_error for k < 1.
  const ExactRational& at(std::int64_t k);

  static HarmonicTable& shared();

 private:
  std::shared_mutex mutex_;
  std::deque<ExactRational> values_;  // values_[i] == H_{i+1}
};

struct HarmonicValue {
  std::int64_t k = 1;
  ExactRational value;
};

// H_k in lowest terms; k >= 1.
ExactRational harmonic(std::int64_t k);

// Two sequences u_1..u_n and v_1..v_n with partial sums U_k, V_k and
// U_0 = V_0 = 0.
struct SequencePair {
  std::vector<ExactRational> u;
  std::vector<ExactRational> v;

  // U_0..U_n and V_0..V_n.
  std::vector<ExactRational> partial_u() const;
  std::vector<ExactRational> partial_v() const;
};

// Summation by parts:
//
//   sum_{k=1}^{n} u_k V_k + sum_{k=1}^{n} v_k U_{k-1} == U_n V_n.
//
// One case with params {n}. Throws std::domain_error if the sequences
// differ in length or are empty.
VerificationReport abel_summation_check(const SequencePair& pair);

// u_k = C(k+p, p), v_k = 1/k for k = 1..n.
SequencePair binomial_harmonic_pair(std::int64_t p, std::int64_t n);

// Abel check on binomial_harmonic_pair(p, n), plus the closed partial sums
// U_k == C(k+p+1, p+1) - 1 for k = 0..n. Params {p, n} and {p, n, k}.
VerificationReport check_abel_instantiation(std::int64_t p, std::int64_t n);

// sum_{k=1}^{n} C(k+p, p) H_k, the common left side of both identities.
ExactRational identity1_lhs(std::int64_t p, std::int64_t n);

// C(n+p+1, p+1) H_n - (1/(p+1)!) sum_{t=0}^{p} [p+1 t+1] S_t(n),
// with S_t from direct summation.
ExactRational identity1_rhs(std::int64_t p, std::int64_t n);

// C(n+p+1, p+1) H_n - (C(n+p+1, p+1) - 1)/(p+1).
ExactRational identity2_rhs(std::int64_t p, std::int64_t n);

// sum_{j=1}^{n} C(j+p, p+1)/j.
ExactRational reciprocal_binomial_sum(std::int64_t p, std::int64_t n);

// (1/(p+1)!) sum_{t=0}^{p} [p+1 t+1] S_t(n), S_t by direct summation.
ExactRational scaled_stirling_powersum(std::int64_t p, std::int64_t n);

// One case each, params {p, n}.
VerificationReport check_identity1(std::int64_t p, std::int64_t n);
VerificationReport check_identity2(std::int64_t p, std::int64_t n);
VerificationReport check_reciprocal_binomial_sum(std::int64_t p, std::int64_t n);

// Equates the two right sides and clears denominators. Three cases, all
// with params {p, n}:
//   identity1_rhs == identity2_rhs
//   (p+1)! (C(n+p+1,p+1) H_n - identity2_rhs) == sum_t [p+1 t+1] S_t(n)
//   p! + sum_t [p+1 t+1] S_t(n) == p! C(n+p+1, p+1)
VerificationReport derive_eq2_from_identities(std::int64_t p, std::int64_t n);

}  // namespace stirsum

#endif  // STIRSUM_HARMONIC_HPP
