#include "stirsum/harmonic.hpp"

#include <chrono>
#include <mutex>
#include <stdexcept>
#include <string>

#include "stirsum/combinatorics.hpp"
#include "stirsum/powersum.hpp"
#include "stirsum/stirling.hpp"

namespace stirsum {
namespace {

void require_identity_domain(std::int64_t p, std::int64_t n) {
  if (p < 0 || n < 1) {
    throw std::domain_error("harmonic identities need p >= 0 and n >= 1, got p=" + std::to_string(p) +
                            " n=" + std::to_string(n));
  }
}

std::string pn_domain(std::int64_t p, std::int64_t n) {
  return "p=" + std::to_string(p) + ", n=" + std::to_string(n);
}

// sum_{t=0}^{p} [p+1 t+1] S_t(n)
ExactInt stirling_weighted_powersum(std::int64_t p, std::int64_t n) {
  const auto sums = powersum_direct_table(p, n);
  auto row = StirlingTriangle::shared().row(p + 1);
  ExactInt acc(0);
  for (std::int64_t t = 0; t <= p; ++t) acc += row[static_cast<std::size_t>(t + 1)] * sums[static_cast<std::size_t>(t)];
  return acc;
}

template <typename Check>
VerificationReport timed(std::string identity, std::string domain, Check&& check) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.identity = std::move(identity);
  report.domain = std::move(domain);
  check(report);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace

const ExactRational& HarmonicTable::at(std::int64_t k) {
  if (k < 1) throw std::domain_error("harmonic number needs k >= 1, got " + std::to_string(k));
  const auto want = static_cast<std::size_t>(k);
  {
    std::shared_lock lock(mutex_);
    if (want <= values_.size()) return values_[want - 1];
  }
  std::unique_lock lock(mutex_);
  while (values_.size() < want) {
    const ExactInt next(static_cast<std::int64_t>(values_.size() + 1));
    ExactRational step(ExactInt(1), next);
    values_.push_back(values_.empty() ? step : values_.back() + step);
  }
  return values_[want - 1];
}

HarmonicTable& HarmonicTable::shared() {
  static HarmonicTable instance;
  return instance;
}

ExactRational harmonic(std::int64_t k) { return HarmonicTable::shared().at(k); }

std::vector<ExactRational> SequencePair::partial_u() const {
  std::vector<ExactRational> out{ExactRational(0)};
  for (const auto& x : u) out.push_back(out.back() + x);
  return out;
}

std::vector<ExactRational> SequencePair::partial_v() const {
  std::vector<ExactRational> out{ExactRational(0)};
  for (const auto& x : v) out.push_back(out.back() + x);
  return out;
}

VerificationReport abel_summation_check(const SequencePair& pair) {
  if (pair.u.size() != pair.v.size()) {
    throw std::domain_error("summation by parts needs equal lengths, got " + std::to_string(pair.u.size()) +
                            " and " + std::to_string(pair.v.size()));
  }
  if (pair.u.empty()) throw std::domain_error("summation by parts needs n >= 1");
  const auto n = pair.u.size();
  return timed("abel", "n=" + std::to_string(n), [&](VerificationReport& report) {
    const auto big_u = pair.partial_u();
    const auto big_v = pair.partial_v();
    ExactRational lhs(0);
    for (std::size_t k = 1; k <= n; ++k) {
      lhs += pair.u[k - 1] * big_v[k];
      lhs += pair.v[k - 1] * big_u[k - 1];
    }
    report.record({{"n", static_cast<std::int64_t>(n)}}, lhs, big_u[n] * big_v[n]);
  });
}

SequencePair binomial_harmonic_pair(std::int64_t p, std::int64_t n) {
  require_identity_domain(p, n);
  SequencePair pair;
  for (std::int64_t k = 1; k <= n; ++k) {
    pair.u.emplace_back(binomial(k + p, p));
    pair.v.emplace_back(ExactInt(1), ExactInt(k));
  }
  return pair;
}

VerificationReport check_abel_instantiation(std::int64_t p, std::int64_t n) {
  const SequencePair pair = binomial_harmonic_pair(p, n);
  return timed("abel", pn_domain(p, n), [&](VerificationReport& report) {
    VerificationReport abel = abel_summation_check(pair);
    if (abel.first_failure) abel.first_failure->params = {{"p", p}, {"n", n}};
    report.absorb(abel);
    const auto big_u = pair.partial_u();
    for (std::int64_t k = 0; k <= n; ++k) {
      report.record({{"p", p}, {"n", n}, {"k", k}}, big_u[static_cast<std::size_t>(k)],
                    ExactRational(binomial(k + p + 1, p + 1) - ExactInt(1)));
    }
  });
}

ExactRational identity1_lhs(std::int64_t p, std::int64_t n) {
  require_identity_domain(p, n);
  auto& h = HarmonicTable::shared();
  ExactRational acc(0);
  for (std::int64_t k = 1; k <= n; ++k) acc += ExactRational(binomial(k + p, p)) * h.at(k);
  return acc;
}

ExactRational identity1_rhs(std::int64_t p, std::int64_t n) {
  require_identity_domain(p, n);
  const ExactRational c(binomial(n + p + 1, p + 1));
  return c * harmonic(n) - ExactRational(stirling_weighted_powersum(p, n), factorial(p + 1));
}

ExactRational identity2_rhs(std::int64_t p, std::int64_t n) {
  require_identity_domain(p, n);
  const ExactInt c = binomial(n + p + 1, p + 1);
  return ExactRational(c) * harmonic(n) - ExactRational(c - ExactInt(1), ExactInt(p + 1));
}

ExactRational reciprocal_binomial_sum(std::int64_t p, std::int64_t n) {
  require_identity_domain(p, n);
  ExactRational acc(0);
  for (std::int64_t j = 1; j <= n; ++j) acc += ExactRational(binomial(j + p, p + 1), ExactInt(j));
  return acc;
}

ExactRational scaled_stirling_powersum(std::int64_t p, std::int64_t n) {
  require_identity_domain(p, n);
  return ExactRational(stirling_weighted_powersum(p, n), factorial(p + 1));
}

VerificationReport check_identity1(std::int64_t p, std::int64_t n) {
  return timed("identity1", pn_domain(p, n), [&](VerificationReport& report) {
    report.record({{"p", p}, {"n", n}}, identity1_lhs(p, n), identity1_rhs(p, n));
  });
}

VerificationReport check_identity2(std::int64_t p, std::int64_t n) {
  return timed("identity2", pn_domain(p, n), [&](VerificationReport& report) {
    report.record({{"p", p}, {"n", n}}, identity1_lhs(p, n), identity2_rhs(p, n));
  });
}

VerificationReport check_reciprocal_binomial_sum(std::int64_t p, std::int64_t n) {
  return timed("id12", pn_domain(p, n), [&](VerificationReport& report) {
    report.record({{"p", p}, {"n", n}}, reciprocal_binomial_sum(p, n), scaled_stirling_powersum(p, n));
  });
}

VerificationReport derive_eq2_from_identities(std::int64_t p, std::int64_t n) {
  require_identity_domain(p, n);
  return timed("derive_eq2", pn_domain(p, n), [&](VerificationReport& report) {
    const CaseParams params{{"p", p}, {"n", n}};
    const ExactRational rhs2 = identity2_rhs(p, n);
    report.record(params, identity1_rhs(p, n), rhs2);

    const ExactInt c = binomial(n + p + 1, p + 1);
    const ExactInt weighted = stirling_weighted_powersum(p, n);
    const ExactRational cleared = ExactRational(factorial(p + 1)) * (ExactRational(c) * harmonic(n) - rhs2);
    report.record(params, cleared, ExactRational(weighted));

    const ExactInt p_factorial = factorial(p);
    report.record(params, p_factorial + weighted, p_factorial * c);
  });
}

}  // namespace stirsum
