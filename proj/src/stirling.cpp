#include "stirsum/stirling.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "stirsum/combinatorics.hpp"

namespace stirsum {

StirlingTriangle::StirlingTriangle() { rows_.push_back({ExactInt(1)}); }

std::span<const ExactInt> StirlingTriangle::row(std::int64_t n) {
  if (n < 0) throw std::domain_error("Stirling row with negative n " + std::to_string(n));
  const auto want = static_cast<std::size_t>(n);
  {
    std::shared_lock lock(mutex_);
    if (want < rows_.size()) return rows_[want];
  }
  std::unique_lock lock(mutex_);
  while (rows_.size() <= want) {
    const std::vector<ExactInt>& prev = rows_.back();
    const ExactInt m(static_cast<std::int64_t>(prev.size() - 1));  // prev is row m
    std::vector<ExactInt> next(prev.size() + 1);
    for (std::size_t k = 1; k < next.size(); ++k) {
      ExactInt v = k < prev.size() ? m * prev[k] : ExactInt(0);
      v += prev[k - 1];
      next[k] = std::move(v);
    }
    rows_.push_back(std::move(next));
  }
  return rows_[want];
}

ExactInt StirlingTriangle::at(std::int64_t n, std::int64_t k) {
  auto r = row(n);
  if (k < 0 || k > n) return ExactInt(0);
  return r[static_cast<std::size_t>(k)];
}

std::size_t StirlingTriangle::cached_rows() const {
  std::shared_lock lock(mutex_);
  return rows_.size();
}

StirlingTriangle& StirlingTriangle::shared() {
  static StirlingTriangle instance;
  return instance;
}

ExactInt stirling(std::int64_t n, std::int64_t k) { return StirlingTriangle::shared().at(n, k); }

std::vector<ExactInt> stirling_row(std::int64_t n) {
  auto r = StirlingTriangle::shared().row(n);
  return {r.begin(), r.end()};
}

ExactInt stirling_by_permutation_count(int n, int k) {
  if (n < 0) throw std::domain_error("permutation count with negative n " + std::to_string(n));
  if (n > kPermutationOracleMax) {
    throw std::invalid_argument("permutation oracle limited to n <= " + std::to_string(kPermutationOracleMax) +
                                ", got " + std::to_string(n));
  }
  if (k < 0 || k > n) return ExactInt(0);

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<char> seen(perm.size());
  std::int64_t count = 0;
  do {
    std::fill(seen.begin(), seen.end(), 0);
    int cycles = 0;
    for (std::size_t start = 0; start < perm.size(); ++start) {
      if (seen[start]) continue;
      ++cycles;
      for (auto i = start; !seen[i]; i = static_cast<std::size_t>(perm[i])) seen[i] = 1;
    }
    if (cycles == k) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return ExactInt(count);
}

ExactInt lemma1_lhs(std::int64_t p, std::int64_t t) {
  if (p < 0) throw std::domain_error("lemma1 with negative p " + std::to_string(p));
  auto row = StirlingTriangle::shared().row(p + 1);
  ExactInt sum(0);
  for (std::int64_t k = std::max<std::int64_t>(t, 0); k <= p + 1; ++k) {
    ExactInt term = pow(ExactInt(p), static_cast<unsigned long>(k - t)) * binomial(k, t) *
                    row[static_cast<std::size_t>(k)];
    if ((p + 1 - k) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

VerificationReport check_lemma1(std::int64_t p) {
  if (p < 0) throw std::domain_error("lemma1 with negative p " + std::to_string(p));
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.identity = "lemma1";
  report.domain = "p=" + std::to_string(p) + ", 0<=t<=" + std::to_string(p + 1);
  auto row = StirlingTriangle::shared().row(p + 1);
  for (std::int64_t t = 0; t <= p + 1; ++t) {
    report.record({{"p", p}, {"t", t}}, lemma1_lhs(p, t), row[static_cast<std::size_t>(t)]);
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace stirsum
