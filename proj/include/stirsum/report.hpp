#ifndef STIRSUM_REPORT_HPP
#define STIRSUM_REPORT_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stirsum {

// Named integer parameters of one checked case, in the order they vary
// (outermost first), e.g. {{"p", 3}, {"n", 5}}.
using CaseParams = std::vector<std::pair<std::string, std::int64_t>>;

struct Counterexample {
  CaseParams params;
  std::string lhs;
  std::string rhs;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

// Outcome of checking an identity over a finite parameter domain.
//
// Only the first failure (in the order cases were recorded) keeps its
// values; later failures are counted. failures == 0 iff first_failure is
// empty.
struct VerificationReport {
  std::string identity;
  std::string domain;
  std::uint64_t cases_checked = 0;
  std::uint64_t failures = 0;
  std::optional<Counterexample> first_failure;
  std::chrono::nanoseconds elapsed{0};

  bool passed() const noexcept { return failures == 0; }

  // Records one case. Values are stringified only for the first failure.
  template <typename Value>
  bool record(CaseParams params, const Value& lhs, const Value& rhs) {
    ++cases_checked;
    if (lhs == rhs) return true;
    if (failures++ == 0) first_failure = Counterexample{std::move(params), to_string(lhs), to_string(rhs)};
    return false;
  }

  // Appends the cases of a report whose parameters come after ours.
  void absorb(const VerificationReport& later) {
    cases_checked += later.cases_checked;
    if (later.failures > 0 && failures == 0) first_failure = later.first_failure;
    failures += later.failures;
    elapsed += later.elapsed;
  }
};

std::string to_string(const CaseParams& params);  // "p=3, n=5"

}  // namespace stirsum

#endif  // STIRSUM_REPORT_HPP
