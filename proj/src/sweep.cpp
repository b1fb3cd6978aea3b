#include "stirsum/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <thread>
#include <vector>

#include "stirsum/catalan.hpp"
#include "stirsum/harmonic.hpp"
#include "stirsum/powersum.hpp"
#include "stirsum/stirling.hpp"

namespace stirsum {
namespace {

IdentitySweep pn_sweep(std::string name, std::string summary, std::int64_t n_min,
                       VerificationReport (*check)(std::int64_t, std::int64_t)) {
  return IdentitySweep{std::move(name), std::move(summary), InnerParam::n, 0, n_min,
                       [check](std::int64_t p, std::int64_t n) { return check(p, n); }, nullptr, ""};
}

IdentityRegistry build_default_registry() {
  IdentityRegistry registry;
  auto add = [&](IdentitySweep sweep) { registry.emplace(sweep.name, std::move(sweep)); };

  add(IdentitySweep{
      "lemma1", "alternating Stirling sum with p^{k-t} C(k,t) recovers [p+1 t]", InnerParam::none, 0, 0,
      [](std::int64_t p, std::int64_t t) {
        VerificationReport report;
        report.identity = "lemma1";
        report.record({{"p", p}, {"t", t}}, lemma1_lhs(p, t), stirling(p + 1, t));
        return report;
      },
      [](std::int64_t p, std::int64_t) { return std::pair<std::int64_t, std::int64_t>{0, p + 1}; },
      "0<=t<=p+1"});
  add(pn_sweep("identity1", "sum C(k+p,p) H_k against the Stirling-weighted power sums", 1, check_identity1));
  add(pn_sweep("identity2", "sum C(k+p,p) H_k against the summation-by-parts closed form", 1, check_identity2));
  add(pn_sweep("eq1", "1 + sum C(p+1,t) S_t(n) == (n+1)^{p+1}", 0, check_eq1));
  add(pn_sweep("eq2", "p! + sum [p+1 t+1] S_t(n) == p! C(n+p+1,p+1)", 0, check_eq2));
  add(pn_sweep("abel", "summation by parts with u_k = C(k+p,p), v_k = 1/k", 1, check_abel_instantiation));
  add(IdentitySweep{"eq3", "sum r^t [p+1 t+1] == (p+r)!/r!", InnerParam::r, 0, 1,
                    [](std::int64_t p, std::int64_t r) { return check_identity3(p, r); }, nullptr, ""});
  add(IdentitySweep{"inductive_step", "strong-induction step for the weighted row sums", InnerParam::r, 0, 2,
                    [](std::int64_t p, std::int64_t r) { return check_inductive_step(p, r); }, nullptr, ""});
  add(IdentitySweep{"catalan", "Catalan numbers as weighted Stirling row averages", InnerParam::none, 1, 0,
                    [](std::int64_t p, std::int64_t) { return check_catalan(p); }, nullptr, ""});
  return registry;
}

const char* inner_name(InnerParam inner) {
  switch (inner) {
    case InnerParam::n: return "n";
    case InnerParam::r: return "r";
    case InnerParam::none: break;
  }
  return "";
}

struct Plan {
  const IdentitySweep* sweep = nullptr;
  std::int64_t inner_max = 0;
};

Plan make_plan(const SweepSpec& spec, const IdentityRegistry& registry) {
  auto it = registry.find(spec.identity);
  if (it == registry.end()) throw SweepSpecError("unknown identity '" + spec.identity + "'");
  const IdentitySweep& sweep = it->second;

  if (spec.p_max < sweep.p_min) {
    throw SweepSpecError(sweep.name + " needs --p-max >= " + std::to_string(sweep.p_min));
  }
  const bool wants_n = sweep.inner == InnerParam::n;
  const bool wants_r = sweep.inner == InnerParam::r;
  if (spec.n_max && !wants_n) throw SweepSpecError(sweep.name + " does not take --n-max");
  if (spec.r_max && !wants_r) throw SweepSpecError(sweep.name + " does not take --r-max");

  Plan plan{&sweep, 0};
  if (sweep.inner != InnerParam::none) {
    const auto& bound = wants_n ? spec.n_max : spec.r_max;
    const std::string flag = std::string("--") + inner_name(sweep.inner) + "-max";
    if (!bound) throw SweepSpecError(sweep.name + " requires " + flag);
    if (*bound < sweep.inner_min) {
      throw SweepSpecError(sweep.name + " needs " + flag + " >= " + std::to_string(sweep.inner_min));
    }
    plan.inner_max = *bound;
  }
  return plan;
}

std::pair<std::int64_t, std::int64_t> inner_bounds(const Plan& plan, std::int64_t p) {
  const IdentitySweep& sweep = *plan.sweep;
  if (sweep.inner_range) return sweep.inner_range(p, plan.inner_max);
  if (sweep.inner == InnerParam::none) return {0, 0};
  return {sweep.inner_min, plan.inner_max};
}

struct RowOutcome {
  VerificationReport report;
  bool stopped = false;  // fail-fast hit inside this row
};

RowOutcome run_row(const Plan& plan, std::int64_t p, bool fail_fast) {
  RowOutcome out;
  const auto [lo, hi] = inner_bounds(plan, p);
  for (std::int64_t inner = lo; inner <= hi; ++inner) {
    out.report.absorb(plan.sweep->cell(p, inner));
    if (fail_fast && !out.report.passed()) {
      out.stopped = true;
      break;
    }
  }
  return out;
}

std::string describe_domain(const Plan& plan, std::int64_t p_max) {
  const IdentitySweep& sweep = *plan.sweep;
  std::string domain = std::to_string(sweep.p_min) + "<=p<=" + std::to_string(p_max);
  if (sweep.inner_range) return domain + ", " + sweep.inner_range_text;
  if (sweep.inner != InnerParam::none) {
    domain += ", " + std::to_string(sweep.inner_min) + "<=" + inner_name(sweep.inner) + "<=" +
              std::to_string(plan.inner_max);
  }
  return domain;
}

}  // namespace

const IdentityRegistry& default_registry() {
  static const IdentityRegistry registry = build_default_registry();
  return registry;
}

VerificationReport run_sweep(const SweepSpec& spec, const IdentityRegistry& registry) {
  const auto start = std::chrono::steady_clock::now();
  const Plan plan = make_plan(spec, registry);
  const std::int64_t p_min = plan.sweep->p_min;
  const auto rows = static_cast<std::size_t>(spec.p_max - p_min + 1);

  std::vector<RowOutcome> outcomes(rows);
  std::atomic<std::size_t> next{0};
  // Under fail-fast, rows after the earliest failing row are never reported.
  std::atomic<std::size_t> first_stop{std::numeric_limits<std::size_t>::max()};

  auto worker = [&] {
    for (std::size_t i = next++; i < rows; i = next++) {
      if (spec.fail_fast && i > first_stop.load()) continue;
      outcomes[i] = run_row(plan, p_min + static_cast<std::int64_t>(i), spec.fail_fast);
      if (outcomes[i].stopped) {
        std::size_t seen = first_stop.load();
        while (i < seen && !first_stop.compare_exchange_weak(seen, i)) {
        }
      }
    }
  };

  const unsigned jobs = std::clamp<unsigned>(spec.jobs, 1, static_cast<unsigned>(std::min<std::size_t>(rows, 256)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  VerificationReport report;
  report.identity = plan.sweep->name;
  report.domain = describe_domain(plan, spec.p_max);
  for (const RowOutcome& row : outcomes) {
    report.absorb(row.report);
    if (row.stopped) break;
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace stirsum
