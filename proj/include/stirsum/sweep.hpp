#ifndef STIRSUM_SWEEP_HPP
#define STIRSUM_SWEEP_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "stirsum/report.hpp"

namespace stirsum {

// Which second parameter an identity varies besides p.
enum class InnerParam { none, n, r };

// A verifiable identity over the rectangle p_min..p_max x inner range.
//
// A cell is one (p, inner) point; it may record several cases. For
// identities whose inner range depends on p (lemma1 walks t = 0..p+1),
// inner_range overrides the [inner_min, inner_max] default.
struct IdentitySweep {
  std::string name;
  std::string summary;
  InnerParam inner = InnerParam::none;
  std::int64_t p_min = 0;
  std::int64_t inner_min = 0;
  std::function<VerificationReport(std::int64_t p, std::int64_t inner)> cell;
  std::function<std::pair<std::int64_t, std::int64_t>(std::int64_t p, std::int64_t inner_max)> inner_range;
  std::string inner_range_text;  // domain text for a custom inner_range, e.g. "0<=t<=p+1"
};

using IdentityRegistry = std::map<std::string, IdentitySweep>;

// lemma1, identity1, identity2, eq1, eq2, eq3, inductive_step, catalan, abel.
const IdentityRegistry& default_registry();

struct SweepSpec {
  std::string identity;
  std::int64_t p_max = 0;
  std::optional<std::int64_t> n_max;
  std::optional<std::int64_t> r_max;
  bool fail_fast = false;
  unsigned jobs = 1;
};

// Thrown for sweeps that name an unknown identity, omit or misuse a bound,
// or describe an empty domain.
class SweepSpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Runs every cell in lexicographic (p, inner) order. Each p row may run on
// its own thread; the report is assembled in p order, so it is the same
// for any jobs value.
// With fail_fast the sweep stops after the first failing cell.
VerificationReport run_sweep(const SweepSpec& spec, const IdentityRegistry& registry = default_registry());

}  // namespace stirsum

#endif  // STIRSUM_SWEEP_HPP
