#ifndef STIRSUM_CLI_HPP
#define STIRSUM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "stirsum/report.hpp"
#include "stirsum/sweep.hpp"

namespace stirsum::cli {

enum class OutputFormat { text, json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailures = 1;
inline constexpr int kExitUsage = 2;

// Renders a sweep report. JSON carries exactly identity, cases, failures
// and first_failure; elapsed time is never part of json or csv output.
std::string render_report(const VerificationReport& report, OutputFormat format);

// Entry point shared by the executable and the tests. `args` excludes the
// program name. Payload goes to `out` (or --output), diagnostics and
// timing to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const IdentityRegistry& registry = default_registry());

}  // namespace stirsum::cli

#endif  // STIRSUM_CLI_HPP
