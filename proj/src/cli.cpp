#include "stirsum/cli.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "stirsum/catalan.hpp"
#include "stirsum/powersum.hpp"
#include "stirsum/stirling.hpp"

namespace stirsum::cli {
namespace {

using Json = nlohmann::ordered_json;

const std::map<std::string, OutputFormat> kFormats{
    {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};

const std::map<std::string, PowerSumMethod> kPowerSumMethods{
    {"direct", PowerSumMethod::direct},
    {"binomial", PowerSumMethod::binomial_recursion},
    {"stirling", PowerSumMethod::stirling_recursion}};

// Raised for arguments that parse but fall outside an operation's domain.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string format = "text";
  std::string output;

  OutputFormat parsed_format() const { return kFormats.at(format); }
};

void add_common(CLI::App& sub, CommonOptions& common) {
  sub.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  sub.add_option("--output", common.output, "Write to this file instead of stdout");
}

std::string lines(const std::vector<std::string>& rows) {
  std::string out;
  for (const auto& row : rows) out += row + "\n";
  return out;
}

std::string render_stirling(std::int64_t row, OutputFormat format) {
  const auto values = stirling_row(row);
  switch (format) {
    case OutputFormat::json: {
      Json arr = Json::array();
      for (const auto& v : values) arr.push_back(v.to_string());
      return arr.dump() + "\n";
    }
    case OutputFormat::csv: {
      std::vector<std::string> rows{"k,value"};
      for (std::size_t k = 0; k < values.size(); ++k) rows.push_back(std::to_string(k) + "," + values[k].to_string());
      return lines(rows);
    }
    case OutputFormat::text: break;
  }
  std::vector<std::string> rows;
  for (std::size_t k = 0; k < values.size(); ++k) rows.push_back(std::to_string(k) + " " + values[k].to_string());
  return lines(rows);
}

std::string render_powersum(std::int64_t p, std::int64_t n, PowerSumMethod method, bool table, OutputFormat format) {
  const std::string method_name(to_string(method));
  if (!table) {
    const std::string value = powersum({p, n, method}).to_string();
    switch (format) {
      case OutputFormat::json: {
        Json obj{{"p", p}, {"n", n}, {"method", method_name}, {"value", value}};
        return obj.dump() + "\n";
      }
      case OutputFormat::csv:
        return lines({"p,n,method,value",
                      std::to_string(p) + "," + std::to_string(n) + "," + method_name + "," + value});
      case OutputFormat::text: break;
    }
    return value + "\n";
  }

  std::vector<std::string> values;
  for (std::int64_t m = 1; m <= n; ++m) values.push_back(powersum({p, m, method}).to_string());
  switch (format) {
    case OutputFormat::json: {
      Json arr = Json::array();
      for (std::size_t i = 0; i < values.size(); ++i) arr.push_back(Json{{"n", i + 1}, {"value", values[i]}});
      Json obj{{"p", p}, {"method", method_name}, {"values", arr}};
      return obj.dump() + "\n";
    }
    case OutputFormat::csv: {
      std::vector<std::string> rows{"n,value"};
      for (std::size_t i = 0; i < values.size(); ++i) rows.push_back(std::to_string(i + 1) + "," + values[i]);
      return lines(rows);
    }
    case OutputFormat::text: break;
  }
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < values.size(); ++i) rows.push_back(std::to_string(i + 1) + " " + values[i]);
  return lines(rows);
}

std::string render_catalan(std::int64_t p, const std::string& method, bool upto, OutputFormat format) {
  const bool via_stirling = method == "stirling";
  const std::int64_t lo = upto ? 1 : p;
  if (via_stirling && lo < 1) throw UsageError("--method stirling needs --p >= 1 (got " + std::to_string(p) + ")");

  std::vector<std::pair<std::int64_t, std::string>> values;
  for (std::int64_t q = lo; q <= p; ++q) {
    values.emplace_back(q, (via_stirling ? catalan_stirling(q) : catalan_closed(q)).to_string());
  }

  if (!upto) {
    const std::string& value = values.front().second;
    switch (format) {
      case OutputFormat::json: return Json{{"p", p}, {"method", method}, {"value", value}}.dump() + "\n";
      case OutputFormat::csv: return lines({"p,method,value", std::to_string(p) + "," + method + "," + value});
      case OutputFormat::text: break;
    }
    return value + "\n";
  }

  switch (format) {
    case OutputFormat::json: {
      Json arr = Json::array();
      for (const auto& [q, v] : values) arr.push_back(Json{{"p", q}, {"value", v}});
      return Json{{"method", method}, {"values", arr}}.dump() + "\n";
    }
    case OutputFormat::csv: {
      std::vector<std::string> rows{"p,value"};
      for (const auto& [q, v] : values) rows.push_back(std::to_string(q) + "," + v);
      return lines(rows);
    }
    case OutputFormat::text: break;
  }
  std::vector<std::string> rows;
  for (const auto& [q, v] : values) rows.push_back(std::to_string(q) + " " + v);
  return lines(rows);
}

std::string render_faulhaber(std::int64_t p, OutputFormat format) {
  const RatPolynomial q = faulhaber_polynomial(p);
  switch (format) {
    case OutputFormat::json: {
      Json arr = Json::array();
      for (const auto& c : q.coefficients()) arr.push_back(c.to_string());
      return arr.dump() + "\n";
    }
    case OutputFormat::csv: {
      std::vector<std::string> rows{"degree,coefficient"};
      const auto coeffs = q.coefficients();
      for (std::size_t i = 0; i < coeffs.size(); ++i) rows.push_back(std::to_string(i) + "," + coeffs[i].to_string());
      return lines(rows);
    }
    case OutputFormat::text: break;
  }
  return to_string(q) + "\n";
}

// params rendered "p=3;n=5" so the field needs no CSV quoting
std::string csv_params(const CaseParams& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ";";
    out += name + "=" + std::to_string(value);
  }
  return out;
}

void emit(const std::string& payload, const CommonOptions& common, std::ostream& out) {
  if (common.output.empty()) {
    out << payload;
    out.flush();
    return;
  }
  std::ofstream file(common.output, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open output file '" + common.output + "'");
  file << payload;
  if (!file) throw UsageError("failed writing output file '" + common.output + "'");
}

}  // namespace

std::string render_report(const VerificationReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      Json obj;
      obj["identity"] = report.identity;
      obj["cases"] = report.cases_checked;
      obj["failures"] = report.failures;
      if (report.first_failure) {
        Json params = Json::object();
        for (const auto& [name, value] : report.first_failure->params) params[name] = value;
        obj["first_failure"] =
            Json{{"params", params}, {"lhs", report.first_failure->lhs}, {"rhs", report.first_failure->rhs}};
      } else {
        obj["first_failure"] = nullptr;
      }
      return obj.dump() + "\n";
    }
    case OutputFormat::csv: {
      std::string row = report.identity + "," + std::to_string(report.cases_checked) + "," +
                        std::to_string(report.failures) + ",";
      if (report.first_failure) {
        row += csv_params(report.first_failure->params) + "," + report.first_failure->lhs + "," +
               report.first_failure->rhs;
      } else {
        row += ",,";
      }
      return lines({"identity,cases,failures,params,lhs,rhs", row});
    }
    case OutputFormat::text: break;
  }
  std::vector<std::string> rows{
      "identity: " + report.identity,
      "domain: " + report.domain,
      "cases: " + std::to_string(report.cases_checked),
      "failures: " + std::to_string(report.failures),
  };
  if (report.first_failure) {
    rows.push_back("first failure: " + to_string(report.first_failure->params));
    rows.push_back("  lhs = " + report.first_failure->lhs);
    rows.push_back("  rhs = " + report.first_failure->rhs);
  }
  rows.push_back(report.passed() ? "result: PASS" : "result: FAIL");
  return lines(rows);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const IdentityRegistry& registry) {
  CLI::App app{"Exact Stirling-cycle power sums, Catalan numbers and identity sweeps", "stirsum"};
  app.require_subcommand(1);

  CommonOptions common;

  std::int64_t row = 0;
  auto* stirling_cmd = app.add_subcommand("stirling", "Emit row n of the Stirling cycle-number triangle");
  stirling_cmd->add_option("--row", row, "Row index n")->required()->check(CLI::NonNegativeNumber);
  add_common(*stirling_cmd, common);

  std::int64_t ps_p = 0;
  std::int64_t ps_n = 0;
  std::string ps_method = "direct";
  bool ps_table = false;
  auto* powersum_cmd = app.add_subcommand("powersum", "Compute S_p(n) = 1^p + ... + n^p");
  powersum_cmd->add_option("--p", ps_p, "Exponent p")->required()->check(CLI::NonNegativeNumber);
  powersum_cmd->add_option("--n", ps_n, "Upper limit n")->required()->check(CLI::NonNegativeNumber);
  powersum_cmd->add_option("--method", ps_method, "direct, binomial or stirling")
      ->check(CLI::IsMember({"direct", "binomial", "stirling"}))
      ->capture_default_str();
  powersum_cmd->add_flag("--table", ps_table, "Emit S_p(1..n)");
  add_common(*powersum_cmd, common);

  std::int64_t cat_p = 0;
  std::string cat_method = "closed";
  bool cat_upto = false;
  auto* catalan_cmd = app.add_subcommand("catalan", "Compute the Catalan number C_p");
  catalan_cmd->add_option("--p", cat_p, "Index p")->required()->check(CLI::NonNegativeNumber);
  catalan_cmd->add_option("--method", cat_method, "closed or stirling")
      ->check(CLI::IsMember({"closed", "stirling"}))
      ->capture_default_str();
  catalan_cmd->add_flag("--upto", cat_upto, "Emit C_1..C_p");
  add_common(*catalan_cmd, common);

  std::int64_t fh_p = 0;
  auto* faulhaber_cmd = app.add_subcommand("faulhaber", "Coefficients of the polynomial in n equal to S_p(n)");
  faulhaber_cmd->add_option("--p", fh_p, "Exponent p")->required()->check(CLI::NonNegativeNumber);
  add_common(*faulhaber_cmd, common);

  SweepSpec sweep;
  std::int64_t n_max = -1;
  std::int64_t r_max = -1;
  auto* verify_cmd = app.add_subcommand("verify", "Check an identity over a parameter range");
  std::vector<std::string> names;
  for (const auto& [name, _] : registry) names.push_back(name);
  verify_cmd->add_option("--identity", sweep.identity, "Identity to check")->required()->check(CLI::IsMember(names));
  verify_cmd->add_option("--p-max", sweep.p_max, "Largest p")->required()->check(CLI::NonNegativeNumber);
  auto* n_opt = verify_cmd->add_option("--n-max", n_max, "Largest n")->check(CLI::NonNegativeNumber);
  auto* r_opt = verify_cmd->add_option("--r-max", r_max, "Largest r")->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--fail-fast", sweep.fail_fast, "Stop at the first failing case");
  verify_cmd->add_option("--jobs", sweep.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  add_common(*verify_cmd, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    const OutputFormat format = common.parsed_format();
    if (*stirling_cmd) {
      emit(render_stirling(row, format), common, out);
    } else if (*powersum_cmd) {
      emit(render_powersum(ps_p, ps_n, kPowerSumMethods.at(ps_method), ps_table, format), common, out);
    } else if (*catalan_cmd) {
      emit(render_catalan(cat_p, cat_method, cat_upto, format), common, out);
    } else if (*faulhaber_cmd) {
      emit(render_faulhaber(fh_p, format), common, out);
    } else if (*verify_cmd) {
      if (*n_opt) sweep.n_max = n_max;
      if (*r_opt) sweep.r_max = r_max;
      const VerificationReport report = run_sweep(sweep, registry);
      emit(render_report(report, format), common, out);
      if (format == OutputFormat::text) {
        const auto ms = std::chrono::duration<double, std::milli>(report.elapsed).count();
        err << "elapsed: " << ms << " ms\n";
      }
      return report.passed() ? kExitOk : kExitFailures;
    }
  } catch (const SweepSpecError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace stirsum::cli
