#include "stirsum/report.hpp"

namespace stirsum {

std::string to_string(const CaseParams& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ", ";
    out += name + "=" + std::to_string(value);
  }
  return out;
}

}  // namespace stirsum
