#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pbl/json_io.hpp"

namespace pbl {

enum class CheckStatus { Pass, Fail, Flagged };
enum class OutputFormat { Json, Table };

std::string status_name(CheckStatus s);
OutputFormat parse_format(const std::string& s);  // throws BadInput

struct Check {
  std::string module;
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string expected;
  std::string computed;
  std::string anchor;  // statement checked, or "plumbing"
  std::string detail;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  void add(Check c) { checks.push_back(std::move(c)); }
  // Every non-flagged check passed.
  bool ok() const;
  std::size_t count(CheckStatus s) const;
};

Json to_json(const VerificationReport& r);
// Checks sorted by module then name.
std::string emit_report(const VerificationReport& r, OutputFormat format);

// Left-aligned text table; every row must have as many cells as the header.
std::string text_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

}  // namespace pbl
