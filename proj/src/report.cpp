#include "pbl/report.hpp"

#include <algorithm>
#include <sstream>

#include "pbl/error.hpp"

namespace pbl {

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Flagged: return "FLAGGED";
  }
  return "?";
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "table") return OutputFormat::Table;
  throw Error(ErrorCode::BadInput, "format must be json or table, got " + s);
}

bool VerificationReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.status == s; }));
}

namespace {

std::vector<Check> sorted(const VerificationReport& r) {
  std::vector<Check> out = r.checks;
  std::stable_sort(out.begin(), out.end(), [](const Check& a, const Check& b) {
    return std::tie(a.module, a.name) < std::tie(b.module, b.name);
  });
  return out;
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << std::uppercase << v;
  return os.str();
}

}  // namespace

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : sorted(r))
    checks.push_back(Json{{"module", c.module},
                          {"name", c.name},
                          {"status", status_name(c.status)},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"anchor", c.anchor},
                          {"detail", c.detail}});
  return Json{{"seed", hex(r.seed)},
              {"summary",
               {{"pass", r.count(CheckStatus::Pass)},
                {"fail", r.count(CheckStatus::Fail)},
                {"flagged", r.count(CheckStatus::Flagged)}}},
              {"checks", checks}};
}

std::string text_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out += cells[i];
      if (i + 1 < cells.size()) out += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    os << out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return os.str();
}

std::string emit_report(const VerificationReport& r, OutputFormat format) {
  if (format == OutputFormat::Json) return to_json(r).dump(2) + "\n";
  const auto checks = sorted(r);
  std::ostringstream os;
  os << "verification report, seed " << hex(r.seed) << '\n';
  if (checks.empty()) return os.str();
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : checks) rows.push_back({c.module, c.name, status_name(c.status)});
  os << text_table({"module", "check", "status"}, rows);
  for (auto status : {CheckStatus::Fail, CheckStatus::Flagged}) {
    bool header = false;
    for (const auto& c : checks) {
      if (c.status != status) continue;
      if (!header) {
        os << '\n' << status_name(status) << '\n';
        header = true;
      }
      os << "  " << c.module << '/' << c.name << '\n'
         << "    expected: " << c.expected << '\n'
         << "    computed: " << c.computed << '\n';
      if (!c.detail.empty()) os << "    detail:   " << c.detail << '\n';
    }
  }
  os << '\n'
     << r.count(CheckStatus::Pass) << " passed, " << r.count(CheckStatus::Fail) << " failed, "
     << r.count(CheckStatus::Flagged) << " flagged\n";
  return os.str();
}

}  // namespace pbl
