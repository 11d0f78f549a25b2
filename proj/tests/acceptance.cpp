// Acceptance run: one line per criterion, then the flagged statements.
#include <cstdio>
#include <iostream>
#include <map>

#include "pbl/verify.hpp"

int main() {
  pbl::RunConfig cfg;
  cfg.seed = pbl::seed_from_env();
  const pbl::VerificationReport report = pbl::verify_all(cfg);

  std::map<std::string, const pbl::Check*> by_name;
  for (const auto& c : report.checks) by_name[c.module + "/" + c.name] = &c;

  std::printf("seed 0x%llx\n", static_cast<unsigned long long>(report.seed));
  const auto names = pbl::criterion_names();
  int failures = 0;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto it = by_name.find(names[i]);
    if (it == by_name.end()) {
      std::printf("[%2zu] FAIL %s: not run\n", i + 1, names[i].c_str());
      ++failures;
      continue;
    }
    const pbl::Check& c = *it->second;
    const bool pass = c.status == pbl::CheckStatus::Pass;
    failures += !pass;
    std::printf("[%2zu] %s %s: computed %s, expected %s, tolerance: exact\n", i + 1, pass ? "PASS" : "FAIL",
                names[i].c_str(), c.computed.c_str(), c.expected.c_str());
    if (!pass && !c.detail.empty()) std::printf("     %s\n", c.detail.c_str());
  }
  for (const auto& c : report.checks)
    if (c.status == pbl::CheckStatus::Flagged)
      std::printf("     FLAGGED %s/%s: %s\n", c.module.c_str(), c.name.c_str(), c.detail.c_str());
  std::printf("%d of %zu criteria failed\n", failures, names.size());
  return failures == 0 ? 0 : 1;
}
