// Named pass/fail records shared by the verification modules.
#pragma once

#include <string>
#include <vector>

namespace qheis {

struct Check {
  std::string id;
  bool pass = false;
  std::string detail;  // residual, count or witness text
};

inline bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace qheis
