#pragma once

#include <string>
#include <vector>

namespace wreath {

struct CheckResult {
  std::string check;    // stable identifier of the property being checked
  std::string subject;  // what it was checked on
  bool pass = false;
  std::string detail;
};

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace wreath
