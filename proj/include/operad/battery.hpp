#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace operad {

struct criterion_result {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Runs the full reproduction battery, printing one PASS/FAIL line per
// criterion; returns the number of failures.
int run_paper_suite(std::ostream& out, unsigned long seed = 0);

std::vector<criterion_result> run_paper_battery(unsigned long seed = 0);

}  // namespace operad
