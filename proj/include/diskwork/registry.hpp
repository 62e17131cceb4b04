#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace dw {

using Cell = std::variant<long long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct CheckConfig {
  unsigned seed = 0;
};

struct CheckResult {
  bool pass = true;
  std::string note;
  Table table;
};

// One registered invariant. `statement` names the inequality or identity checked.
struct Check {
  std::string suite;
  std::string id;
  std::string statement;
  std::function<CheckResult(const CheckConfig&)> run;
};

const std::vector<Check>& check_registry();
std::vector<std::string> check_suites();

}  // namespace dw
