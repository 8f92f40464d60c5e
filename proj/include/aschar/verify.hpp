#pragma once

// Seeded invariant suites run by `aschar verify <suite>`.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace aschar {

struct SuiteReport {
  std::string name;
  bool passed = true;
  std::int64_t checks = 0;
  std::vector<std::string> failures;  // first few only
};

const std::vector<std::string>& suite_names();
// ParseError for an unknown suite.
SuiteReport run_suite(std::string_view name, std::uint64_t seed);

}  // namespace aschar
