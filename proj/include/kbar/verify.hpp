#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kbar {

enum class Scope { all, hereditary, canonical, dynkin, tube };

Scope parse_scope(const std::string& s);  // throws std::invalid_argument

struct CheckResult {
  std::string id;
  std::string name;
  bool pass = false;
  std::string detail;
};

inline constexpr std::uint64_t kDefaultSeed = 20250810;

// Runs the paper-verification checks for the scope; failures are results,
// not exceptions.
std::vector<CheckResult> run_verification(Scope scope, std::uint64_t seed);

}  // namespace kbar
