// Glue between the library types and the reference code in tests.
#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "nimcash/core.hpp"
#include "reference.hpp"

namespace testing {

inline std::vector<ref::Int> raw(const nimcash::RuleSet& rules) {
  return {rules.moves().begin(), rules.moves().end()};
}

inline ref::Int raw(const nimcash::Cash& c) { return c.is_infinite() ? ref::kInf : c.dollars(); }

inline nimcash::Player player(int w) { return w == 1 ? nimcash::Player::P1 : nimcash::Player::P2; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string golden(const std::string& name) {
  return read_file(std::string(NIMCASH_GOLDEN_DIR) + "/" + name);
}

/// Every supported family with L <= 8.
inline std::vector<nimcash::RuleSet> supported_families() {
  return {{1, 2},    {1, 4},    {1, 6},    {1, 8},    {1, 2, 3}, {1, 4, 5},
          {1, 6, 7}, {1, 8, 9}, {1, 3, 4}, {1, 5, 6}, {1, 7, 8}};
}

}  // namespace testing
