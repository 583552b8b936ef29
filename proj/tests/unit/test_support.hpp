#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "splab/tableau.hpp"

#ifndef SPLAB_TEST_DATA
#define SPLAB_TEST_DATA "."
#endif

namespace splab::testing {

inline std::string read_data(const std::string& name) {
  std::ifstream in(std::string(SPLAB_TEST_DATA) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string data_path(const std::string& name) { return std::string(SPLAB_TEST_DATA) + "/" + name; }

inline Letter L(int v) { return Letter::high(v); }
inline Letter P(int v) { return Letter::low(v); }

/// Rows joined with '\n', trailing newline added.
inline std::string lines(const std::vector<std::string>& rows) {
  std::string out;
  for (const auto& r : rows) out += r + '\n';
  return out;
}

}  // namespace splab::testing
