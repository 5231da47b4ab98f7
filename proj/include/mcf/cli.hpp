#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "mcf/diagrams.hpp"

namespace mcf::cli {

enum class OutputFormat { json, table };

struct Config {
  int max_genus = 4;
  std::int64_t max_degree = 8;
  std::int64_t max_delta = 6;
  EnumerationMode enumeration_mode = EnumerationMode::unlabeled_aut;
  unsigned workers = 1;
  OutputFormat output = OutputFormat::table;
};

// Exit codes: 0 success, 1 verification failure, 2 usage or bound error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcf::cli
