#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qbilat/qcore.hpp"

namespace qbilat {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,
  kExitUnknownId = 2,
  kExitNumeric = 3,
  kExitUsage = 4,
};

struct CliConfig {
  std::uint64_t seed = 1;
  int samples = 20;
  double tol = 1e-8;
  long max_terms = 2000;
  bool json = false;
  std::optional<Complex> q;
  std::map<std::string, Complex> params;  // --param name=value
};

// `re` or `re+imi` with optional leading minus and decimal parts; ParseError otherwise.
Complex parse_complex_literal(const std::string& text);
// Comma-separated literals; the empty string is the empty list.
std::vector<Complex> parse_complex_list(const std::string& text);

// args excludes the program name. QBILAT_MAX_TERMS in the environment sets the
// term budget unless --max-terms is given.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbilat
