#pragma once

// Command-line front end: `cgc analyze | laws | gtc | tables`.
//
// Exit codes: 0 success; 1 usage or parse error, unknown law domain, or a
// failing law suite; 2 analysis error (unbound variable, overflow, or a
// failed --verify); 3 ill-typed gradual term.

#include <cgc/law_report.hpp>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace cgc::cli {

enum class Format { Json, Text };

struct Config {
  int window = 8;
  std::size_t fuel = 10000;
  Format format = Format::Json;
  std::uint64_t seed = 0;
  int depth = 2;
};

// Law reports for one named fixture: parity, parity+, sign, env, gradual.
// Throws std::invalid_argument for an unknown name.
std::vector<LawReport> law_suite(const std::string& domain, const Config& cfg);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cgc::cli
