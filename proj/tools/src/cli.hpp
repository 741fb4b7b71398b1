#pragma once

// The monoflow command line: argument parsing, per-command validation and
// the commands themselves. Exit codes are a stable contract.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "monoflow/index.hpp"

namespace monoflow::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,  // the answer is "no" (no flow, invalid certificate, failing suite)
  kUsage = 2,     // bad arguments, unreadable or malformed input
  kBudget = 3,    // a search budget ran out or a size guard refused
};

struct CommandConfig {
  std::string command;

  std::string graph_path;
  std::string embedding_path;
  std::string flow_path;
  std::string cert_path;
  std::string beta_path;

  std::string witness_out;
  std::string certificate_out;
  std::string graph_out;
  std::string embedding_out;

  std::optional<int> p;
  std::optional<int> q;
  std::optional<int> k;
  std::optional<int> ell;
  std::optional<int> modulus;
  std::optional<int> face;
  std::optional<int> max_v;
  std::optional<int> max_e;

  std::string to_form;
  std::string from;
  std::string suite;
  std::string problem;

  bool saturate = false;
  bool negated = false;
  bool partition = false;
  bool check = false;
  bool eulerian = false;
  bool verbose = false;
  bool no_stretch = false;
  bool json = false;

  std::optional<int> max_p;
  std::uint64_t node_limit = 0;
  double time_limit = 0.0;
  double search_limit = 5e7;

  SearchBudget budget() const;
};

/// Checks the parameter combination of cfg.command; throws
/// PreconditionError with a usage message.
void validate(const CommandConfig& cfg);

/// Runs one already-validated command.
int execute(const CommandConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses arguments (without the program name), validates and executes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monoflow::cli
