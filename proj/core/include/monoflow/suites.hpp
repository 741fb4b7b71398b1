#pragma once

// Exhaustive and sampled consistency batteries over the library, each a
// named suite with per-case outcomes.

#include <string>
#include <vector>

namespace monoflow {

enum class Verdict { Pass, Fail, Unknown };

std::string to_string(Verdict v);

struct SuiteCase {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::string detail;
  std::string instance;  // graph file text of the case, when there is one
};

struct SuiteReport {
  std::string suite;
  int passed = 0;
  int failed = 0;
  int unknown = 0;
  std::vector<SuiteCase> cases;  // failures and unknowns; passes too when requested
  std::vector<std::string> notes;
  double seconds = 0.0;

  /// Fail if any case failed, else Unknown if any case was undecided.
  Verdict verdict() const;
  void add(SuiteCase c, bool keep_pass);
};

struct SuiteOptions {
  bool record_passes = false;
  unsigned seed = 20240601;
  /// Time limits for the Petersen stretch target in the doubling suite.
  double petersen_found_seconds = 600.0;
  double petersen_refute_seconds = 1800.0;
  bool include_stretch = true;
};

/// equivalences, ground, doubling, tight-cuts, hoffman, eulerian,
/// transfer, connectivity, duality, folding.
const std::vector<std::string>& suite_names();

/// Throws PreconditionError on an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace monoflow
