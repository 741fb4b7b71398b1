#include "doctest.h"
#include "monoflow/errors.hpp"
#include "monoflow/suites.hpp"

using namespace monoflow;

TEST_CASE("suite names are registered") {
  CHECK(suite_names().size() == 10);
  CHECK_THROWS_AS(run_suite("no-such-suite"), PreconditionError);
}

TEST_CASE("report verdict") {
  SuiteReport r;
  CHECK(r.verdict() == Verdict::Pass);
  r.add({"a", Verdict::Pass, "", ""}, false);
  CHECK(r.cases.empty());
  r.add({"b", Verdict::Unknown, "budget", ""}, false);
  CHECK(r.verdict() == Verdict::Unknown);
  r.add({"c", Verdict::Fail, "wrong", "v 1\n"}, false);
  CHECK(r.verdict() == Verdict::Fail);
  CHECK(r.passed == 1);
  CHECK(r.cases.size() == 2);
  CHECK(to_string(Verdict::Fail) == "FAIL");
}

TEST_CASE("fast suites pass") {
  for (const char* name : {"ground", "hoffman", "duality", "folding", "transfer"}) {
    INFO(name);
    SuiteOptions options;
    options.record_passes = true;
    SuiteReport r = run_suite(name, options);
    CHECK(r.verdict() == Verdict::Pass);
    CHECK(r.passed > 0);
    CHECK(r.cases.size() == static_cast<std::size_t>(r.passed));
  }
}

TEST_CASE("doubling without the stretch target") {
  SuiteOptions options;
  options.include_stretch = false;
  SuiteReport r = run_suite("doubling", options);
  CHECK(r.verdict() == Verdict::Pass);
  CHECK(r.passed == 3);
}
