#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fdalg/algebra.hpp"

namespace fdalg {

struct Fixture;

/// One regression entry: the operation and its arguments, the recorded result,
/// and how to recompute it.
struct ExpectedRow {
  std::string operation;
  std::string arguments;
  std::string expected;
  std::function<std::string(const Fixture&)> compute;
};

struct Fixture {
  std::string name;
  Algebra algebra;
  LinMap map;
  std::vector<ExpectedRow> expected;
  std::string notes;
};

struct RowOutcome {
  std::string operation;
  std::string arguments;
  std::string expected;
  std::string computed;
  bool pass = false;
};

std::vector<std::string> fixture_names();

/// UNKNOWN_FIXTURE for unrecognized names.
Fixture build_fixture(const std::string& name);

std::vector<RowOutcome> verify_fixture(const Fixture& fixture);

}  // namespace fdalg
