#pragma once

#include <string>
#include <vector>

#include "stargraph/caps.hpp"

namespace stargraph {

/// One expectation about one instance. `source` says where the expected value
/// comes from: "published" (a stated result), "elementary" (immediate from the
/// definitions) or "computed" (derived here by an independent computation).
struct SuiteItem {
  std::string instance;
  std::string expectation;
  std::string source;
  std::string observed;
  bool pass = false;
};

struct SuiteResult {
  std::string name;
  std::vector<SuiteItem> items;
  bool all_pass() const;
};

/// "small-valency", "vertex-transitive", "vertex-intransitive", "coset", "all".
const std::vector<std::string>& suite_names();

/// Items run in a fixed order. Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& name, const Caps& caps = {});

/// One line per item: PASS/FAIL, instance, expectation, source, observed.
std::string format_suite(const SuiteResult& r);

}  // namespace stargraph
