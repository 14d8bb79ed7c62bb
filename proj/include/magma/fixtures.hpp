#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "magma/automata.hpp"
#include "magma/magma.hpp"
#include "magma/verify.hpp"

namespace magma {

using Fixture = std::variant<FiniteMagma, SemiAutomaton, Automaton>;

/// MAGMA_FIXTURE_DIR when set, otherwise the fixtures/ directory of the
/// source tree.
std::string fixture_dir();

/// Names of all *.cayley and *.machine files, sorted.
std::vector<std::string> fixture_names();

/// Throws UNKNOWN_FIXTURE when no file matches, PARSE_ERROR on bad content.
Fixture load_fixture(std::string_view name);
FiniteMagma load_magma_fixture(std::string_view name);
Automaton load_automaton_fixture(std::string_view name);
SemiAutomaton load_semi_fixture(std::string_view name);

struct FixtureCheck {
  std::string fixture;
  std::string claim;
  VerifyStatus status = VerifyStatus::Pass;
  std::string detail;
  std::string erratum;
};

struct FixtureReport {
  std::vector<FixtureCheck> checks;
  std::size_t passed = 0;
  std::size_t with_errata = 0;
  std::size_t failed = 0;
  bool ok() const noexcept { return failed == 0; }
};

/// Recomputes every recorded claim about every fixture.
FixtureReport fixture_check_all();

}  // namespace magma
