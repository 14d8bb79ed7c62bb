#include <doctest.h>

#include <algorithm>
#include <set>

#include "magma/errata.hpp"
#include "magma/error.hpp"
#include "magma/fixtures.hpp"
#include "magma/verify.hpp"

using namespace magma;

TEST_CASE("theorem statuses") {
  CHECK(verify_theorem("3.1.1", 3, 12).status == VerifyStatus::Pass);
  const auto r = verify_theorem("5.6.3", 4, 12);
  CHECK(r.status == VerifyStatus::PassWithErrata);
  CHECK(r.unexplained_count == 0);
  CHECK(std::find(r.errata.begin(), r.errata.end(), "5.6.3-degenerate") != r.errata.end());
  const auto z30 = verify_theorem("5.4.8", 30, 30);
  CHECK(z30.status == VerifyStatus::Pass);
  try {
    verify_theorem("9.9.9");
    FAIL("expected UNKNOWN_THEOREM");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownTheorem);
  }
}

TEST_CASE("no registered theorem fails on its default range") {
  for (const auto& t : theorem_registry()) {
    const auto r = verify_theorem(t.id);
    CHECK_MESSAGE(r.status != VerifyStatus::Fail, t.id, " ", r.summary);
    CHECK(r.unexplained_count == 0);
    if (r.status == VerifyStatus::Pass) CHECK(r.failures.empty());
    for (const auto& f : r.failures) CHECK_MESSAGE(find_erratum(f.erratum) != nullptr, t.id, " ", f.erratum);
  }
}

TEST_CASE("erratum registry is well formed") {
  std::set<std::string> ids;
  for (const auto& e : errata_registry()) {
    CHECK(ids.insert(e.id).second);
    CHECK_FALSE(e.printed.empty());
    CHECK_FALSE(e.computed.empty());
    CHECK_FALSE(e.affects.empty());
  }
  CHECK(find_erratum("4.2.5") != nullptr);
  CHECK(find_erratum("nope") == nullptr);
}

TEST_CASE("every registered erratum is exercised") {
  std::set<std::string> used;
  for (const auto& t : theorem_registry()) {
    for (const auto& e : verify_theorem(t.id).errata) used.insert(e);
  }
  for (const auto& c : fixture_check_all().checks) {
    if (!c.erratum.empty()) used.insert(c.erratum);
  }
  for (const auto& e : errata_registry()) CHECK_MESSAGE(used.count(e.id) == 1, e.id);
}

TEST_CASE("fixture corpus") {
  const auto names = fixture_names();
  CHECK(names.size() >= 40);
  CHECK(std::is_sorted(names.begin(), names.end()));
  const auto r = fixture_check_all();
  for (const auto& c : r.checks) {
    CHECK_MESSAGE(c.status != VerifyStatus::Fail, c.fixture, ": ", c.claim, " -- ", c.detail);
  }
  CHECK(r.ok());
  CHECK(r.passed + r.with_errata + r.failed == r.checks.size());
  CHECK(std::holds_alternative<FiniteMagma>(load_fixture("ex_4_2_4")));
  CHECK(std::holds_alternative<Automaton>(load_fixture("ex_6_2_4")));
  try {
    load_fixture("ex_0_0_0");
    FAIL("expected UNKNOWN_FIXTURE");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownFixture);
  }
}

TEST_CASE("printed fixtures") {
  const auto m = load_magma_fixture("ex_1_5_2");
  CHECK(m.order() == 8);
  CHECK(is_loop(m).holds);
  CHECK(check_commutative(m).holds);
}
