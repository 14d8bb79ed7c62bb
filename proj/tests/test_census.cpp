#include <doctest.h>

#include <json.hpp>

#include "magma/census.hpp"
#include "magma/error.hpp"
#include "magma/smarandache.hpp"

using namespace magma;

namespace {

std::vector<CensusRecord> run(CensusClass cls, unsigned lo, unsigned hi, unsigned threads = 0,
                              std::size_t subset_bound = kDefaultSubsetBound) {
  CensusOptions o;
  o.cls = cls;
  o.n_lo = lo;
  o.n_hi = hi;
  o.threads = threads;
  o.subset_bound = subset_bound;
  return census(o);
}

bool flag(const CensusRecord& r, const char* col) { return std::get<bool>(*r.get(col)); }

std::string dump(const std::vector<CensusRecord>& rows) {
  std::string out = csv_header() + "\n";
  for (const auto& r : rows) out += to_csv(r) + "\n" + to_jsonl(r) + "\n";
  return out;
}

}  // namespace

TEST_CASE("class names") {
  CHECK(parse_census_class("zsss") == CensusClass::ZStarStarStar);
  CHECK(census_class_name(CensusClass::Adjoined) == "adj");
  CHECK_THROWS_AS(parse_census_class("q"), Error);
}

TEST_CASE("row counts") {
  CHECK(run(CensusClass::Z, 3, 3).size() == 2);
  const auto z5 = run(CensusClass::Z, 5, 5);
  CHECK(z5.size() == 10);  // 12 pairs of Z*(5) less (2,4) and (4,2)
  for (const auto& r : z5) CHECK_FALSE(flag(r, "sg"));
  for (unsigned n = 3; n <= 12; ++n) CHECK(run(CensusClass::ZStar, n, n).size() == (n - 1) * (n - 2));
  std::size_t diag = 0;
  for (const auto& r : run(CensusClass::ZStarStar, 6, 6)) {
    if (r.spec.t != r.spec.u) continue;
    ++diag;
    CHECK(flag(r, "commutative"));
  }
  CHECK(diag == 5);
  CHECK(run(CensusClass::Adjoined, 4, 4).size() == 15);
}

TEST_CASE("rows are ordered by n, t, u") {
  const auto rows = run(CensusClass::ZStarStarStar, 3, 5, 4);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& a = rows[i - 1].spec;
    const auto& b = rows[i].spec;
    CHECK(std::tie(a.n, a.t, a.u) < std::tie(b.n, b.t, b.u));
  }
}

TEST_CASE("columns") {
  const auto rows = run(CensusClass::Z, 6, 6);
  for (const auto& r : rows) {
    CHECK(r.cells.size() == census_columns().size());
    for (std::size_t i = 0; i < r.cells.size(); ++i) CHECK(r.cells[i].first == census_columns()[i]);
    CHECK(flag(r, "agree_semigroup"));
    CHECK(flag(r, "agree_idempotent"));
    CHECK(flag(r, "sg") == smarandache_witness(build_zn(r.spec)).has_value());
  }
  CHECK(rows.front().get("no_such_column") == nullptr);
  for (const auto& r : run(CensusClass::Adjoined, 3, 8)) {
    CHECK(flag(r, "agree_adj_right_alt"));
    CHECK(flag(r, "agree_adj_left_alt"));
    CHECK(std::holds_alternative<std::monostate>(*r.get("agree_semigroup")));
  }
}

TEST_CASE("subset columns degrade above the bound") {
  const auto rows = run(CensusClass::Z, 5, 5, 1, 4);
  for (const auto& r : rows) {
    CHECK(std::holds_alternative<std::monostate>(*r.get("closed_subsets")));
    CHECK(to_csv(r).find(",NA,") != std::string::npos);
    const auto j = nlohmann::json::parse(to_jsonl(r));
    CHECK(j["closed_subsets"].is_null());
    CHECK(j["spec"] == format_spec(r.spec));
  }
}

TEST_CASE("census is byte-identical across runs and thread counts") {
  const auto a = dump(run(CensusClass::ZStarStarStar, 3, 9, 1));
  const auto b = dump(run(CensusClass::ZStarStarStar, 3, 9, 8));
  const auto c = dump(run(CensusClass::ZStarStarStar, 3, 9, 3));
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("census respects the enumeration bound") {
  try {
    run(CensusClass::Z, 3, 30);
    FAIL("expected BOUND_EXCEEDED");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundExceeded);
  }
  CHECK_THROWS_AS(run(CensusClass::Z, 6, 5), Error);
}
