#include <doctest.h>

#include "magma/error.hpp"
#include "magma/fixtures.hpp"
#include "magma/identities.hpp"
#include "magma/zn.hpp"
#include "support.hpp"

using namespace magma;
using testing_support::each_zsss;
using testing_support::tab;

namespace {

oracle::Law to_oracle(LawId law) {
  switch (law) {
    case LawId::Moufang: return oracle::Law::Moufang;
    case LawId::Bol: return oracle::Law::Bol;
    case LawId::P: return oracle::Law::P;
    case LawId::LeftAlt: return oracle::Law::LeftAlt;
    case LawId::RightAlt: return oracle::Law::RightAlt;
    case LawId::Alternative: return oracle::Law::Alternative;
  }
  return oracle::Law::P;
}

}  // namespace

TEST_CASE("law names round trip") {
  for (LawId law : kAllLaws) CHECK(parse_law(law_name(law)) == law);
  CHECK(law_arity(LawId::Bol) == 3);
  CHECK(law_arity(LawId::P) == 2);
  CHECK_THROWS_AS(parse_law("jordan"), Error);
}

TEST_CASE("every law agrees with the oracle on Z***(n), n <= 8, plain and adjoined") {
  each_zsss(3, 8, [](unsigned n, unsigned t, unsigned u) {
    for (bool adj : {false, true}) {
      const auto m = build_zn({n, t, u, adj});
      const auto g = tab(m);
      for (LawId law : kAllLaws) {
        const auto r = check_law(m, law);
        CHECK_MESSAGE(r.holds == oracle::law(g, to_oracle(law), oracle::full(g.n)), n, ":", t, ":", u,
                      (adj ? "+e " : " "), law_name(law));
        if (!r.holds) CHECK(replay_witness(m, law, *r.witness));
      }
    }
  });
}

TEST_CASE("laws restricted to a subset agree with the oracle") {
  const auto m = build_zn({12, 3, 9});
  const auto g = tab(m);
  for (const auto& s : {SubsetMask(12, {0, 4, 8}), SubsetMask(12, {0, 3, 6, 9}), SubsetMask(12, {1, 2, 5})}) {
    for (LawId law : kAllLaws) {
      CHECK(check_law(m, law, s).holds == oracle::law(g, to_oracle(law), s.bits()));
    }
  }
}

TEST_CASE("printed law examples") {
  auto full = [](unsigned n, unsigned t, unsigned u, LawId law) {
    return check_law(build_zn({n, t, u}), law);
  };
  const auto mou = full(10, 5, 6, LawId::Moufang);
  CHECK(mou.holds);
  CHECK(mou.checked == 1000);
  const auto bol = full(12, 3, 4, LawId::Bol);
  CHECK(bol.holds);
  CHECK(bol.checked == 1728);
  const auto p = full(6, 4, 3, LawId::P);
  CHECK(p.holds);
  CHECK(p.checked == 36);
  CHECK(full(14, 7, 8, LawId::Alternative).holds);
  CHECK(full(14, 7, 8, LawId::LeftAlt).holds);
  CHECK(full(14, 7, 8, LawId::RightAlt).holds);

  const auto m = build_zn({4, 2, 3});
  const auto fails = check_law(m, LawId::Bol);
  REQUIRE_FALSE(fails.holds);
  CHECK(replay_witness(m, LawId::Bol, *fails.witness));
  CHECK(check_law(m, LawId::Bol, SubsetMask(4, {0, 2})).holds);
}

TEST_CASE("the printed Moufang counterexample") {
  const auto m = load_magma_fixture("ex_2_1_1");
  CHECK_FALSE(check_law(m, LawId::Moufang).holds);
  const auto [lhs, rhs] = evaluate_law(m, LawId::Moufang, {1, 3, 2});
  CHECK(lhs == 3);
  CHECK(rhs == 1);
}

TEST_CASE("witness replay rejects a tampered witness") {
  const auto m = build_zn({4, 2, 3});
  auto w = *check_law(m, LawId::Bol).witness;
  w.rhs = w.lhs;
  CHECK_FALSE(replay_witness(m, LawId::Bol, w));
}

TEST_CASE("degenerate tuples on adjoined magmas") {
  const auto m = build_zn({6, 5, 3, true});
  const auto nd = check_law(m, LawId::RightAlt, std::nullopt, true);
  CHECK(nd.holds);
  CHECK(nd.checked > 0);
  CHECK(nd.degenerate_skipped > 0);
  // Full-domain left alternative on 6:4:5+e fails first at (1,3).
  const auto full = check_law(build_zn({6, 4, 5, true}), LawId::LeftAlt);
  REQUIRE_FALSE(full.holds);
  CHECK(full.witness->elems[0] == 1);
  CHECK(full.witness->elems[1] == 3);
  // Skipping changes nothing on a magma without an adjoined identity.
  const auto plain = build_zn({7, 2, 3});
  CHECK(check_law(plain, LawId::Bol, std::nullopt, true).checked == check_law(plain, LawId::Bol).checked);
}
