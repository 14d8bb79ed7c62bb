#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "magma/error.hpp"
#include "magma/fixtures.hpp"
#include "magma/substructures.hpp"
#include "magma/zn.hpp"
#include "support.hpp"

using namespace magma;
using testing_support::bits;
using testing_support::each_zsss;
using testing_support::tab;

namespace {

std::vector<std::uint64_t> sorted(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool has(const ClosedSetFamily& f, const SubsetMask& s) {
  return std::find(f.members.begin(), f.members.end(), s) != f.members.end();
}

}  // namespace

TEST_CASE("subset masks") {
  const SubsetMask s(6, {0, 2, 4});
  CHECK(s.to_string() == "{0,2,4}");
  CHECK(parse_subset("{0,2,4}", 6) == s);
  CHECK(parse_subset("0,2,4", 6) == s);
  CHECK(parse_subset("{}", 6).empty());
  CHECK_THROWS_AS(parse_subset("{0,9}", 6), Error);
  CHECK(s.count() == 3);
  CHECK(s.is_proper_subset_of(SubsetMask::full(6)));
  CHECK((s & SubsetMask(6, {2, 3})) == SubsetMask(6, {2}));
}

TEST_CASE("generated closure") {
  const auto m = build_zn({8, 2, 6});
  const auto c = generated_closure(m, SubsetMask(8, {2}));
  CHECK(is_closed(m, c));
  CHECK(c.contains(2));
  // Smallest closed superset: every closed set containing {2} contains it.
  for (std::uint64_t s = 1; s < 256; ++s) {
    const auto cand = SubsetMask::from_bits(8, s);
    if (cand.contains(2) && is_closed(m, cand)) CHECK(c.is_subset_of(cand));
  }
  CHECK(generated_closure(m, m.full_set()).is_full());
  CHECK(generated_closure(build_zn({6, 1, 3}), SubsetMask(6, {0, 3})) == SubsetMask(6, {0, 3}));
}

TEST_CASE("closed-set enumeration equals the 2^n scan on Z***(n), n <= 10") {
  each_zsss(3, 10, [](unsigned n, unsigned t, unsigned u) {
    const auto m = build_zn({n, t, u});
    const auto fam = enumerate_closed(m);
    CHECK(fam.complete);
    CHECK_MESSAGE(sorted(bits(fam.members)) == oracle::closed_subsets(tab(m)), n, ":", t, ":", u);
  });
}

TEST_CASE("printed closed sets") {
  CHECK(has(enumerate_closed(build_zn({6, 2, 4})), SubsetMask(6, {0, 2, 4})));
  const auto z12 = enumerate_closed(build_zn({12, 10, 8}));
  CHECK(has(z12, SubsetMask(12, {0, 4, 8})));
  CHECK_FALSE(has(z12, SubsetMask(12, {2, 6, 10})));  // 2*2 = 0
  const auto z5 = enumerate_closed(build_zn({5, 2, 4})).members;
  const std::vector<SubsetMask> singles{SubsetMask(5, {4}), SubsetMask(5, {3}), SubsetMask(5, {2}),
                                        SubsetMask(5, {1}), SubsetMask(5, {0})};
  CHECK(sorted(bits(z5)) == sorted(bits(singles)));
  CHECK(has(enumerate_closed(build_zn({12, 2, 10})), SubsetMask(12, {0, 2, 4, 6, 8, 10})));
  CHECK(has(enumerate_closed(build_zn({12, 3, 9})), SubsetMask(12, {0, 3, 6, 9})));
  CHECK(has(enumerate_closed(build_zn({12, 4, 8})), SubsetMask(12, {0, 4, 8})));
  // Frozen from enumeration.
  CHECK(enumerate_closed(build_zn({12, 1, 4})).members.size() == 29);
  CHECK(enumerate_closed(build_zn({10, 8, 4})).members.size() == 33);
}

TEST_CASE("improper enumeration adds the carrier") {
  const auto m = build_zn({6, 2, 4});
  CHECK(enumerate_closed(m, true).members.size() == enumerate_closed(m).members.size() + 1);
}

TEST_CASE("enumeration bound") {
  const auto big = build_zn({26, 1, 3});
  CHECK_THROWS_AS(enumerate_closed(big), Error);
  try {
    enumerate_closed(big);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderTooLarge);
  }
  CHECK(enumerate_closed(big, false, 26).complete);
  const auto capped = enumerate_closed(build_zn({12, 1, 4}), false, 24, 5);
  CHECK_FALSE(capped.complete);
  CHECK(capped.members.size() == 5);
  CHECK_FALSE(capped.bound_hit.empty());
}

TEST_CASE("subsemigroups") {
  const auto m = build_zn({6, 4, 5});
  CHECK(has(enumerate_subsemigroups(m), SubsetMask(6, {3})));
  CHECK(has(enumerate_subsemigroups(build_zn({10, 1, 5})), SubsetMask(10, {0, 5})));
  CHECK(enumerate_subsemigroups(build_zn({5, 1, 3})).members.empty());
  // The trivial {0} only appears when the policy keeps it.
  const auto z = build_zn({6, 1, 5});
  CHECK_FALSE(has(enumerate_subsemigroups(z), SubsetMask(6, {0})));
  CHECK(has(enumerate_subsemigroups(z, SPolicy{false, 1}), SubsetMask(6, {0})));
  for (const auto& s : enumerate_subsemigroups(z, SPolicy{true, 2}).members) CHECK(s.count() >= 2);
  each_zsss(3, 8, [](unsigned n, unsigned t, unsigned u) {
    const auto mm = build_zn({n, t, u});
    const auto g = tab(mm);
    std::vector<std::uint64_t> want;
    for (auto s : oracle::closed_subsets(g))
      if (oracle::associative(g, s) && s != 1u) want.push_back(s);
    CHECK(sorted(bits(enumerate_subsemigroups(mm).members)) == want);
  });
}

TEST_CASE("ideals agree with the oracle") {
  each_zsss(3, 8, [](unsigned n, unsigned t, unsigned u) {
    const auto m = build_zn({n, t, u});
    const auto g = tab(m);
    std::vector<std::uint64_t> left, right;
    for (auto s : oracle::closed_subsets(g)) {
      if (oracle::left_ideal(g, s)) left.push_back(s);
      if (oracle::right_ideal(g, s)) right.push_back(s);
    }
    CHECK(sorted(bits(enumerate_ideals(m, IdealSide::Left).members)) == left);
    CHECK(sorted(bits(enumerate_ideals(m, IdealSide::Right).members)) == right);
  });
  const auto m = build_zn({6, 4, 5});
  CHECK_THROWS_AS(is_ideal(m, SubsetMask(6, {1, 2}), IdealSide::Left), Error);
  const auto v = is_ideal(m, SubsetMask(6, {1, 3, 5}), IdealSide::Right);
  CHECK_FALSE(v.holds);
  REQUIRE(v.escape);
  CHECK_FALSE(SubsetMask(6, {1, 3, 5}).contains(m.at(v.escape->second, v.escape->first)));
}

TEST_CASE("printed ideal examples") {
  const auto a = load_magma_fixture("ex_3_1_4_a");
  CHECK(is_ideal(a, SubsetMask(4, {0, 2}), IdealSide::Left).holds);
  CHECK_FALSE(is_ideal(a, SubsetMask(4, {0, 2}), IdealSide::Right).holds);
}

TEST_CASE("normal subgroupoids and simplicity") {
  CHECK(is_normal_subgroupoid(build_zn({6, 2, 4}), SubsetMask(6, {0, 2, 4})).holds);
  CHECK(is_normal_subgroupoid(build_zn({5, 2, 3}), SubsetMask(5, {0})).holds);
  const auto z7 = build_zn({7, 3, 4});
  for (const auto& v : enumerate_closed(z7).members) {
    if (v == SubsetMask(7, {0})) continue;
    CHECK_FALSE(is_normal_subgroupoid(z7, v).holds);
  }
  CHECK(is_simple(z7).simple);
  CHECK(is_normal_groupoid(z7).holds);
  const auto z10 = build_zn({10, 1, 2});
  CHECK_FALSE(is_normal_groupoid(z10).holds);
  CHECK(left_multiple(z10, 1, z10.full_set()) == SubsetMask(10, {1, 3, 5, 7, 9}));
  CHECK(right_multiple(z10, z10.full_set(), 1).is_full());
  // The two quantifier scopes can disagree.
  const auto z8 = build_zn({8, 3, 5});
  CHECK(is_normal_subgroupoid(z8, SubsetMask(8, {0, 4}), NormalityScope::LiteralV).holds);
  CHECK_FALSE(is_normal_subgroupoid(z8, SubsetMask(8, {0, 4}), NormalityScope::OverG).holds);
  CHECK_THROWS_AS(is_normal_subgroupoid(z8, z8.full_set()), Error);
}

TEST_CASE("conjugate subgroupoids") {
  const auto m = build_zn({12, 1, 3});
  const SubsetMask k(12, {0, 3, 6, 9});
  const SubsetMask h(12, {2, 5, 8, 11});
  const auto v = are_conjugate_subgroupoids(m, k, h);
  CHECK(v.holds);
  for (const auto& e : v.evidence) {
    CHECK((e.side == Side::Left ? left_multiple(m, e.x, h) : right_multiple(m, h, e.x)) == k);
  }
  try {
    are_conjugate_subgroupoids(m, k, k);
    FAIL("expected NOT_DISJOINT");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDisjoint);
  }
}

TEST_CASE("inner commutativity") {
  const auto r = is_inner_commutative(build_zn({12, 1, 4}));
  CHECK_FALSE(r.holds);
  REQUIRE(r.offender);
  CHECK_FALSE(check_commutative(build_zn({12, 1, 4}), *r.offender).holds);
  CHECK(is_inner_commutative(build_zn({7, 3, 3})).holds);
  const auto g = load_magma_fixture("ex_4_2_9");
  CHECK_FALSE(is_inner_commutative(g).holds);
}

TEST_CASE("closure-system law on every complete enumeration, n <= 10") {
  each_zsss(3, 10, [](unsigned n, unsigned t, unsigned u) {
    const auto m = build_zn({n, t, u});
    const auto fam = enumerate_closed(m).members;
    for (std::size_t i = 0; i < fam.size(); ++i) {
      for (std::size_t j = i + 1; j < fam.size(); ++j) {
        const auto meet = fam[i] & fam[j];
        if (!meet.empty()) CHECK(std::find(fam.begin(), fam.end(), meet) != fam.end());
      }
    }
  });
}

TEST_CASE("left ideals of Z_n(t,u) are the right ideals of Z_n(u,t), n <= 10") {
  for (unsigned n = 3; n <= 10; ++n) {
    for (auto [t, u] : enumerate_class(n, ClassTag::Z)) {
      CHECK(enumerate_ideals(build_zn({n, t, u}), IdealSide::Left).members ==
            enumerate_ideals(build_zn({n, u, t}), IdealSide::Right).members);
    }
  }
}
