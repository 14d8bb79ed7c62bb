#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "magma/error.hpp"
#include "magma/magma.hpp"
#include "magma/zn.hpp"
#include "support.hpp"

using namespace magma;
using testing_support::each_zsss;
using testing_support::tab;

namespace {

template <class Fn>
ErrorCode code_of(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("build_table validates shape and entries") {
  CHECK(code_of([] { build_table(2, {0, 1, 1}); }) == ErrorCode::LengthMismatch);
  CHECK(code_of([] { build_table(2, {0, 1, 1, 2}); }) == ErrorCode::EntryOutOfRange);
  CHECK(code_of([] { build_table({{0, 1}, {1}}); }) == ErrorCode::LengthMismatch);
  CHECK(code_of([] { build_table(2, {0, 1, 1, 0}, {"a", "a"}); }) == ErrorCode::InvalidSpec);
  const auto m = build_table({{0, 1}, {1, 0}}, {"x", "y"});
  CHECK(m.order() == 2);
  CHECK(m.label(1) == "y");
  CHECK(code_of([&] { product(m, 2, 0); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("text round trip keeps table and labels") {
  const auto m = build_zn({6, 4, 5, true});
  const auto back = parse_text(to_text(m));
  CHECK(back.table() == m.table());
  CHECK(back.labels() == m.labels());
  CHECK(code_of([] { parse_text(""); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_text("2\n0 1\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_text("2\n0 x\n1 0\n"); }) == ErrorCode::ParseError);
}

TEST_CASE("commutativity and associativity agree with the oracle on Z***(n), n <= 9") {
  each_zsss(3, 9, [](unsigned n, unsigned t, unsigned u) {
    const auto m = build_zn({n, t, u});
    const auto g = tab(m);
    const auto all = oracle::full(n);
    CHECK(check_commutative(m).holds == oracle::commutative(g, all));
    CHECK(check_associative(m).holds == oracle::associative(g, all));
    const auto a = check_associative(m);
    if (!a.holds) {
      const auto& w = *a.witness;
      CHECK(m.at(m.at(w.elems[0], w.elems[1]), w.elems[2]) == w.lhs);
      CHECK(m.at(w.elems[0], m.at(w.elems[1], w.elems[2])) == w.rhs);
      CHECK(w.lhs != w.rhs);
    }
  });
}

TEST_CASE("basic report on Z_n(t,u)") {
  // t + u = 1 makes every element idempotent.
  const auto idem = basic_report(build_zn({7, 3, 5}));
  CHECK(idem.idempotent_groupoid);
  CHECK(idem.idempotents.size() == 7);
  const auto adj = basic_report(build_zn({5, 2, 3, true}));
  CHECK(adj.two_sided_identities == std::vector<Element>{5});
  CHECK(adj.idempotents == std::vector<Element>{5});
}

TEST_CASE("center and zero divisors") {
  // Z_6(3,3) is commutative, so everything is central.
  CHECK(center(build_zn({6, 3, 3})).is_full());
  const auto m = build_zn({6, 2, 4});
  const auto zd = zero_divisor_report(m, 0);
  CHECK(std::find(zd.right.begin(), zd.right.end(), 0u) == zd.right.end());
  for (Element a : zd.right) {
    bool found = false;
    for (Element b = 1; b < 6; ++b) found = found || m.at(a, b) == 0;
    CHECK(found);
  }
}

TEST_CASE("conjugate pairs carry valid multipliers") {
  const auto m = build_zn({6, 1, 2});
  for (const auto& p : conjugate_pairs(m)) {
    CHECK(p.a == (p.a_side == Side::Right ? m.at(p.b, p.x) : m.at(p.x, p.b)));
    CHECK(p.b == (p.b_side == Side::Right ? m.at(p.a, p.y) : m.at(p.y, p.a)));
  }
}

TEST_CASE("loops from build_loop") {
  for (unsigned n : {5u, 7u, 9u, 11u}) {
    for (unsigned mm = 1; mm < n; ++mm) {
      if (!loop_params_valid(n, mm)) continue;
      const auto l = build_loop(n, mm);
      const auto v = is_loop(l);
      CHECK_MESSAGE(v.holds, n, ":", mm, " ", v.reason);
      CHECK(v.identity == Element{n});
    }
  }
  CHECK(is_loop(build_loop(5, 2)).holds);
  CHECK(is_loop(build_loop(5, 3)).holds);
  CHECK(code_of([] { build_loop(6, 2); }) == ErrorCode::InvalidLoopParams);
  CHECK_FALSE(is_loop(build_zn({5, 2, 3})).holds);
}

TEST_CASE("direct products") {
  const auto a = build_zn({3, 2, 1});
  const auto b = build_zn({4, 1, 3});
  const auto p = direct_product({a, b});
  CHECK(p.order() == 12);
  const std::vector<std::size_t> orders{3, 4};
  // (1,0)*(0,1) = (2,3)
  const auto prod = p.at(encode_tuple(orders, {1, 0}), encode_tuple(orders, {0, 1}));
  CHECK(decode_tuple(orders, prod) == std::vector<Element>{2, 3});
  CHECK(direct_product({build_zn({6, 4, 5}), build_zn({4, 2, 3})}).order() == 24);
  const auto one = build_table(1, {0});
  CHECK(are_isomorphic(direct_product({one, a}), a).isomorphic);
  CHECK(code_of([&] { direct_product({a}); }) == ErrorCode::InvalidSpec);
  CHECK(code_of([&] { direct_product({a, b, b, b}, 100); }) == ErrorCode::ProductOrderOverflow);
}

TEST_CASE("isomorphism search") {
  const auto m = build_zn({3, 1, 2});
  const auto self = are_isomorphic(m, m);
  CHECK(self.isomorphic);
  std::vector<Element> id(3);
  std::iota(id.begin(), id.end(), 0u);
  CHECK(self.bijection == id);
  // Oracle: try all six bijections of Z_3(1,2) onto Z_3(2,1).
  const auto n = build_zn({3, 2, 1});
  std::vector<Element> perm{0, 1, 2};
  bool any = false;
  do {
    bool ok = true;
    for (Element x = 0; x < 3; ++x)
      for (Element y = 0; y < 3; ++y) ok = ok && perm[m.at(x, y)] == n.at(perm[x], perm[y]);
    any = any || ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(are_isomorphic(m, n).isomorphic == any);
  CHECK(code_of([&] { are_isomorphic(m, build_zn({4, 1, 3})); }) == ErrorCode::OrderMismatch);
}

TEST_CASE("transpose swaps operands") {
  const auto m = build_zn({7, 2, 5});
  CHECK(transpose(m).table() == build_zn({7, 5, 2}).table());
}
