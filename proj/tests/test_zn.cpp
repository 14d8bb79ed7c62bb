#include <doctest.h>

#include "magma/error.hpp"
#include "magma/zn.hpp"
#include "support.hpp"

using namespace magma;
using testing_support::tab;

TEST_CASE("build_zn matches the formula") {
  for (unsigned n = 3; n <= 9; ++n) {
    for (auto [t, u] : enumerate_class(n, ClassTag::ZStarStarStar)) {
      CHECK(tab(build_zn({n, t, u})).v == oracle::zn(n, t, u).v);
      CHECK(tab(build_zn({n, t, u, true})).v == oracle::zn_adjoined(n, t, u).v);
    }
  }
  const auto m = build_zn({5, 2, 3});
  CHECK(m.designated_zero() == Element{0});
  CHECK_FALSE(m.adjoined_identity());
  CHECK(build_zn({5, 2, 3, true}).adjoined_identity() == Element{5});
}

TEST_CASE("class tags") {
  CHECK(classify_pair(8, 2, 6) == ClassTag::ZStar);
  CHECK(classify_pair(6, 3, 3) == ClassTag::ZStarStar);
  CHECK(classify_pair(6, 3, 0) == ClassTag::ZStarStarStar);
  CHECK(classify_pair(7, 3, 4) == ClassTag::Z);
  CHECK(classify_pair(6, 0, 0) == ClassTag::None);
  CHECK(in_class(7, 3, 4, ClassTag::ZStarStarStar));
  CHECK_FALSE(in_class(6, 3, 3, ClassTag::ZStar));
}

TEST_CASE("class sizes") {
  CHECK(class_size(5, ClassTag::ZStar) == 12);
  CHECK(class_size(5, ClassTag::ZStarStar) == 16);
  CHECK(class_size(3, ClassTag::Z) == 2);
  for (unsigned n = 3; n <= 16; ++n) {
    CHECK(class_size(n, ClassTag::Z) == oracle::count_z(n));
    CHECK(class_size(n, ClassTag::ZStar) == (n - 1) * (n - 2));
    CHECK(class_size(n, ClassTag::ZStarStar) == (n - 1) * (n - 1));
    CHECK(class_size(n, ClassTag::ZStarStarStar) == n * n - 1);
  }
  // Frozen from enumeration: gcd removes (2,4) and (4,2) from Z*(5).
  CHECK(class_size(5, ClassTag::Z) == 10);
}

TEST_CASE("enumerate_class orders by t then u") {
  const auto pairs = enumerate_class(4, ClassTag::Z);
  const std::vector<std::pair<unsigned, unsigned>> want{{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}};
  CHECK(pairs == want);
}

TEST_CASE("spec parsing") {
  CHECK(parse_spec("12:3:9") == ZnSpec{12, 3, 9, false});
  CHECK(parse_spec("6:5:3+e") == ZnSpec{6, 5, 3, true});
  CHECK(format_spec({6, 5, 3, true}) == "6:5:3+e");
  for (const char* bad : {"", "3:1", "3:1:5", "2:1:1", "5:0:0", "a:b:c", "5:1:2:3"}) {
    CHECK_THROWS_AS(parse_spec(bad), Error);
  }
}

TEST_CASE("predicted flags follow the congruences") {
  const auto f = predicted_flags(12, 4, 9);
  CHECK(f.semigroup);  // 16 = 4, 81 = 9 (mod 12)
  CHECK(f.residues.t2 == 4);
  CHECK(f.residues.u2 == 9);
  CHECK_FALSE(predicted_flags(7, 3, 4).semigroup);
  CHECK(predicted_flags(7, 3, 5).idempotent_groupoid);
  const auto adj = predicted_flags(6, 5, 3, true);
  CHECK(adj.adjoined_right_alt);  // 25 = 1, 15 + 3 = 0 (mod 6)
  CHECK_FALSE(adj.semigroup);
}

TEST_CASE("semigroup predictor equals brute force over Z(n), 3 <= n <= 12") {
  std::size_t magmas = 0;
  for (unsigned n = 3; n <= 12; ++n) {
    for (auto [t, u] : enumerate_class(n, ClassTag::Z)) {
      ++magmas;
      const bool brute = oracle::associative(oracle::zn(n, t, u), oracle::full(n));
      CHECK_MESSAGE(predicted_flags(n, t, u).semigroup == brute, n, ":", t, ":", u);
    }
  }
  CHECK(magmas == 332);
}
