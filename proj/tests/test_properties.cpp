#include <doctest.h>

#include "properties.hpp"

namespace {

void require_clean(const props::Result& r) {
  CHECK(r.cases > 0);
  CHECK_MESSAGE(r.violations == 0, r.violations, " violations, first: ", r.first);
}

}  // namespace

TEST_CASE("run_free ignores bracketing") {
  const auto r = props::tree_shape_invariance();
  CHECK(r.cases == props::machines().size() * props::kSamples);
  require_clean(r);
}

TEST_CASE("run_semi respects concatenation") { require_clean(props::concatenation_law()); }

TEST_CASE("emitted witnesses replay") { require_clean(props::witness_replay()); }

TEST_CASE("closed families are closed under intersection") { require_clean(props::closure_intersection()); }

TEST_CASE("transpose swaps left and right") { require_clean(props::transpose_duality()); }

TEST_CASE("a different seed also passes") {
  require_clean(props::tree_shape_invariance(7));
  require_clean(props::concatenation_law(7));
}
