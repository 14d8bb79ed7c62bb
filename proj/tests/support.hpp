#pragma once

#include <cstdint>
#include <vector>

#include "magma/magma.hpp"
#include "magma/zn.hpp"
#include "oracles.hpp"

namespace testing_support {

inline oracle::Tab tab(const magma::FiniteMagma& m) {
  oracle::Tab g{static_cast<unsigned>(m.order()), {}};
  for (auto x : m.table()) g.v.push_back(x);
  return g;
}

inline std::vector<std::uint64_t> bits(const std::vector<magma::SubsetMask>& family) {
  std::vector<std::uint64_t> out;
  for (const auto& s : family) out.push_back(s.bits());
  return out;
}

/// Every (n, t, u) of Z***(n) for n in [lo, hi].
template <class Fn>
void each_zsss(unsigned lo, unsigned hi, Fn fn) {
  for (unsigned n = lo; n <= hi; ++n)
    for (auto [t, u] : magma::enumerate_class(n, magma::ClassTag::ZStarStarStar)) fn(n, t, u);
}

}  // namespace testing_support
