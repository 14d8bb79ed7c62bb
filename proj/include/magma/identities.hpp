#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "magma/magma.hpp"

namespace magma {

enum class LawId { Moufang, Bol, P, LeftAlt, RightAlt, Alternative };

inline constexpr std::array<LawId, 6> kAllLaws = {LawId::Moufang, LawId::Bol,      LawId::P,
                                                  LawId::LeftAlt, LawId::RightAlt, LawId::Alternative};

/// Short names: moufang, bol, p, lalt, ralt, alt.
std::string_view law_name(LawId law);
LawId parse_law(std::string_view name);
/// 3 for Moufang and Bol, 2 otherwise.
std::size_t law_arity(LawId law);

struct LawReport {
  LawId law = LawId::Moufang;
  std::optional<SubsetMask> domain;  // absent means the whole carrier
  bool holds = true;
  std::optional<Witness> witness;
  std::size_t checked = 0;  // tuples counted toward the verdict
  /// Only filled when degenerate tuples are skipped on an adjoined-identity
  /// magma: how many were set aside and which of them fail.
  std::size_t degenerate_skipped = 0;
  std::size_t degenerate_failures = 0;
  std::vector<Witness> degenerate_witnesses;
};

inline constexpr std::size_t kMaxListedDegenerate = 32;

/// Exhaustive check of `law` over the domain in lexicographic tuple order.
///
/// With skip_degenerate on a magma that has an adjoined identity e, a tuple
/// is set aside when a variable is e, or when some product of two
/// syntactically different subterms multiplies equal values (the a*a = e
/// branch) or meets an e that does not come from a written square.
LawReport check_law(const FiniteMagma& m, LawId law, const std::optional<SubsetMask>& domain = std::nullopt,
                    bool skip_degenerate = false);

/// Both sides of the law at the given elements (arity taken from the law).
/// For the alternative law the failing half is reported, right first.
std::pair<Element, Element> evaluate_law(const FiniteMagma& m, LawId law, const std::array<Element, 3>& elems);

/// True iff the witness re-evaluates to its recorded, differing sides.
bool replay_witness(const FiniteMagma& m, LawId law, const Witness& w);

}  // namespace magma
