#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "magma/magma.hpp"

namespace magma {

inline constexpr std::size_t kDefaultEnumerationBound = 24;
inline constexpr std::size_t kDefaultMemberCap = std::size_t{1} << 22;

/// Largest order accepted by subset enumeration: MAGMA_MAX_ORDER when set
/// to a number in [1, 64], otherwise 24.
std::size_t enumeration_bound();

/// Which subsets count as semigroup witnesses.
struct SPolicy {
  bool exclude_trivial_zero = true;  // drop {designated_zero}
  std::size_t min_subset_size = 1;
};

struct ClosedSetFamily {
  std::size_t order = 0;
  std::vector<SubsetMask> members;  // in next-closure (lectic) order
  bool complete = true;
  std::string bound_hit;  // why the listing stopped early
};

enum class IdealSide { Left, Right, TwoSided };
std::string_view ideal_side_name(IdealSide side);

/// Range of the quantifiers in the normal-subgroupoid conditions.
enum class NormalityScope { LiteralV, OverG };
std::string_view scope_name(NormalityScope scope);

/// Where a conjugating multiplier may come from.
enum class ConjugateScope { InH, InG };

void require_subset(const FiniteMagma& m, const SubsetMask& s);

SubsetMask generated_closure(const FiniteMagma& m, const SubsetMask& seed);
bool is_closed(const FiniteMagma& m, const SubsetMask& s);
/// S = {designated_zero}; never true when the magma has no designated zero.
bool is_trivial(const FiniteMagma& m, const SubsetMask& s);

/// x*S, S*x and A*B as sets.
SubsetMask left_multiple(const FiniteMagma& m, Element x, const SubsetMask& s);
SubsetMask right_multiple(const FiniteMagma& m, const SubsetMask& s, Element x);
SubsetMask set_product(const FiniteMagma& m, const SubsetMask& a, const SubsetMask& b);

/// All nonempty closed subsets (proper unless include_improper).
ClosedSetFamily enumerate_closed(const FiniteMagma& m, bool include_improper = false,
                                 std::size_t max_order = enumeration_bound(),
                                 std::size_t member_cap = kDefaultMemberCap);

/// Proper, nonempty, closed, associative, at least min_subset_size elements
/// and not the trivial {0} when the policy excludes it.
bool is_semigroup_witness(const FiniteMagma& m, const SubsetMask& s, const SPolicy& policy = {});

/// Closed proper subsets on which the product is associative, filtered by
/// the policy.
ClosedSetFamily enumerate_subsemigroups(const FiniteMagma& m, const SPolicy& policy = {},
                                        std::size_t max_order = enumeration_bound());

struct IdealVerdict {
  bool holds = true;
  /// (x, a) with a in S and x*a (Left) or a*x (Right) outside S.
  std::optional<std::pair<Element, Element>> escape;
  Side escape_side = Side::Left;
};

/// S must be a nonempty proper closed subset.
IdealVerdict is_ideal(const FiniteMagma& m, const SubsetMask& s, IdealSide side);
ClosedSetFamily enumerate_ideals(const FiniteMagma& m, IdealSide side, std::size_t max_order = enumeration_bound());

struct NormalVerdict {
  bool holds = true;
  std::string failing_condition;  // "aV=Va", "(Vx)y=V(xy)", "y(xV)=(yx)V" and the G analogues
  std::optional<Element> x;
  std::optional<Element> y;
};

NormalVerdict is_normal_subgroupoid(const FiniteMagma& m, const SubsetMask& v,
                                    NormalityScope scope = NormalityScope::LiteralV);
NormalVerdict is_normal_groupoid(const FiniteMagma& m);

struct SimpleVerdict {
  bool simple = true;
  std::optional<SubsetMask> normal_subgroupoid;  // first nontrivial one found
};

/// No nontrivial proper normal subgroupoid under the given scope.
SimpleVerdict is_simple(const FiniteMagma& m, NormalityScope scope = NormalityScope::LiteralV);

struct Multiplier {
  Element x = 0;
  Side side = Side::Left;
  bool operator==(const Multiplier&) const = default;
};

struct ConjugacyVerdict {
  bool holds = false;
  std::vector<Multiplier> evidence;  // every x, side with H = xK (Left) or Kx (Right)
};

/// H, K closed and disjoint; x ranges over H or over G.
ConjugacyVerdict are_conjugate_subgroupoids(const FiniteMagma& m, const SubsetMask& h, const SubsetMask& k,
                                            ConjugateScope scope = ConjugateScope::InH);

struct InnerCommutativity {
  bool holds = true;
  std::optional<SubsetMask> offender;
  std::optional<Witness> witness;
};

InnerCommutativity is_inner_commutative(const FiniteMagma& m, std::size_t max_order = enumeration_bound());

}  // namespace magma
