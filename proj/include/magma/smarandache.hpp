#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "magma/identities.hpp"
#include "magma/magma.hpp"
#include "magma/substructures.hpp"

namespace magma {

struct SgWitness {
  SubsetMask subset;
  bool is_trivial = false;
  bool commutative = false;
  /// The whole magma is already associative.
  bool degenerate_sg = false;
};

/// Smallest qualifying semigroup subset (ties broken by the sorted element
/// list), or nothing. Singletons, then pairs, then a full closed-set sweep;
/// only the sweep is limited by the enumeration bound (ORDER_TOO_LARGE).
std::optional<SgWitness> smarandache_witness(const FiniteMagma& m, const SPolicy& policy = {},
                                             std::size_t max_order = enumeration_bound());

/// H proper and closed with a qualifying semigroup K properly inside it.
bool is_s_subgroupoid(const FiniteMagma& m, const SubsetMask& h, const SPolicy& policy = {});
ClosedSetFamily s_subgroupoids(const FiniteMagma& m, const SPolicy& policy = {},
                               std::size_t max_order = enumeration_bound());

/// S-subgroupoid that is also an ideal on the given side. Throws NOT_CLOSED
/// for a non-closed A.
bool s_ideal(const FiniteMagma& m, const SubsetMask& a, IdealSide side, const SPolicy& policy = {});

/// How the sets X and Y of the seminormal/normal conditions are formed.
/// Aggregate: X = G*V and Y = V*G. PerElement: X_a = aV and Y_a = Va for
/// every a, each tested on its own.
enum class SNormalMode { Aggregate, PerElement };

struct SNormalReport {
  bool seminormal = false;
  bool normal = false;
  std::vector<SubsetMask> x_sets;
  std::vector<SubsetMask> y_sets;
};

/// V must be an S-subgroupoid (NOT_S_SUBGROUPOID otherwise).
SNormalReport s_normality(const FiniteMagma& m, const SubsetMask& v, const SPolicy& policy = {},
                          SNormalMode mode = SNormalMode::Aggregate);
bool s_seminormal(const FiniteMagma& m, const SubsetMask& v, const SPolicy& policy = {},
                  SNormalMode mode = SNormalMode::Aggregate);
bool s_normal(const FiniteMagma& m, const SubsetMask& v, const SPolicy& policy = {},
              SNormalMode mode = SNormalMode::Aggregate);

struct SConjugacy {
  bool semiconjugate = false;
  bool conjugate = false;
  std::vector<Multiplier> h_from_p;  // H = xP (Left) or Px (Right)
  std::vector<Multiplier> p_from_h;  // P = xH (Left) or Hx (Right)
};

/// Multipliers range over all of G, independently per direction; H and P
/// need not be disjoint.
SConjugacy s_conjugacy(const FiniteMagma& m, const SubsetMask& h, const SubsetMask& p, const SPolicy& policy = {});
bool s_semiconjugate(const FiniteMagma& m, const SubsetMask& h, const SubsetMask& p, const SPolicy& policy = {});
bool s_conjugate(const FiniteMagma& m, const SubsetMask& h, const SubsetMask& p, const SPolicy& policy = {});

/// Some qualifying semigroup subset is commutative.
bool s_commutative(const FiniteMagma& m, const SPolicy& policy = {}, std::size_t max_order = enumeration_bound());
/// G is an SG and, inside every S-subgroupoid H, every qualifying semigroup
/// K contained in H is commutative.
bool s_inner_commutative(const FiniteMagma& m, const SPolicy& policy = {},
                         std::size_t max_order = enumeration_bound());

enum class SLawStrength { Weak, Strong };

struct SLawReport {
  bool holds = false;
  struct Entry {
    SubsetMask subgroupoid;
    LawReport report;
  };
  std::vector<Entry> detail;
};

/// Weak: the law holds on some S-subgroupoid. Strong: on every one.
/// Throws NOT_SMARANDACHE when m has no semigroup witness.
SLawReport s_law(const FiniteMagma& m, LawId law, SLawStrength strength, const SPolicy& policy = {},
                 std::size_t max_order = enumeration_bound());

/// Both strengths from one enumeration.
struct SLawPair {
  bool weak = false;
  bool strong = false;
};
SLawPair s_law_both(const FiniteMagma& m, LawId law, const ClosedSetFamily& s_subs);

/// m is an SG and every element is idempotent.
bool s_idempotent(const FiniteMagma& m, const SPolicy& policy = {});

inline constexpr std::size_t kMaxHomDomain = 8;

/// Every map phi: A -> A' with phi(a*b) = phi(a)*phi(b). Each map is listed
/// as the images of A's elements in increasing order.
std::vector<std::vector<Element>> s_homomorphisms(const FiniteMagma& g, const SubsetMask& a, const FiniteMagma& g2,
                                                  const SubsetMask& a2);
bool s_isomorphic(const FiniteMagma& g, const SubsetMask& a, const FiniteMagma& g2, const SubsetMask& a2);

struct SDirectProduct {
  FiniteMagma product;
  std::optional<SgWitness> witness;
};

SDirectProduct s_direct_product(const std::vector<FiniteMagma>& factors);

struct SBoundCheck {
  std::size_t found = 0;
  std::size_t bound = 0;  // sum of C(k, j) for j = 1..k-1 over k factors
  bool ok = false;
  bool complete = true;
};

SBoundCheck s_subgroupoid_bound_check(const std::vector<FiniteMagma>& factors,
                                      std::size_t max_order = enumeration_bound());

/// S1 is a homomorphic image of some subsemigroup of S2.
bool sg_divides(const FiniteMagma& g1, const SubsetMask& s1, const FiniteMagma& g2, const SubsetMask& s2);

}  // namespace magma
