#include "magma/substructures.hpp"

#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>

#include "magma/error.hpp"

namespace magma {

namespace {

using Bits = std::uint64_t;

Bits bit(Element e) { return Bits{1} << e; }

Bits closure_bits(const FiniteMagma& m, Bits seed) {
  Element list[SubsetMask::kMaxWidth];
  std::size_t len = 0;
  Bits cur = seed;
  for (Bits b = seed; b; b &= b - 1) list[len++] = static_cast<Element>(std::countr_zero(b));
  for (std::size_t i = 0; i < len; ++i) {
    const Element x = list[i];
    for (std::size_t j = 0; j <= i; ++j) {
      const Element y = list[j];
      for (Element p : {m.at(x, y), m.at(y, x)}) {
        if (!(cur & bit(p))) {
          cur |= bit(p);
          list[len++] = p;
        }
      }
    }
  }
  return cur;
}

void check_order(const FiniteMagma& m, std::size_t max_order) {
  const std::size_t cap = std::min<std::size_t>(max_order, SubsetMask::kMaxWidth);
  if (m.order() > cap) {
    throw Error(ErrorCode::OrderTooLarge,
                "order " + std::to_string(m.order()) + " exceeds enumeration bound " + std::to_string(cap));
  }
}

void require_proper_closed(const FiniteMagma& m, const SubsetMask& s, const char* what) {
  require_subset(m, s);
  if (s.empty() || s.is_full()) {
    throw Error(ErrorCode::SubsetOutOfRange, std::string(what) + " must be a nonempty proper subset");
  }
  if (!is_closed(m, s)) throw Error(ErrorCode::NotClosed, s.to_string() + " is not closed");
}

}  // namespace

std::size_t enumeration_bound() {
  if (const char* env = std::getenv("MAGMA_MAX_ORDER")) {
    std::size_t v = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, v);
    if (ec == std::errc() && ptr == end && v >= 1 && v <= SubsetMask::kMaxWidth) return v;
  }
  return kDefaultEnumerationBound;
}

std::string_view ideal_side_name(IdealSide side) {
  switch (side) {
    case IdealSide::Left: return "left";
    case IdealSide::Right: return "right";
    case IdealSide::TwoSided: return "two-sided";
  }
  return "?";
}

std::string_view scope_name(NormalityScope scope) {
  return scope == NormalityScope::LiteralV ? "literal-v" : "over-g";
}

void require_subset(const FiniteMagma& m, const SubsetMask& s) {
  if (s.width() != m.order()) {
    throw Error(ErrorCode::SubsetOutOfRange,
                "subset width " + std::to_string(s.width()) + " does not match order " + std::to_string(m.order()));
  }
}

SubsetMask generated_closure(const FiniteMagma& m, const SubsetMask& seed) {
  require_subset(m, seed);
  return SubsetMask::from_bits(m.order(), closure_bits(m, seed.bits()));
}

bool is_closed(const FiniteMagma& m, const SubsetMask& s) {
  require_subset(m, s);
  const Bits b = s.bits();
  for (Bits x = b; x; x &= x - 1) {
    const auto a = static_cast<Element>(std::countr_zero(x));
    for (Bits y = b; y; y &= y - 1) {
      if (!(b & bit(m.at(a, static_cast<Element>(std::countr_zero(y)))))) return false;
    }
  }
  return true;
}

bool is_trivial(const FiniteMagma& m, const SubsetMask& s) {
  const auto zero = m.designated_zero();
  return zero && s.count() == 1 && s.contains(*zero);
}

SubsetMask left_multiple(const FiniteMagma& m, Element x, const SubsetMask& s) {
  Bits out = 0;
  for (Bits b = s.bits(); b; b &= b - 1) out |= bit(m.at(x, static_cast<Element>(std::countr_zero(b))));
  return SubsetMask::from_bits(m.order(), out);
}

SubsetMask right_multiple(const FiniteMagma& m, const SubsetMask& s, Element x) {
  Bits out = 0;
  for (Bits b = s.bits(); b; b &= b - 1) out |= bit(m.at(static_cast<Element>(std::countr_zero(b)), x));
  return SubsetMask::from_bits(m.order(), out);
}

SubsetMask set_product(const FiniteMagma& m, const SubsetMask& a, const SubsetMask& b) {
  Bits out = 0;
  for (Bits x = a.bits(); x; x &= x - 1) out |= left_multiple(m, static_cast<Element>(std::countr_zero(x)), b).bits();
  return SubsetMask::from_bits(m.order(), out);
}

// Ganter's next-closure sweep: visits every closed set exactly once in
// lectic order, using only the closure operator.
ClosedSetFamily enumerate_closed(const FiniteMagma& m, bool include_improper, std::size_t max_order,
                                 std::size_t member_cap) {
  check_order(m, max_order);
  const std::size_t n = m.order();
  const Bits full = SubsetMask::full_bits(n);
  ClosedSetFamily fam;
  fam.order = n;
  Bits a = closure_bits(m, 0);
  auto emit = [&](Bits s) {
    if (s == 0 || (s == full && !include_improper)) return true;
    if (fam.members.size() >= member_cap) {
      fam.complete = false;
      fam.bound_hit = "member cap " + std::to_string(member_cap) + " reached";
      return false;
    }
    fam.members.push_back(SubsetMask::from_bits(n, s));
    return true;
  };
  if (!emit(a)) return fam;
  while (a != full) {
    bool advanced = false;
    for (std::size_t i = n; i-- > 0;) {
      const Bits low = (Bits{1} << i) - 1;
      if (a & bit(static_cast<Element>(i))) continue;
      const Bits b = closure_bits(m, (a & low) | bit(static_cast<Element>(i)));
      if ((b & low) == (a & low)) {
        a = b;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
    if (!emit(a)) return fam;
  }
  return fam;
}

bool is_semigroup_witness(const FiniteMagma& m, const SubsetMask& s, const SPolicy& policy) {
  require_subset(m, s);
  if (s.empty() || s.is_full() || s.count() < policy.min_subset_size) return false;
  if (policy.exclude_trivial_zero && is_trivial(m, s)) return false;
  return is_closed(m, s) && check_associative(m, s).holds;
}

ClosedSetFamily enumerate_subsemigroups(const FiniteMagma& m, const SPolicy& policy, std::size_t max_order) {
  ClosedSetFamily fam = enumerate_closed(m, false, max_order);
  std::erase_if(fam.members, [&](const SubsetMask& s) { return !is_semigroup_witness(m, s, policy); });
  return fam;
}

IdealVerdict is_ideal(const FiniteMagma& m, const SubsetMask& s, IdealSide side) {
  require_proper_closed(m, s, "ideal candidate");
  IdealVerdict v;
  auto scan = [&](Side which) {
    for (Element a : s.elements()) {
      for (Element x = 0; x < m.order(); ++x) {
        const Element p = which == Side::Left ? m.at(x, a) : m.at(a, x);
        if (!s.contains(p)) {
          v.holds = false;
          v.escape = std::make_pair(x, a);
          v.escape_side = which;
          return;
        }
      }
    }
  };
  if (side != IdealSide::Right) scan(Side::Left);
  if (v.holds && side != IdealSide::Left) scan(Side::Right);
  return v;
}

ClosedSetFamily enumerate_ideals(const FiniteMagma& m, IdealSide side, std::size_t max_order) {
  ClosedSetFamily fam = enumerate_closed(m, false, max_order);
  std::erase_if(fam.members, [&](const SubsetMask& s) { return !is_ideal(m, s, side).holds; });
  return fam;
}

namespace {

// The three normality conditions with a, x, y drawn from `range` and the
// subgroupoid V (which is G for the normal-groupoid test).
NormalVerdict normal_conditions(const FiniteMagma& m, const SubsetMask& v, const SubsetMask& range,
                                const char* name) {
  NormalVerdict out;
  const auto elems = range.elements();
  const std::string nm(name);
  for (Element a : elems) {
    if (left_multiple(m, a, v) != right_multiple(m, v, a)) {
      out.holds = false;
      out.failing_condition = "a" + nm + "=" + nm + "a";
      out.x = a;
      return out;
    }
  }
  for (Element x : elems) {
    const SubsetMask vx = right_multiple(m, v, x);
    const SubsetMask xv = left_multiple(m, x, v);
    for (Element y : elems) {
      if (right_multiple(m, vx, y) != right_multiple(m, v, m.at(x, y))) {
        out.holds = false;
        out.failing_condition = "(" + nm + "x)y=" + nm + "(xy)";
        out.x = x;
        out.y = y;
        return out;
      }
      if (left_multiple(m, y, xv) != left_multiple(m, m.at(y, x), v)) {
        out.holds = false;
        out.failing_condition = "y(x" + nm + ")=(yx)" + nm;
        out.x = x;
        out.y = y;
        return out;
      }
    }
  }
  return out;
}

}  // namespace

NormalVerdict is_normal_subgroupoid(const FiniteMagma& m, const SubsetMask& v, NormalityScope scope) {
  require_proper_closed(m, v, "normal subgroupoid candidate");
  return normal_conditions(m, v, scope == NormalityScope::LiteralV ? v : m.full_set(), "V");
}

NormalVerdict is_normal_groupoid(const FiniteMagma& m) {
  return normal_conditions(m, m.full_set(), m.full_set(), "G");
}

SimpleVerdict is_simple(const FiniteMagma& m, NormalityScope scope) {
  SimpleVerdict out;
  for (const auto& v : enumerate_closed(m).members) {
    if (is_trivial(m, v)) continue;
    if (is_normal_subgroupoid(m, v, scope).holds) {
      out.simple = false;
      out.normal_subgroupoid = v;
      return out;
    }
  }
  return out;
}

ConjugacyVerdict are_conjugate_subgroupoids(const FiniteMagma& m, const SubsetMask& h, const SubsetMask& k,
                                            ConjugateScope scope) {
  require_proper_closed(m, h, "H");
  require_proper_closed(m, k, "K");
  if (h.intersects(k)) throw Error(ErrorCode::NotDisjoint, h.to_string() + " meets " + k.to_string());
  ConjugacyVerdict out;
  const SubsetMask range = scope == ConjugateScope::InH ? h : m.full_set();
  for (Element x : range.elements()) {
    if (left_multiple(m, x, k) == h) out.evidence.push_back({x, Side::Left});
    if (right_multiple(m, k, x) == h) out.evidence.push_back({x, Side::Right});
  }
  out.holds = !out.evidence.empty();
  return out;
}

InnerCommutativity is_inner_commutative(const FiniteMagma& m, std::size_t max_order) {
  InnerCommutativity out;
  for (const auto& s : enumerate_closed(m, false, max_order).members) {
    Verdict v = check_commutative(m, s);
    if (!v.holds) {
      out.holds = false;
      out.offender = s;
      out.witness = v.witness;
      return out;
    }
  }
  return out;
}

}  // namespace magma
