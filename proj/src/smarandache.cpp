#include "magma/smarandache.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "magma/error.hpp"

namespace magma {

namespace {

using Bits = std::uint64_t;

bool witness_less(const SubsetMask& a, const SubsetMask& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a.elements() < b.elements();
}

SgWitness make_witness(const FiniteMagma& m, const SubsetMask& s) {
  return SgWitness{s, is_trivial(m, s), check_commutative(m, s).holds, check_associative(m).holds};
}

// Closed subsets of m lying inside the closed set `universe`, by the same
// next-closure sweep restricted to the universe's elements. Stops early
// when the callback returns true.
bool any_closed_within(const FiniteMagma& m, Bits universe, const std::function<bool(Bits)>& fn) {
  auto closure = [&](Bits seed) { return generated_closure(m, SubsetMask::from_bits(m.order(), seed)).bits(); };
  Bits a = closure(0);
  if (a && fn(a)) return true;
  while (a != universe) {
    bool advanced = false;
    for (std::size_t i = m.order(); i-- > 0;) {
      const Bits bi = Bits{1} << i;
      if (!(universe & bi) || (a & bi)) continue;
      const Bits low = bi - 1;
      const Bits b = closure((a & low) | bi);
      if ((b & low) == (a & low)) {
        a = b;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
    if (fn(a)) return true;
  }
  return false;
}

void require_semigroup(const FiniteMagma& m, const SubsetMask& s, const char* what) {
  require_subset(m, s);
  if (s.empty() || !is_closed(m, s) || !check_associative(m, s).holds) {
    throw Error(ErrorCode::NotSemigroup, std::string(what) + " " + s.to_string() + " is not a semigroup");
  }
}

void require_s_subgroupoid(const FiniteMagma& m, const SubsetMask& s, const SPolicy& policy) {
  if (!is_s_subgroupoid(m, s, policy)) {
    throw Error(ErrorCode::NotSSubgroupoid, s.to_string() + " is not a Smarandache subgroupoid");
  }
}

// Backtracking search for maps dom -> cod (element lists of semigroups)
// respecting the products; `visit` returns true to stop.
void for_each_hom(const FiniteMagma& g, const std::vector<Element>& dom, const FiniteMagma& g2,
                  const std::vector<Element>& cod, const std::function<bool(const std::vector<Element>&)>& visit) {
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < dom.size(); ++i) pos[dom[i]] = static_cast<int>(i);
  std::vector<Element> img(dom.size());
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (stop) return;
    if (k == dom.size()) {
      stop = visit(img);
      return;
    }
    for (Element c : cod) {
      img[k] = c;
      bool ok = true;
      for (std::size_t i = 0; i <= k && ok; ++i) {
        for (std::size_t j = 0; j <= k && ok; ++j) {
          const auto p = static_cast<std::size_t>(pos[g.at(dom[i], dom[j])]);
          if (p > k || (i != k && j != k && p != k)) continue;
          ok = img[p] == g2.at(img[i], img[j]);
        }
      }
      if (ok) rec(k + 1);
      if (stop) return;
    }
  };
  rec(0);
}

}  // namespace

std::optional<SgWitness> smarandache_witness(const FiniteMagma& m, const SPolicy& policy, std::size_t max_order) {
  const std::size_t n = m.order();
  if (n > SubsetMask::kMaxWidth) {
    throw Error(ErrorCode::OrderTooLarge, "order " + std::to_string(n) + " exceeds enumeration bound");
  }
  if (policy.min_subset_size <= 1) {
    for (Element a = 0; a < n; ++a) {
      if (m.at(a, a) != a) continue;
      const auto s = SubsetMask::singleton(n, a);
      if (is_semigroup_witness(m, s, policy)) return make_witness(m, s);
    }
  }
  if (policy.min_subset_size <= 2) {
    for (Element a = 0; a < n; ++a) {
      for (Element b = a + 1; b < n; ++b) {
        const SubsetMask s(n, {a, b});
        if (is_semigroup_witness(m, s, policy)) return make_witness(m, s);
      }
    }
  }
  // Small witnesses need no bound; the exhaustive search does.
  if (n > max_order) {
    throw Error(ErrorCode::OrderTooLarge, "order " + std::to_string(n) + " exceeds enumeration bound");
  }
  std::optional<SubsetMask> best;
  for (const auto& s : enumerate_closed(m, false, max_order).members) {
    if (best && !witness_less(s, *best)) continue;
    if (is_semigroup_witness(m, s, policy)) best = s;
  }
  if (!best) return std::nullopt;
  return make_witness(m, *best);
}

bool is_s_subgroupoid(const FiniteMagma& m, const SubsetMask& h, const SPolicy& policy) {
  require_subset(m, h);
  if (h.empty() || h.is_full() || !is_closed(m, h)) return false;
  for (Element a : h.elements()) {
    const auto s = SubsetMask::singleton(m.order(), a);
    if (s != h && m.at(a, a) == a && is_semigroup_witness(m, s, policy)) return true;
  }
  return any_closed_within(m, h.bits(), [&](Bits k) {
    return k != h.bits() && is_semigroup_witness(m, SubsetMask::from_bits(m.order(), k), policy);
  });
}

ClosedSetFamily s_subgroupoids(const FiniteMagma& m, const SPolicy& policy, std::size_t max_order) {
  ClosedSetFamily fam = enumerate_closed(m, false, max_order);
  std::vector<Bits> semis;
  for (const auto& s : fam.members) {
    if (is_semigroup_witness(m, s, policy)) semis.push_back(s.bits());
  }
  std::erase_if(fam.members, [&](const SubsetMask& h) {
    const Bits hb = h.bits();
    return std::none_of(semis.begin(), semis.end(), [&](Bits k) { return k != hb && (k & ~hb) == 0; });
  });
  return fam;
}

bool s_ideal(const FiniteMagma& m, const SubsetMask& a, IdealSide side, const SPolicy& policy) {
  const bool ideal = is_ideal(m, a, side).holds;
  return ideal && is_s_subgroupoid(m, a, policy);
}

SNormalReport s_normality(const FiniteMagma& m, const SubsetMask& v, const SPolicy& policy, SNormalMode mode) {
  require_s_subgroupoid(m, v, policy);
  SNormalReport r;
  if (mode == SNormalMode::Aggregate) {
    r.x_sets.push_back(set_product(m, m.full_set(), v));
    r.y_sets.push_back(set_product(m, v, m.full_set()));
  } else {
    for (Element a = 0; a < m.order(); ++a) {
      r.x_sets.push_back(left_multiple(m, a, v));
      r.y_sets.push_back(right_multiple(m, v, a));
    }
  }
  bool all_closed = true;
  bool semi = true;
  bool normal = true;
  for (std::size_t i = 0; i < r.x_sets.size(); ++i) {
    const auto& x = r.x_sets[i];
    const auto& y = r.y_sets[i];
    all_closed = all_closed && is_closed(m, x) && is_closed(m, y);
    const bool sx = is_s_subgroupoid(m, x, policy);
    const bool sy = is_s_subgroupoid(m, y, policy);
    semi = semi && (sx || sy);
    normal = normal && sx && sy;
  }
  r.seminormal = all_closed && semi;
  r.normal = all_closed && normal;
  return r;
}

bool s_seminormal(const FiniteMagma& m, const SubsetMask& v, const SPolicy& policy, SNormalMode mode) {
  return s_normality(m, v, policy, mode).seminormal;
}

bool s_normal(const FiniteMagma& m, const SubsetMask& v, const SPolicy& policy, SNormalMode mode) {
  return s_normality(m, v, policy, mode).normal;
}

SConjugacy s_conjugacy(const FiniteMagma& m, const SubsetMask& h, const SubsetMask& p, const SPolicy& policy) {
  require_s_subgroupoid(m, h, policy);
  require_s_subgroupoid(m, p, policy);
  SConjugacy r;
  for (Element x = 0; x < m.order(); ++x) {
    if (left_multiple(m, x, p) == h) r.h_from_p.push_back({x, Side::Left});
    if (right_multiple(m, p, x) == h) r.h_from_p.push_back({x, Side::Right});
    if (left_multiple(m, x, h) == p) r.p_from_h.push_back({x, Side::Left});
    if (right_multiple(m, h, x) == p) r.p_from_h.push_back({x, Side::Right});
  }
  r.semiconjugate = !r.h_from_p.empty() || !r.p_from_h.empty();
  r.conjugate = !r.h_from_p.empty() && !r.p_from_h.empty();
  return r;
}

bool s_semiconjugate(const FiniteMagma& m, const SubsetMask& h, const SubsetMask& p, const SPolicy& policy) {
  return s_conjugacy(m, h, p, policy).semiconjugate;
}

bool s_conjugate(const FiniteMagma& m, const SubsetMask& h, const SubsetMask& p, const SPolicy& policy) {
  return s_conjugacy(m, h, p, policy).conjugate;
}

bool s_commutative(const FiniteMagma& m, const SPolicy& policy, std::size_t max_order) {
  for (const auto& s : enumerate_subsemigroups(m, policy, max_order).members) {
    if (check_commutative(m, s).holds) return true;
  }
  return false;
}

bool s_inner_commutative(const FiniteMagma& m, const SPolicy& policy, std::size_t max_order) {
  const auto semis = enumerate_subsemigroups(m, policy, max_order).members;
  if (semis.empty()) return false;
  const auto subs = s_subgroupoids(m, policy, max_order).members;
  for (const auto& k : semis) {
    const bool inside_some = std::any_of(subs.begin(), subs.end(), [&](const SubsetMask& h) { return k.is_subset_of(h); });
    if (inside_some && !check_commutative(m, k).holds) return false;
  }
  return true;
}

SLawPair s_law_both(const FiniteMagma& m, LawId law, const ClosedSetFamily& s_subs) {
  SLawPair r{false, true};
  for (const auto& h : s_subs.members) {
    const bool ok = check_law(m, law, h).holds;
    r.weak = r.weak || ok;
    r.strong = r.strong && ok;
  }
  return r;
}

SLawReport s_law(const FiniteMagma& m, LawId law, SLawStrength strength, const SPolicy& policy,
                 std::size_t max_order) {
  if (!smarandache_witness(m, policy, max_order)) {
    throw Error(ErrorCode::NotSmarandache, "no proper subset is a semigroup");
  }
  SLawReport r;
  bool any = false;
  bool all = true;
  for (const auto& h : s_subgroupoids(m, policy, max_order).members) {
    LawReport rep = check_law(m, law, h);
    any = any || rep.holds;
    all = all && rep.holds;
    r.detail.push_back({h, std::move(rep)});
  }
  r.holds = strength == SLawStrength::Weak ? any : all;
  return r;
}

bool s_idempotent(const FiniteMagma& m, const SPolicy& policy) {
  for (Element a = 0; a < m.order(); ++a) {
    if (m.at(a, a) != a) return false;
  }
  return smarandache_witness(m, policy).has_value();
}

std::vector<std::vector<Element>> s_homomorphisms(const FiniteMagma& g, const SubsetMask& a, const FiniteMagma& g2,
                                                  const SubsetMask& a2) {
  require_semigroup(g, a, "domain");
  require_semigroup(g2, a2, "codomain");
  if (a.count() > kMaxHomDomain) {
    throw Error(ErrorCode::OrderTooLarge, "homomorphism domain larger than " + std::to_string(kMaxHomDomain));
  }
  std::vector<std::vector<Element>> out;
  for_each_hom(g, a.elements(), g2, a2.elements(), [&](const std::vector<Element>& img) {
    out.push_back(img);
    return false;
  });
  return out;
}

bool s_isomorphic(const FiniteMagma& g, const SubsetMask& a, const FiniteMagma& g2, const SubsetMask& a2) {
  if (a.count() != a2.count()) {
    require_semigroup(g, a, "domain");
    require_semigroup(g2, a2, "codomain");
    return false;
  }
  for (const auto& img : s_homomorphisms(g, a, g2, a2)) {
    auto sorted = img;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) return true;
  }
  return false;
}

SDirectProduct s_direct_product(const std::vector<FiniteMagma>& factors) {
  FiniteMagma p = direct_product(factors);
  auto w = smarandache_witness(p);
  return SDirectProduct{std::move(p), std::move(w)};
}

SBoundCheck s_subgroupoid_bound_check(const std::vector<FiniteMagma>& factors, std::size_t max_order) {
  for (const auto& f : factors) {
    if (!smarandache_witness(f, {}, max_order)) {
      throw Error(ErrorCode::NotSmarandache, "every factor must be a Smarandache groupoid");
    }
  }
  const FiniteMagma p = direct_product(factors);
  const auto fam = s_subgroupoids(p, {}, max_order);
  SBoundCheck r;
  r.found = fam.members.size();
  r.bound = (std::size_t{1} << factors.size()) - 2;
  r.complete = fam.complete;
  r.ok = r.found >= r.bound;
  return r;
}

bool sg_divides(const FiniteMagma& g1, const SubsetMask& s1, const FiniteMagma& g2, const SubsetMask& s2) {
  require_semigroup(g1, s1, "S1");
  require_semigroup(g2, s2, "S2");
  if (s2.count() > kMaxHomDomain) {
    throw Error(ErrorCode::OrderTooLarge, "S2 larger than " + std::to_string(kMaxHomDomain));
  }
  const auto cod = s1.elements();
  const Bits s2b = s2.bits();
  // Every nonempty subset of S2 that is closed is a subsemigroup of it.
  for (Bits t = s2b; t; t = (t - 1) & s2b) {
    const auto tm = SubsetMask::from_bits(g2.order(), t);
    if (tm.count() < cod.size() || !is_closed(g2, tm)) continue;
    bool found = false;
    for_each_hom(g2, tm.elements(), g1, cod, [&](const std::vector<Element>& img) {
      Bits hit = 0;
      for (Element e : img) hit |= Bits{1} << e;
      found = hit == s1.bits();
      return found;
    });
    if (found) return true;
  }
  return false;
}

}  // namespace magma
