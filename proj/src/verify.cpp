#include "magma/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "magma/automata.hpp"
#include "magma/error.hpp"
#include "magma/errata.hpp"
#include "magma/fixtures.hpp"
#include "magma/identities.hpp"
#include "magma/smarandache.hpp"
#include "magma/substructures.hpp"
#include "magma/zn.hpp"

namespace magma {

std::string_view status_name(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Pass: return "PASS";
    case VerifyStatus::Fail: return "FAIL";
    case VerifyStatus::PassWithErrata: return "PASS_WITH_ERRATA";
  }
  return "?";
}

namespace {

struct Ctx {
  VerificationReport& r;

  void fail(const std::string& spec, const std::string& detail, const std::string& erratum = {}) {
    ++r.failure_count;
    if (erratum.empty()) ++r.unexplained_count;
    if (!erratum.empty() && std::find(r.errata.begin(), r.errata.end(), erratum) == r.errata.end()) {
      r.errata.push_back(erratum);
    }
    if (r.failures.size() < kMaxListedFailures) r.failures.push_back({spec, detail, erratum});
  }
  void expect(bool ok, const std::string& spec, const std::string& detail, const std::string& erratum = {}) {
    ++r.checked;
    if (!ok) fail(spec, detail, erratum);
  }
  void uses(const std::string& erratum) {
    if (std::find(r.errata.begin(), r.errata.end(), erratum) == r.errata.end()) r.errata.push_back(erratum);
  }
};

using Check = std::function<void(Ctx&, unsigned, unsigned)>;

struct Entry {
  TheoremInfo info;
  Check run;
};

std::string sp(unsigned n, unsigned t, unsigned u, bool adj = false) { return format_spec({n, t, u, adj}); }
FiniteMagma zn(unsigned n, unsigned t, unsigned u, bool adj = false) { return build_zn({n, t, u, adj}); }
std::string yn(bool b) { return b ? "true" : "false"; }

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p <= n; ++p) {
    if (n % p == 0 && is_prime(p)) out.push_back(p);
  }
  return out;
}

bool squarefree(unsigned n) {
  for (unsigned p : prime_factors(n)) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

void each_pair(unsigned lo, unsigned hi, ClassTag tag, const std::function<void(unsigned, unsigned, unsigned)>& fn) {
  for (unsigned n = std::max(lo, 3u); n <= hi; ++n) {
    for (auto [t, u] : enumerate_class(n, tag)) fn(n, t, u);
  }
}

bool witness_ok(const FiniteMagma& m, std::initializer_list<Element> elems) {
  return is_semigroup_witness(m, SubsetMask(m.order(), elems));
}

// Law over the whole carrier; adjoined magmas use the non-degenerate tuples.
struct NonDegenerate {
  bool holds = true;
  bool vacuous = false;
  std::size_t degenerate_failures = 0;
  std::optional<Witness> first_degenerate;
};

NonDegenerate non_degenerate(const FiniteMagma& m, LawId law) {
  LawReport rep = check_law(m, law, std::nullopt, true);
  NonDegenerate out;
  out.holds = rep.holds;
  out.vacuous = rep.checked == 0;
  out.degenerate_failures = rep.degenerate_failures;
  if (!rep.degenerate_witnesses.empty()) out.first_degenerate = rep.degenerate_witnesses.front();
  return out;
}

// Strong-implies-weak for one law, plus a search for a weak-but-not-strong
// magma in the range.
void strong_weak(Ctx& c, unsigned lo, unsigned hi, LawId law) {
  bool counterexample = false;
  each_pair(lo, hi, ClassTag::ZStarStarStar, [&](unsigned n, unsigned t, unsigned u) {
    const auto m = zn(n, t, u);
    const auto subs = s_subgroupoids(m);
    if (subs.members.empty()) return;
    const auto r = s_law_both(m, law, subs);
    c.expect(!r.strong || r.weak, sp(n, t, u), "strong without weak");
    counterexample = counterexample || (r.weak && !r.strong);
  });
  c.expect(counterexample, "range", "no weak-but-not-strong example found");
}

void adjoined_alt(Ctx& c, unsigned lo, unsigned hi, LawId law) {
  each_pair(lo, hi, ClassTag::ZStarStarStar, [&](unsigned n, unsigned t, unsigned u) {
    const auto m = zn(n, t, u, true);
    const auto pf = predicted_flags(n, t, u, true);
    const bool pred = law == LawId::RightAlt ? pf.adjoined_right_alt : pf.adjoined_left_alt;
    const auto obs = non_degenerate(m, law);
    if (obs.vacuous) return;
    c.expect(obs.holds == pred, sp(n, t, u, true),
             "non-degenerate " + std::string(law_name(law)) + " " + yn(obs.holds) + ", predicted " + yn(pred));
    if (obs.degenerate_failures > 0) {
      c.fail(sp(n, t, u, true),
             std::to_string(obs.degenerate_failures) + " degenerate failures, first " +
                 obs.first_degenerate->to_string(),
             "5.6.3-degenerate");
    }
  });
}

std::vector<Entry> build_registry() {
  std::vector<Entry> e;
  auto add = [&](std::string id, std::string summary, unsigned lo, unsigned hi, Check fn) {
    e.push_back({{std::move(id), std::move(summary), lo, hi}, std::move(fn)});
  };

  add("3.1.1", "Z(n) member is a semigroup iff t^2 = t and u^2 = u", 3, 12, [](Ctx& c, unsigned lo, unsigned hi) {
    each_pair(lo, hi, ClassTag::Z, [&](unsigned n, unsigned t, unsigned u) {
      const bool obs = check_associative(zn(n, t, u)).holds;
      const bool pred = predicted_flags(n, t, u).semigroup;
      c.expect(obs == pred, sp(n, t, u), "associative " + yn(obs) + ", predicted " + yn(pred));
    });
  });
  add("3.1.2", "Z(p) has no semigroup for prime p", 3, 12, [](Ctx& c, unsigned lo, unsigned hi) {
    each_pair(lo, hi, ClassTag::Z, [&](unsigned n, unsigned t, unsigned u) {
      if (is_prime(n)) c.expect(!check_associative(zn(n, t, u)).holds, sp(n, t, u), "associative");
    });
  });
  add("3.1.3", "Z_n(t,u) is idempotent iff t + u = 1", 3, 12, [](Ctx& c, unsigned lo, unsigned hi) {
    each_pair(lo, hi, ClassTag::ZStarStarStar, [&](unsigned n, unsigned t, unsigned u) {
      const bool obs = basic_report(zn(n, t, u)).idempotent_groupoid;
      const bool pred = predicted_flags(n, t, u).idempotent_groupoid;
      c.expect(obs == pred, sp(n, t, u), "idempotent " + yn(obs) + ", predicted " + yn(pred));
    });
  });
  add("3.1.4", "{0} is never an ideal of a Z(n) member", 3, 12, [](Ctx& c, unsigned lo, unsigned hi) {
    each_pair(lo, hi, ClassTag::Z, [&](unsigned n, unsigned t, unsigned u) {
      const auto m = zn(n, t, u);
      const auto z = SubsetMask::singleton(n, 0);
      c.expect(!is_ideal(m, z, IdealSide::Left).holds && !is_ideal(m, z, IdealSide::Right).holds, sp(n, t, u),
               "{0} is a one-sided ideal");
    });
  });
  add("3.1.5", "left ideals of Z_n(t,u) are the right ideals of Z_n(u,t)", 3, 10,
      [](Ctx& c, unsigned lo, unsigned hi) {
        each_pair(lo, hi, ClassTag::Z, [&](unsigned n, unsigned t, unsigned u) {
          const auto m = zn(n, t, u);
          const auto d = zn(n, u, t);
          for (const auto& s : enumerate_closed(m).members) {
            const bool l = is_ideal(m, s, IdealSide::Left).holds;
            const bool r = is_ideal(d, s, IdealSide::Right).holds;
            c.expect(l == r, sp(n, t, u), s.to_string() + " left " + yn(l) + " vs dual right " + yn(r));
          }
        });
      });
  add("3.1.6", "Z_n(t,u) with n = t + u, t and u primes, is simple", 3, 20, [](Ctx& c, unsigned lo, unsigned hi) {
    each_pair(lo, hi, ClassTag::Z, [&](unsigned n, unsigned t, unsigned u) {
      if (t + u != n || !is_prime(t) || !is_prime(u)) return;
      const auto v = is_simple(zn(n, t, u));
      c.expect(v.simple, sp(n, t, u), v.normal_subgroupoid ? "normal " + v.normal_subgroupoid->to_string() : "",
               is_prime(n) ? "" : "3.1.6-composite");
    });
  });
  add("3.1.7", "Z_p(t,u) with t + u = p is simple", 3, 19, [](Ctx& c, unsigned lo, unsigned hi) {
    each_pair(lo, hi, ClassTag::Z, [&](unsigned n, unsigned t, unsigned u) {
      if (!is_prime(n) || t + u != n) return;
      const auto v = is_simple(zn(n, t, u));
      c.expect(v.simple, sp(n, t, u), v.normal_subgroupoid ? "normal " + v.normal_subgroupoid->to_string() : "");
    });
  });
  add("3.2.1", "|Z*(n)| = (n-1)(n-2)", 3, 12, [](Ctx& c, unsigned lo, unsigned hi) {
    for (unsigned n = std::max(lo, 3u); n <= hi; ++n) {
      std::size_t count = 0;
      for (unsigned t = 1; t < n; ++t) {
        for (unsigned u = 1; u < n; ++u) count += t != u;
      }
      c.expect(count == std::size_t{n - 1} * (n - 2) && count == class_size(n, ClassTag::ZStar), std::to_string(n),
               "count " + std::to_string(count));
    }
  });
  add("3.2.2", "|Z(n)| <= (n-1)(n-2)", 3, 12, [](Ctx& c, unsigned lo, unsigned hi) {
    for (unsigned n = std::max(lo, 3u); n <= hi; ++n) {
      c.expect(class_size(n, ClassTag::Z) <= std::size_t{n - 1} * (n - 2), std::to_string(n), "bound exceeded");
    }
  });
  auto t_multiples = [](unsigned n, unsigned t) {
    SubsetMask s(n);
    for (unsigned k = 0; k < n; k += t) s.insert(k);
    return s;
  };
  add("3.2.3", "n even, t + u = n, gcd(t,u) = t: t*Z_n is a subgroupoid of order n/t", 4, 24,
      [t_multiples](Ctx& c, unsigned lo, unsigned hi) {
        each_pair(lo, hi, ClassTag::ZStar, [&](unsigned n, unsigned t, unsigned u) {
          if (n % 2 || t + u != n || std::gcd(t, u) != t) return;
          const auto s = t_multiples(n, t);
          c.expect(is_closed(zn(n, t, u), s) && s.count() == n / t, sp(n, t, u), s.to_string() + " not closed");
        });
      });
  add("3.2.4", "n even, t + u = n, gcd(t,u) = t: t*Z_n is the only subgroupoid of order n/t and is normal", 4, 16,
      [t_multiples](Ctx& c, unsigned lo, unsigned hi) {
        each_pair(lo, hi, ClassTag::ZStar, [&](unsigned n, unsigned t, unsigned u) {
          // t = 1 gives t*Z_n = Z_n, not a proper subgroupoid.
          if (n % 2 || t + u != n || std::gcd(t, u) != t || t == 1) return;
          const auto m = zn(n, t, u);
          const auto s = t_multiples(n, t);
          std::size_t same_order = 0;
          for (const auto& h : enumerate_closed(m).members) same_order += h.count() == n / t;
          c.expect(same_order == 1, sp(n, t, u), std::to_string(same_order) + " closed subsets of order n/t",
                   "3.2.4-unique");
          const auto nv = is_normal_subgroupoid(m, s, NormalityScope::LiteralV);
          c.expect(nv.holds, sp(n, t, u), s.to_string() + " fails " + nv.failing_condition, "3.2.4-unique");
        });
      });
  add("3.3.1", "Z_n(t,t) is commutative", 3, 12, [](Ctx& c, unsigned lo, unsigned hi) {
    for (unsigned n = std::max(lo, 3u); n <= hi; ++n) {
      for (unsigned t = 1; t < n; ++t) c.expect(check_commutative(zn(n, t, t)).holds, sp(n, t, t), "not commutative");
    }
  });
  add("3.3.2", "Z_p(t,t) is a normal groupoid for prime p", 3, 11, [](Ctx& c, unsigned lo, unsigned hi) {
    for (unsigned p = std::max(lo, 3u); p <= hi; ++p) {
      if (!is_prime(p)) continue;
      for (unsigned t = 1; t < p; ++t) {
        const auto v = is_normal_groupoid(zn(p, t, t));
        c.expect(v.holds, sp(p, t, t), v.failing_condition);
      }
    }
  });
  add("3.3.3", "Z_n(t,t) satisfies the P law", 3, 12, [](Ctx& c, unsigned lo, unsigned hi) {
    for (unsigned n = std::max(lo, 3u); n <= hi; ++n) {
      for (unsigned t = 1; t < n; ++t) c.expect(check_law(zn(n, t, t), LawId::P).holds, sp(n, t, t), "P fails");
    }
  });
  add("3.3.4", "Z_p(t,t), 1 < t < p prime, is not alternative", 3, 11, [](Ctx& c, unsigned lo, unsigned hi) {
    for (unsigned p = std::max(lo, 3u); p <= hi; ++p) {
      if (!is_prime(p)) continue;
      for (unsigned t = 2; t < p; ++t) {
        c.expect(!check_law(zn(p, t, t), LawId::Alternative).holds, sp(p, t, t), "alternative");
      }
    }
  });
  add("3.3.5", "composite n: Z_n(t,t) is alternative iff t^2 = t", 4, 12, [](Ctx& c, unsigned lo, unsigned hi) {
    for (unsigned n = std::max(lo, 4u); n <= hi; ++n) {
      if (is_prime(n)) continue;
      for (unsigned t = 1; t < n; ++t) {
        const bool obs = check_law(zn(n, t, t), LawId::Alternative).holds;
        const bool pred = t * t % n == t;
        c.expect(obs == pred, sp(n, t, t), "alternative " + yn(obs) + ", predicted " + yn(pred));
      }
    }
  });
  add("3.4", "|Z***(n)| = n^2 - 1", 3, 12, [](Ctx& c, unsigned lo, unsigned hi) {
    for (unsigned n = std::max(lo, 3u); n <= hi; ++n) {
      const std::size_t size = class_size(n, ClassTag::ZStarStarStar);
      c.expect(size == std::size_t{n} * n - 1, std::to_string(n), "size " + std::to_string(size));
      c.fail(std::to_string(n), "printed count " + std::to_string(n * (n - 1)) + ", enumerated " + std::to_string(size),
             "3.4-count");
    }
  });
  add("3.4.1", "Z_n(0,t) is a P and alternative groupoid iff t^2 = t", 3, 12, [](Ctx& c, unsigned lo, unsigned hi) {
    for (unsigned n = std::max(lo, 3u); n <= hi; ++n) {
      for (unsigned t = 1; t < n; ++t) {
        const auto m = zn(n, 0, t);
        const bool obs = check_law(m, LawId::P).holds && check_law(m, LawId::Alternative).holds;
        const bool pred = t * t % n == t;
        c.expect(obs == pred, sp(n, 0, t), "P and alternative " + yn(obs) + ", predicted " + yn(pred));
      }
    }
  });
  add("3.5.1", "adjoined Z_n(t,u): e is an identity and every {m,e} is a group of order 2", 3, 10,
      [](Ctx& c, unsigned lo, unsigned hi) {
        each_pair(lo, hi, ClassTag::ZStarStarStar, [&](unsigned n, unsigned t, unsigned u) {
          const auto m = zn(n, t, u, true);
          const Element e = n;
          const auto rep = basic_report(m);
          c.expect(rep.two_sided_identities == std::vector<Element>{e}, sp(n, t, u, true), "e is not the identity");
          for (Element a = 0; a < n; ++a) {
            const SubsetMask s(n + 1, {a, e});
            const bool group = is_closed(m, s) && check_associative(m, s).holds && m.at(a, a) == e;
            c.expect(group, sp(n, t, u, true), s.to_string() + " is not a group");
          }
        });
      });
  add("3.5.2", "Z_n(m,m-1) with e adjoined is a loop", 5, 11, [](Ctx& c, unsigned lo, unsigned hi) {
    for (unsigned n = std::max(lo, 4u); n <= hi; ++n) {
      for (unsigned mm = 1; mm < n; ++mm) {
        if (!loop_params_valid(n, mm)) continue;
        const auto v = is_loop(build_loop(n, mm));
        c.expect(v.holds, "loop(" + std::to_string(n) + "," + std::to_string(mm) + ")", v.reason);
      }
    }
  });
  add("4.1.1", "a commutative SG is S-commutative, not conversely", 3, 8, [](Ctx& c, unsigned lo, unsigned hi) {
    bool converse = false;
    each_pair(lo, hi, ClassTag::ZStarStarStar, [&](unsigned n, unsigned t, unsigned u) {
      const auto m = zn(n, t, u);
      const bool comm = check_commutative(m).holds;
      const bool sg = smarandache_witness(m).has_value();
      const bool sc = s_commutative(m);
      if (comm && sg) c.expect(sc, sp(n, t, u), "commutative SG that is not S-commutative");
      converse = converse || (sc && !comm);
    });
    c.expect(converse, "range", "no non-commutative S-commutative example");
  });
  add("4.2.1", "a subgroupoid of an SG need not be an S-subgroupoid", 6, 6, [](Ctx& c, unsigned, unsigned) {
    const auto m = zn(6, 4, 5);
    const SubsetMask a(6, {0, 2, 4});
    c.expect(smarandache_witness(m).has_value() && is_closed(m, a) && !is_s_subgroupoid(m, a), "6:4:5",
             "{0,2,4} should be closed but not an S-subgroupoid");
  });
  add("4.2.2", "a groupoid with an S-subgroupoid is an SG", 3, 8, [](Ctx& c, unsigned lo, unsigned hi) {
    each_pair(lo, hi, ClassTag::ZStarStarStar, [&](unsigned n, unsigned t, unsigned u) {
      const auto m = zn(n, t, u);
      if (!s_subgroupoids(m).members.empty()) c.expect(smarandache_witness(m).has_value(), sp(n, t, u), "no witness");
    });
  });
  add("4.2.3", "an S-ideal is an ideal, not conversely", 3, 8, [](Ctx& c, unsigned lo, unsigned hi) {
    each_pair(lo, hi, ClassTag::ZStarStarStar, [&](unsigned n, unsigned t, unsigned u) {
      const auto m = zn(n, t, u);
      for (const auto& a : s_subgroupoids(m).members) {
        for (IdealSide side : {IdealSide::Left, IdealSide::Right, IdealSide::TwoSided}) {
          if (s_ideal(m, a, side)) c.expect(is_ideal(m, a, side).holds, sp(n, t, u), a.to_string());
        }
      }
    });
    const auto m = zn(6, 2, 4);
    const SubsetMask q(6, {0, 2, 4});
    c.expect(is_ideal(m, q, IdealSide::TwoSided).holds && !s_ideal(m, q, IdealSide::TwoSided), "6:2:4",
             "{0,2,4} should be an ideal but not an S-ideal");
  });
  add("4.2.4", "S-normal implies S-seminormal, not conversely", 3, 8, [](Ctx& c, unsigned lo, unsigned hi) {
    each_pair(lo, hi, ClassTag::ZStarStarStar, [&](unsigned n, unsigned t, unsigned u) {
      const auto m = zn(n, t, u);
      for (const auto& v : s_subgroupoids(m).members) {
        const auto r = s_normality(m, v);
        c.expect(!r.normal || r.seminormal, sp(n, t, u), v.to_string());
      }
    });
    const auto r = s_normality(zn(6, 4, 5), SubsetMask(6, {1, 3, 5}));
    c.expect(r.seminormal && !r.normal, "6:4:5", "{1,3,5} should be seminormal but not normal");
  });
  add("4.2.5", "S-conjugate implies S-semiconjugate, not conversely", 3, 8, [](Ctx& c, unsigned lo, unsigned hi) {
    bool converse = false;
    each_pair(lo, hi, ClassTag::ZStarStarStar, [&](unsigned n, unsigned t, unsigned u) {
      const auto m = zn(n, t, u);
      const auto subs = s_subgroupoids(m).members;
      for (std::size_t i = 0; i < subs.size(); ++i) {
        for (std::size_t j = i + 1; j < subs.size(); ++j) {
          const auto r = s_conjugacy(m, subs[i], subs[j]);
          c.expect(!r.conjugate || r.semiconjugate, sp(n, t, u), subs[i].to_string() + " " + subs[j].to_string());
          converse = converse || (r.semiconjugate && !r.conjugate);
        }
      }
    });
    c.expect(converse, "range", "no semiconjugate-but-not-conjugate pair");
    const auto m = zn(8, 2, 6);
    const SubsetMask p(8, {0, 2, 3, 4, 6});
    const SubsetMask q(8, {0, 2, 4, 6});
    const auto seven_p = left_multiple(m, 7, p);
    if (seven_p != q) c.fail("8:2:6", "7P = " + seven_p.to_string() + " differs from Q", "4.2.5");
  });
  add("4.2.6", "S-inner commutative implies S-commutative (the printed direction is the reverse)", 3, 8,
      [](Ctx& c, unsigned lo, unsigned hi) {
        each_pair(lo, hi, ClassTag::ZStarStarStar, [&](unsigned n, unsigned t, unsigned u) {
          const auto m = zn(n, t, u);
          if (s_subgroupoids(m).members.empty()) return;
          const bool sc = s_commutative(m);
          const bool sic = s_inner_commutative(m);
          c.expect(!sic || sc, sp(n, t, u), "S-inner commutative but not S-commutative");
          if (sc && !sic) c.fail(sp(n, t, u), "S-commutative but not S-inner commutative", "4.2.6-direction");
        });
      });
  add("4.3.1", "an SG satisfying Moufang everywhere is strong Moufang", 3, 8, [](Ctx& c, unsigned lo, unsigned hi) {
    each_pair(lo, hi, ClassTag::ZStarStarStar, [&](unsigned n, unsigned t, unsigned u) {
      const auto m = zn(n, t, u);
      if (!check_law(m, LawId::Moufang).holds || !smarandache_witness(m)) return;
      c.expect(s_law_both(m, LawId::Moufang, s_subgroupoids(m)).strong, sp(n, t, u), "not strong Moufang");
    });
  });
  add("4.3.2", "strong Moufang implies Moufang, not conversely", 3, 12,
      [](Ctx& c, unsigned lo, unsigned hi) { strong_weak(c, lo, hi, LawId::Moufang); });
  add("4.3.3", "an SG satisfying Bol everywhere is strong Bol", 3, 8, [](Ctx& c, unsigned lo, unsigned hi) {
    each_pair(lo, hi, ClassTag::ZStarStarStar, [&](unsigned n, unsigned t, unsigned u) {
      const auto m = zn(n, t, u);
      if (!check_law(m, LawId::Bol).holds || !smarandache_witness(m)) return;
      c.expect(s_law_both(m, LawId::Bol, s_subgroupoids(m)).strong, sp(n, t, u), "not strong Bol");
    });
  });
  add("4.3.4", "strong Bol implies Bol, not conversely", 3, 12,
      [](Ctx& c, unsigned lo, unsigned hi) { strong_weak(c, lo, hi, LawId::Bol); });
  add("4.3.5", "a strong P SG need not satisfy P everywhere", 3, 12, [](Ctx& c, unsigned lo, unsigned hi) {
    bool found = false;
    each_pair(lo, hi, ClassTag::ZStarStarStar, [&](unsigned n, unsigned t, unsigned u) {
      if (found) return;
      const auto m = zn(n, t, u);
      const auto subs = s_subgroupoids(m);
      if (subs.members.empty() || check_law(m, LawId::P).holds) return;
      found = s_law_both(m, LawId::P, subs).strong;
    });
    c.expect(found, "range", "no strong P SG violating P found");
  });
  add("4.3.6", "strong P implies P, not conversely", 3, 12,
      [](Ctx& c, unsigned lo, unsigned hi) { strong_weak(c, lo, hi, LawId::P); });
  add("4.3.7", "strong alternative implies alternative, not conversely", 3, 12,
      [](Ctx& c, unsigned lo, unsigned hi) { strong_weak(c, lo, hi, LawId::Alternative); });
  add("5.1.1", "Z(n), n > 5, t + u = 1 gives an SG", 6, 12, [](Ctx& c, unsigned lo, unsigned hi) {
    each_pair(lo, hi, ClassTag::Z, [&](unsigned n, unsigned t, unsigned u) {
      if (n > 5 && (t + u) % n == 1) c.expect(smarandache_witness(zn(n, t, u)).has_value(), sp(n, t, u), "not an SG");
    });
  });
  add("5.1.2", "Z_2p(1,2) is an SG with witness {p}", 6, 30, [](Ctx& c, unsigned lo, unsigned hi) {
    for (unsigned p = 3; 2 * p <= hi; ++p) {
      if (!is_prime(p) || 2 * p < lo) continue;
      c.expect(witness_ok(zn(2 * p, 1, 2), {p}), sp(2 * p, 1, 2), "{p} is not a semigroup");
    }
  });
  add("5.1.3", "Z_3p(1,3), p != 3 prime, is an SG", 6, 30, [](Ctx& c, unsigned lo, unsigned hi) {
    for (unsigned p = 2; 3 * p <= hi; ++p) {
      if (!is_prime(p) || p == 3 || 3 * p < lo) continue;
      c.expect(witness_ok(zn(3 * p, 1, 3), {p}), sp(3 * p, 1, 3), "{n/3} is not a semigroup");
    }
  });
  add("5.1.4", "Z_pq(1,p) and Z_pq(1,q) are SGs for distinct primes", 6, 30, [](Ctx& c, unsigned lo, unsigned hi) {
    for (unsigned n = std::max(lo, 6u); n <= hi; ++n) {
      const auto ps = prime_factors(n);
      if (ps.size() != 2 || ps[0] * ps[1] != n) continue;
      for (unsigned p : ps) c.expect(witness_ok(zn(n, 1, p), {n / p}), sp(n, 1, p), "{n/p} is not a semigroup");
    }
  });
  add("5.1.5", "Z_n(1,p) with prime p | n is an SG with witness {n/p}", 4, 30, [](Ctx& c, unsigned lo, unsigned hi) {
    for (unsigned n = std::max(lo, 3u); n <= hi; ++n) {
      for (unsigned p : prime_factors(n)) {
        if (p < n) c.expect(witness_ok(zn(n, 1, p), {n / p}), sp(n, 1, p), "{n/p} is not a semigroup");
      }
    }
  });
  add("5.1.6", "Z(n) has SGs for n > 3, n != 5 (and none for n = 3, 5)", 3, 12, [](Ctx& c, unsigned lo, unsigned hi) {
    for (unsigned n = std::max(lo, 3u); n <= hi; ++n) {
      std::size_t sgs = 0;
      for (auto [t, u] : enumerate_class(n, ClassTag::Z)) sgs += smarandache_witness(zn(n, t, u)).has_value();
      const bool expect_some = n > 3 && n != 5;
      c.expect((sgs > 0) == expect_some, std::to_string(n), std::to_string(sgs) + " SGs");
    }
  });
  add("5.1.7", "an SG in Z(n) with t + u = 1 is S-idempotent", 3, 12, [](Ctx& c, unsigned lo, unsigned hi) {
    each_pair(lo, hi, ClassTag::Z, [&](unsigned n, unsigned t, unsigned u) {
      const auto m = zn(n, t, u);
      if ((t + u) % n == 1 && smarandache_witness(m)) c.expect(s_idempotent(m), sp(n, t, u), "not S-idempotent");
    });
  });
  auto one_sum_law = [](const char* erratum, LawId law, bool bol) {
    return [=](Ctx& c, unsigned lo, unsigned hi) {
      each_pair(lo, hi, ClassTag::Z, [&](unsigned n, unsigned t, unsigned u) {
        const auto m = zn(n, t, u);
        if ((t + u) % n != 1 || !smarandache_witness(m)) return;
        const auto pf = predicted_flags(n, t, u);
        const bool pred = bol ? pf.strong_bol : pf.strong_p;
        const bool obs = check_law(m, law).holds;
        if (obs == pred) {
          ++c.r.checked;
          return;
        }
        ++c.r.checked;
        const std::string detail = std::string(law_name(law)) + " " + yn(obs) + ", predicted " + yn(pred);
        c.fail(sp(n, t, u), detail, obs && !pred && erratum[0] ? erratum : "");
      });
    };
  };
  add("5.1.8", "t + u = 1: P law iff t^2 = t and u^2 = u", 3, 12, one_sum_law("5.1.8-converse", LawId::P, false));
  add("5.1.9", "t + u = 1: alternative iff t^2 = t and u^2 = u", 3, 12,
      one_sum_law("", LawId::Alternative, false));
  add("5.1.10", "t + u = 1: Bol iff t^3 = t and u^2 = u", 3, 12, one_sum_law("", LawId::Bol, true));
  add("5.1.11", "t + u = 1: Moufang iff t^2 = t and u^2 = u", 3, 12, one_sum_law("", LawId::Moufang, false));
  add("5.2.1", "Z*(n) \\ Z(n) with t + u = 1 gives an SG", 3, 12, [](Ctx& c, unsigned lo, unsigned hi) {
    each_pair(lo, hi, ClassTag::ZStar, [&](unsigned n, unsigned t, unsigned u) {
      if (std::gcd(t, u) == 1 || (t + u) % n != 1) return;
      c.expect(smarandache_witness(zn(n, t, u)).has_value(), sp(n, t, u), "not an SG");
    });
  });
  add("5.2.2", "Z*(n) \\ Z(n), t + u = 1: Moufang, P, Bol, alternative and S-idempotent iff t^2 = t and u^2 = u", 3,
      12, [](Ctx& c, unsigned lo, unsigned hi) {
        each_pair(lo, hi, ClassTag::ZStar, [&](unsigned n, unsigned t, unsigned u) {
          if (std::gcd(t, u) == 1 || (t + u) % n != 1) return;
          const auto m = zn(n, t, u);
          if (!smarandache_witness(m)) return;
          bool obs = s_idempotent(m);
          for (LawId law : {LawId::Moufang, LawId::P, LawId::Bol, LawId::Alternative}) {
            obs = obs && check_law(m, law).holds;
          }
          const bool pred = predicted_flags(n, t, u).strong_moufang;
          c.expect(obs == pred, sp(n, t, u), "observed " + yn(obs) + ", predicted " + yn(pred));
        });
      });
  add("5.3.1", "Z_p((p+1)/2, (p+1)/2) is an SG", 3, 11, [](Ctx& c, unsigned lo, unsigned hi) {
    for (unsigned p = std::max(lo, 3u); p <= hi; ++p) {
      if (!is_prime(p)) continue;
      const unsigned h = (p + 1) / 2;
      c.expect(smarandache_witness(zn(p, h, h)).has_value(), sp(p, h, h), "not an SG");
    }
  });
  add("5.3.2", "Z_p((p+1)/2, (p+1)/2) is S-idempotent", 3, 11, [](Ctx& c, unsigned lo, unsigned hi) {
    for (unsigned p = std::max(lo, 3u); p <= hi; ++p) {
      if (!is_prime(p)) continue;
      const unsigned h = (p + 1) / 2;
      c.expect(s_idempotent(zn(p, h, h)), sp(p, h, h), "not S-idempotent");
    }
  });
  add("5.3.3", "odd n: Z_n((n+1)/2, (n+1)/2) is an SG", 3, 15, [](Ctx& c, unsigned lo, unsigned hi) {
    for (unsigned n = std::max(lo, 3u); n <= hi; ++n) {
      if (n % 2 == 0) continue;
      const unsigned h = (n + 1) / 2;
      c.expect(smarandache_witness(zn(n, h, h)).has_value(), sp(n, h, h), "not an SG");
    }
  });
  add("5.3.4", "even n with (n/2)^2 = 0: {0, n/2} is a semigroup of Z_n(n/2, n/2)", 4, 30,
      [](Ctx& c, unsigned lo, unsigned hi) {
        c.uses("5.3.4-coefficient");
        for (unsigned n = std::max(lo, 4u); n <= hi; ++n) {
          const unsigned h = n / 2;
          if (n % 2 || h * h % n != 0) continue;
          c.expect(witness_ok(zn(n, h, h), {0, h}), sp(n, h, h), "{0,n/2} is not a semigroup");
        }
      });
  add("5.3.5", "n even, m^2 = m, 2m = 0: {0,m} is a semigroup of Z_n(m,m)", 4, 30,
      [](Ctx& c, unsigned lo, unsigned hi) {
        for (unsigned n = std::max(lo, 4u); n <= hi; n += 1) {
          if (n % 2) continue;
          for (unsigned m = 1; m < n; ++m) {
            if (m * m % n == m && 2 * m % n == 0) c.expect(witness_ok(zn(n, m, m), {0, m}), sp(n, m, m), "no witness");
          }
        }
      });
  add("5.3.6", "2m = 1 makes Z_n(m,m) an SG (the printed 'only if' fails)", 3, 12,
      [](Ctx& c, unsigned lo, unsigned hi) {
        for (unsigned n = std::max(lo, 3u); n <= hi; ++n) {
          for (unsigned m = 1; m < n; ++m) {
            const bool sg = smarandache_witness(zn(n, m, m)).has_value();
            const bool cond = 2 * m % n == 1;
            if (cond) c.expect(sg, sp(n, m, m), "2m = 1 but not an SG");
            else if (sg) c.fail(sp(n, m, m), "SG although 2m != 1", "5.3.6-direction");
          }
        }
      });
  add("5.3.7", "SG Z_n(m,m) with 2m = 1 and m^2 = m is S-idempotent and strong P, Bol, Moufang, alternative", 3, 12,
      [](Ctx& c, unsigned lo, unsigned hi) {
        c.uses("5.3.7-vacuous");
        for (unsigned n = std::max(lo, 3u); n <= hi; ++n) {
          for (unsigned m = 1; m < n; ++m) {
            if (2 * m % n != 1 || m * m % n != m) continue;
            const auto g = zn(n, m, m);
            const auto subs = s_subgroupoids(g);
            bool ok = s_idempotent(g);
            for (LawId law : {LawId::P, LawId::Bol, LawId::Moufang, LawId::Alternative}) {
              ok = ok && s_law_both(g, law, subs).strong;
            }
            c.expect(ok, sp(n, m, m), "claim fails");
          }
        }
      });
  auto two_elem = [](const char* what, std::function<std::array<unsigned, 4>(unsigned)> pick) {
    return [=](Ctx& c, unsigned lo, unsigned hi) {
      for (unsigned n = std::max(lo, 4u); n <= hi; ++n) {
        if (n % 2) continue;
        const auto [t, u, a, b] = pick(n);
        c.expect(witness_ok(zn(n, t, u), {a, b}), sp(n, t, u), std::string(what) + " is not a semigroup");
      }
    };
  };
  add("5.4.1", "n = 2m: Z_n(2,0) has the semigroup {0,m}", 4, 30,
      two_elem("{0,m}", [](unsigned n) { return std::array<unsigned, 4>{2, 0, 0, n / 2}; }));
  add("5.4.2", "n = 2m: Z_n(0,2) has the semigroup {0,m}", 4, 30,
      two_elem("{0,m}", [](unsigned n) { return std::array<unsigned, 4>{0, 2, 0, n / 2}; }));
  add("5.4.3", "n = 2m: Z_n(m,0) has the semigroup {0,2}", 4, 30,
      two_elem("{0,2}", [](unsigned n) { return std::array<unsigned, 4>{n / 2, 0, 0, 2}; }));
  add("5.4.4", "n = 2m: Z_n(0,m) has the semigroup {0,2}", 4, 30,
      two_elem("{0,2}", [](unsigned n) { return std::array<unsigned, 4>{0, n / 2, 0, 2}; }));
  auto prime_div = [](bool zero_first, bool swap_roles) {
    return [=](Ctx& c, unsigned lo, unsigned hi) {
      c.uses("5.4.5-divides");
      for (unsigned n = std::max(lo, 4u); n <= hi; ++n) {
        for (unsigned p : prime_factors(n)) {
          if (p == n) continue;
          const unsigned coef = swap_roles ? n / p : p;
          const unsigned other = swap_roles ? p : n / p;
          const unsigned t = zero_first ? 0 : coef;
          const unsigned u = zero_first ? coef : 0;
          c.expect(witness_ok(zn(n, t, u), {0, other}), sp(n, t, u),
                   "{0," + std::to_string(other) + "} is not a semigroup");
        }
      }
    };
  };
  add("5.4.5", "prime p | n: Z_n(p,0) has the semigroup {0,n/p}", 4, 30, prime_div(false, false));
  add("5.4.6", "prime p | n: Z_n(0,p) has the semigroup {0,n/p}", 4, 30, prime_div(true, false));
  add("5.4.7", "prime p | n: Z_n(n/p,0) has the semigroup {0,p}", 4, 30, [](Ctx& c, unsigned lo, unsigned hi) {
    for (unsigned n = std::max(lo, 4u); n <= hi; ++n) {
      for (unsigned p : prime_factors(n)) {
        if (p < n) c.expect(witness_ok(zn(n, n / p, 0), {0, p}), sp(n, n / p, 0), "{0,p} is not a semigroup");
      }
    }
  });
  auto squarefree_count = [](bool both_sides) {
    return [=](Ctx& c, unsigned lo, unsigned hi) {
      for (unsigned n = std::max(lo, 4u); n <= hi; ++n) {
        const auto ps = prime_factors(n);
        if (ps.size() < 2 || !squarefree(n)) continue;
        const std::size_t k = ps.size();
        std::size_t found = 0;
        for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
          unsigned d = 1;
          for (std::size_t i = 0; i < k; ++i) {
            if (mask >> i & 1) d *= ps[i];
          }
          found += witness_ok(zn(n, d, 0), {0, n / d}) && smarandache_witness(zn(n, d, 0)).has_value();
          if (both_sides) found += witness_ok(zn(n, 0, d), {0, n / d}) && smarandache_witness(zn(n, 0, d)).has_value();
        }
        const std::size_t bound = ((std::size_t{1} << k) - 2) * (both_sides ? 2 : 1);
        c.expect(found >= bound, std::to_string(n),
                 "found " + std::to_string(found) + " of bound " + std::to_string(bound));
      }
    };
  };
  add("5.4.8", "squarefree n with m prime factors: at least 2^m - 2 SGs Z_n(d,0)", 6, 30, squarefree_count(false));
  add("5.4.9", "squarefree n: at least twice that many counting Z_n(0,d)", 6, 30, squarefree_count(true));
  add("5.4.10", "Z***(n) has SGs; Z_n(p^a,0) carries {0, n/p^a} when n is not a prime power", 4, 30,
      [](Ctx& c, unsigned lo, unsigned hi) {
        for (unsigned n = std::max(lo, 4u); n <= hi; ++n) {
          const auto ps = prime_factors(n);
          if (ps.size() >= 2) {
            for (unsigned p : ps) {
              unsigned q = 1;
              while (n % (q * p) == 0) q *= p;
              c.expect(witness_ok(zn(n, q, 0), {0, n / q}), sp(n, q, 0), "no {0,n/p^a} witness");
            }
          }
          bool any = false;
          for (auto [t, u] : enumerate_class(n, ClassTag::ZStarStarStar)) {
            if (smarandache_witness(zn(n, t, u))) {
              any = true;
              break;
            }
          }
          c.expect(any, std::to_string(n), "no SG in Z***(n)");
        }
      });
  add("5.4.11", "m^2 = m: Z_n(m,0) and Z_n(0,m) are strong Bol, Moufang, P and alternative SGs", 4, 12,
      [](Ctx& c, unsigned lo, unsigned hi) {
        for (unsigned n = std::max(lo, 4u); n <= hi; ++n) {
          for (unsigned m = 1; m < n; ++m) {
            if (m * m % n != m) continue;
            for (auto [t, u] : {std::pair{m, 0u}, std::pair{0u, m}}) {
              const auto g = zn(n, t, u);
              bool ok = smarandache_witness(g).has_value();
              const auto subs = s_subgroupoids(g);
              std::string bad;
              for (LawId law : {LawId::Bol, LawId::Moufang, LawId::P, LawId::Alternative}) {
                if (!s_law_both(g, law, subs).strong) bad += std::string(law_name(law)) + " ";
              }
              c.expect(ok && bad.empty(), sp(n, t, u), ok ? "not strong: " + bad : "not an SG");
            }
          }
        }
      });
  add("5.4.12", "Z_n(m,0) is an SG for every idempotent m != 0", 4, 30, [](Ctx& c, unsigned lo, unsigned hi) {
    for (unsigned n = std::max(lo, 4u); n <= hi; ++n) {
      for (unsigned m = 1; m < n; ++m) {
        if (m * m % n == m) c.expect(smarandache_witness(zn(n, m, 0)).has_value(), sp(n, m, 0), "not an SG");
      }
    }
  });
  add("5.5.1", "a product of k SGs has at least 2^k - 2 S-subgroupoids", 3, 4, [](Ctx& c, unsigned lo, unsigned hi) {
    std::vector<ZnSpec> sgs;
    each_pair(lo, hi, ClassTag::ZStarStarStar, [&](unsigned n, unsigned t, unsigned u) {
      if (smarandache_witness(zn(n, t, u))) sgs.push_back({n, t, u, false});
    });
    auto check = [&](const ZnSpec& a, const ZnSpec& b) {
      const auto r = s_subgroupoid_bound_check({build_zn(a), build_zn(b)});
      c.expect(r.ok && r.complete, format_spec(a) + " x " + format_spec(b),
               "found " + std::to_string(r.found) + " of bound " + std::to_string(r.bound));
    };
    for (const auto& a : sgs) {
      for (const auto& b : sgs) {
        if (a.n <= b.n) check(a, b);
      }
    }
    check({6, 1, 3, false}, {4, 2, 3, false});
  });
  add("5.6.1", "every adjoined groupoid is an SG through the groups {e,a}", 3, 10,
      [](Ctx& c, unsigned lo, unsigned hi) {
        each_pair(lo, hi, ClassTag::ZStarStarStar, [&](unsigned n, unsigned t, unsigned u) {
          const auto m = zn(n, t, u, true);
          for (Element a = 0; a < n; ++a) {
            c.expect(witness_ok(m, {a, static_cast<Element>(n)}), sp(n, t, u, true),
                     "{" + std::to_string(a) + ",e} is not a semigroup");
          }
        });
      });
  add("5.6.2", "no adjoined groupoid is S-idempotent", 3, 10, [](Ctx& c, unsigned lo, unsigned hi) {
    each_pair(lo, hi, ClassTag::ZStarStarStar, [&](unsigned n, unsigned t, unsigned u) {
      c.expect(!s_idempotent(zn(n, t, u, true)), sp(n, t, u, true), "S-idempotent");
    });
  });
  add("5.6.3", "adjoined: right alternative iff t^2 = 1 and tu + u = 0", 4, 12,
      [](Ctx& c, unsigned lo, unsigned hi) { adjoined_alt(c, lo, hi, LawId::RightAlt); });
  add("5.6.4", "adjoined: left alternative iff u^2 = 1 and t + tu = 0", 4, 12,
      [](Ctx& c, unsigned lo, unsigned hi) { adjoined_alt(c, lo, hi, LawId::LeftAlt); });
  add("5.6.5", "adjoined, n composite: Bol, Moufang and P only when t^2 = t and u^2 = u", 4, 12,
      [](Ctx& c, unsigned lo, unsigned hi) {
        each_pair(lo, hi, ClassTag::ZStarStarStar, [&](unsigned n, unsigned t, unsigned u) {
          if (is_prime(n)) return;
          const auto m = zn(n, t, u, true);
          bool all = true;
          bool vacuous = false;
          for (LawId law : {LawId::Bol, LawId::Moufang, LawId::P}) {
            const auto r = non_degenerate(m, law);
            all = all && r.holds;
            vacuous = vacuous || r.vacuous;
          }
          if (vacuous) return;
          const bool pred = t * t % n == t && u * u % n == u;
          c.expect(!all || pred, sp(n, t, u, true), "laws hold without the congruences");
        });
      });
  add("6.1.1", "run on a free word equals the run on its leaf sequence", 0, 0, [](Ctx& c, unsigned, unsigned) {
    std::mt19937 rng(611);
    const std::vector<SemiAutomaton> machines = {from_groupoids({4, 2, 1}, {6, 2, 1}),
                                                 from_groupoids({4, 3, 2}, {5, 2, 3}),
                                                 from_groupoids({3, 1, 2}, {4, 2, 2})};
    for (const auto& sa : machines) {
      std::function<FreeWord(int)> grow = [&](int leaves) -> FreeWord {
        if (leaves == 1) return FreeWord::leaf(static_cast<Letter>(rng() % sa.input_count));
        const int left = 1 + static_cast<int>(rng() % static_cast<unsigned>(leaves - 1));
        return FreeWord::join(grow(left), grow(leaves - left));
      };
      for (int i = 0; i < 1000; ++i) {
        const FreeWord w = grow(1 + static_cast<int>(rng() % 12));
        const State z = static_cast<State>(rng() % sa.state_count);
        c.expect(run_free(sa, z, w) == run_semi(sa, z, w.leaves()), w.to_string(), "tree shape changed the state");
      }
    }
  });
  add("6.2.1", "Z4(2,1) / Z6(2,1) machine: printed columns match, {0,2} closed", 0, 0, [](Ctx& c, unsigned, unsigned) {
    const auto printed = load_semi_fixture("ex_6_2_1");
    const auto built = from_groupoids({4, 2, 1}, {6, 2, 1});
    bool same = true;
    for (State z = 0; z < 4; ++z) {
      for (Letter a = 0; a < 4; ++a) same = same && printed.next(z, a) == built.next(z, a);
    }
    c.expect(same, "ex_6_2_1", "columns 0-3 differ");
    const SubsetMask half(4, {0, 2});
    const auto even = closed_state_sets(built, std::vector<Letter>{0, 2, 4});
    c.expect(std::find(even.begin(), even.end(), half) != even.end(), "ex_6_2_1", "{0,2} not closed under even letters");
    const auto all = closed_state_sets(built);
    if (std::find(all.begin(), all.end(), half) == all.end()) {
      c.fail("ex_6_2_1", "{0,2} is not closed under the full alphabet", "6.2.1-substates");
    }
  });
  add("6.2.4", "Z4(3,2) / Z5(2,3) automaton: tables match, {0,2} and {1,3} closed", 0, 0,
      [](Ctx& c, unsigned, unsigned) {
        const auto printed = load_automaton_fixture("ex_6_2_4");
        const auto built = from_groupoids({4, 3, 2}, {5, 2, 3}, {5, 2, 3});
        c.expect(printed.semi.delta == built.semi.delta, "ex_6_2_4", "delta differs");
        c.expect(printed.lambda == built.lambda, "ex_6_2_4", "lambda differs");
        const auto sets = closed_state_sets(built.semi);
        c.expect(sets == std::vector<SubsetMask>{SubsetMask(4, {0, 2}), SubsetMask(4, {1, 3})}, "ex_6_2_4",
                 "closed sets differ");
      });
  add("6.2.5", "Z5 / Z3 / Z4 automaton has no proper closed state set", 0, 0, [](Ctx& c, unsigned, unsigned) {
    const auto printed = load_automaton_fixture("ex_6_2_5");
    const auto built = from_groupoids({5, 3, 2}, {3, 0, 2}, {4, 2, 3});
    c.expect(closed_state_sets(printed.semi).empty(), "ex_6_2_5 printed", "printed machine has a closed set");
    c.expect(closed_state_sets(built.semi).empty(), "ex_6_2_5 built", "built machine has a closed set");
    const auto as_33 = from_groupoids({5, 3, 3}, {3, 0, 2});
    c.expect(printed.semi.delta == as_33.delta, "ex_6_2_5", "printed delta is not 3z + 3a");
    c.expect(printed.lambda == built.lambda, "ex_6_2_5", "lambda columns 0-2 differ");
    if (printed.semi.delta != built.semi.delta) {
      c.fail("ex_6_2_5", "printed delta uses coefficients (3,3) instead of (3,2)", "6.2.5-table");
    }
  });
  return e;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = build_registry();
  return r;
}

}  // namespace

std::vector<TheoremInfo> theorem_registry() {
  std::vector<TheoremInfo> out;
  for (const auto& e : registry()) out.push_back(e.info);
  return out;
}

VerificationReport verify_theorem(std::string_view id, std::optional<unsigned> lo, std::optional<unsigned> hi) {
  const auto& r = registry();
  auto it = std::find_if(r.begin(), r.end(), [&](const Entry& e) { return e.info.id == id; });
  if (it == r.end()) throw Error(ErrorCode::UnknownTheorem, std::string(id));
  VerificationReport rep;
  rep.id = it->info.id;
  rep.summary = it->info.summary;
  rep.lo = lo.value_or(it->info.lo);
  rep.hi = hi.value_or(it->info.hi);
  Ctx ctx{rep};
  it->run(ctx, rep.lo, rep.hi);
  for (const auto& key : rep.errata) {
    if (!find_erratum(key)) throw Error(ErrorCode::UnknownTheorem, "unregistered erratum " + key);
  }
  if (rep.unexplained_count > 0) {
    rep.status = VerifyStatus::Fail;
  } else if (!rep.errata.empty()) {
    rep.status = VerifyStatus::PassWithErrata;
  }
  return rep;
}

}  // namespace magma
