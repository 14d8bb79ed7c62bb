#include "magma/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "magma/errata.hpp"
#include "magma/error.hpp"
#include "magma/identities.hpp"
#include "magma/smarandache.hpp"
#include "magma/substructures.hpp"
#include "magma/zn.hpp"

#ifndef MAGMALAB_FIXTURE_DIR
#define MAGMALAB_FIXTURE_DIR "fixtures"
#endif

namespace magma {

namespace fs = std::filesystem;

std::string fixture_dir() {
  if (const char* env = std::getenv("MAGMA_FIXTURE_DIR"); env && *env) return env;
  return MAGMALAB_FIXTURE_DIR;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(fixture_dir(), ec)) {
    const auto ext = entry.path().extension();
    if (ext == ".cayley" || ext == ".machine") out.push_back(entry.path().stem().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

Fixture load_fixture(std::string_view name) {
  const fs::path dir(fixture_dir());
  const fs::path cayley = dir / (std::string(name) + ".cayley");
  const fs::path machine = dir / (std::string(name) + ".machine");
  if (fs::exists(cayley)) return parse_text(slurp(cayley));
  if (fs::exists(machine)) {
    auto parsed = parse_machine(slurp(machine));
    if (auto* sa = std::get_if<SemiAutomaton>(&parsed)) return *sa;
    return std::get<Automaton>(parsed);
  }
  throw Error(ErrorCode::UnknownFixture, std::string(name));
}

FiniteMagma load_magma_fixture(std::string_view name) {
  auto f = load_fixture(name);
  if (auto* m = std::get_if<FiniteMagma>(&f)) return *m;
  throw Error(ErrorCode::UnknownFixture, std::string(name) + " is not a Cayley table");
}

Automaton load_automaton_fixture(std::string_view name) {
  auto f = load_fixture(name);
  if (auto* a = std::get_if<Automaton>(&f)) return *a;
  throw Error(ErrorCode::UnknownFixture, std::string(name) + " is not an automaton");
}

SemiAutomaton load_semi_fixture(std::string_view name) {
  auto f = load_fixture(name);
  if (auto* s = std::get_if<SemiAutomaton>(&f)) return *s;
  if (auto* a = std::get_if<Automaton>(&f)) return a->semi;
  throw Error(ErrorCode::UnknownFixture, std::string(name) + " is not a machine");
}

namespace {

// Empty string: the claim holds. Otherwise a description of the mismatch.
using Outcome = std::string;

struct Claim {
  std::string fixture;
  std::string claim;
  std::function<Outcome()> check;
  // When set, the check confirms that the printed claim fails exactly as
  // registered.
  std::string erratum;
};


using Cell = std::pair<Element, Element>;

// Fixture position -> element of the reference magma. 'e' is the adjoined
// element n; other labels carry their index in their digits.
std::vector<Element> label_map(const FiniteMagma& printed, std::size_t n) {
  std::vector<Element> map(printed.order());
  for (std::size_t i = 0; i < printed.order(); ++i) map[i] = static_cast<Element>(i);
  if (!printed.has_labels()) return map;
  const auto& labels = printed.labels();
  const bool adjoined = std::find(labels.begin(), labels.end(), "e") != labels.end();
  if (!adjoined) return map;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == "e") {
      map[i] = static_cast<Element>(n);
      continue;
    }
    std::string digits;
    for (char ch : labels[i]) {
      if (std::isdigit(static_cast<unsigned char>(ch))) digits += ch;
    }
    map[i] = static_cast<Element>(std::stoul(digits) % n);
  }
  return map;
}

std::vector<Cell> table_diff(const FiniteMagma& printed, const FiniteMagma& ref, std::size_t n) {
  const auto map = label_map(printed, n);
  std::vector<Cell> out;
  for (Element i = 0; i < printed.order(); ++i) {
    for (Element j = 0; j < printed.order(); ++j) {
      if (map[printed.at(i, j)] != ref.at(map[i], map[j])) out.emplace_back(i, j);
    }
  }
  return out;
}

// Parsed tables carry no designated zero; fixtures of a Z_n groupoid get the
// position of residue 0 so that {0} counts as trivial.
class Cache {
 public:
  void set_zero(const std::string& name, std::size_t n) { zero_modulus_[name] = n; }

  const FiniteMagma& magma(const std::string& name) {
    std::lock_guard lock(mu_);
    auto it = magmas_.find(name);
    if (it == magmas_.end()) {
      FiniteMagma m = load_magma_fixture(name);
      if (auto z = zero_modulus_.find(name); z != zero_modulus_.end()) {
        const auto map = label_map(m, z->second);
        for (std::size_t i = 0; i < map.size(); ++i) {
          if (map[i] == 0) m = m.with_designated_zero(static_cast<Element>(i));
        }
      }
      it = magmas_.emplace(name, std::move(m)).first;
    }
    return it->second;
  }

 private:
  std::mutex mu_;
  std::map<std::string, std::size_t> zero_modulus_;
  std::map<std::string, FiniteMagma> magmas_;
};

Outcome describe(const std::vector<Cell>& diff) {
  if (diff.empty()) return {};
  return std::to_string(diff.size()) + " cells differ, first (" + std::to_string(diff[0].first) + "," +
         std::to_string(diff[0].second) + ")";
}

Outcome expect(bool got, bool want, const std::string& what) {
  if (got == want) return {};
  return what + " is " + (got ? "true" : "false");
}

Outcome all_of(std::initializer_list<Outcome> parts) {
  for (const auto& p : parts) {
    if (!p.empty()) return p;
  }
  return {};
}

Outcome family_is(const std::vector<SubsetMask>& got, std::vector<SubsetMask> want, const std::string& what) {
  std::sort(want.begin(), want.end());
  auto sorted = got;
  std::sort(sorted.begin(), sorted.end());
  if (sorted == want) return {};
  std::string s;
  for (const auto& x : sorted) s += x.to_string();
  return what + " are " + (s.empty() ? "none" : s);
}

std::vector<SubsetMask> nontrivial(const FiniteMagma& m, const std::vector<SubsetMask>& sets) {
  std::vector<SubsetMask> out;
  for (const auto& s : sets) {
    if (!is_trivial(m, s)) out.push_back(s);
  }
  return out;
}

std::vector<SubsetMask> singletons(std::size_t n, std::initializer_list<Element> elems) {
  std::vector<SubsetMask> out;
  for (Element e : elems) out.push_back(SubsetMask::singleton(n, e));
  return out;
}

bool law(const FiniteMagma& m, LawId id, std::optional<SubsetMask> domain = std::nullopt) {
  return check_law(m, id, domain).holds;
}

bool semigroup(const FiniteMagma& m, std::initializer_list<Element> elems) {
  return is_semigroup_witness(m, SubsetMask(m.order(), elems));
}

Outcome semigroups(const FiniteMagma& m, std::initializer_list<std::initializer_list<Element>> sets) {
  for (auto s : sets) {
    if (!semigroup(m, s)) return SubsetMask(m.order(), s).to_string() + " is not a semigroup";
  }
  return {};
}

Outcome closed(const FiniteMagma& m, std::initializer_list<std::initializer_list<Element>> sets) {
  for (auto s : sets) {
    if (!is_closed(m, SubsetMask(m.order(), s))) return SubsetMask(m.order(), s).to_string() + " is not closed";
  }
  return {};
}

std::vector<SubsetMask> ideals(const FiniteMagma& m, IdealSide side) { return enumerate_ideals(m, side).members; }

std::vector<Claim> build_claims(Cache& cache) {
  std::vector<Claim> c;
  auto M = [&cache](const std::string& name) -> const FiniteMagma& { return cache.magma(name); };
  auto add = [&](std::string fixture, std::string claim, std::function<Outcome()> fn, std::string erratum = {}) {
    c.push_back({std::move(fixture), std::move(claim), std::move(fn), std::move(erratum)});
  };
  auto is_zn = [&](const std::string& fixture, ZnSpec spec) {
    add(fixture, "table of " + format_spec(spec),
        [=, &cache] { return describe(table_diff(cache.magma(fixture), build_zn(spec), spec.n)); });
  };
  auto misprint = [&](const std::string& fixture, ZnSpec spec, std::vector<Cell> cells, std::string erratum) {
    add(fixture, "table of " + format_spec(spec) + " up to the registered misprint",
        [=, &cache]() -> Outcome {
          const auto diff = table_diff(cache.magma(fixture), build_zn(spec), spec.n);
          if (diff == cells) return {};
          return diff.empty() ? "no misprint present" : describe(diff) + ", not the registered cells";
        },
        std::move(erratum));
  };

  const std::vector<std::pair<std::string, ZnSpec>> tables = {
      {"ex_1_2_1", {5, 1, 4}},    {"ex_1_2_2", {3, 1, 2}},    {"ex_1_2_6", {4, 3, 2}},   {"ex_1_2_7", {12, 1, 3}},
      {"ex_1_4_1", {6, 1, 3}},    {"ex_1_4_3", {4, 2, 3}},    {"ex_2_1_1", {4, 1, 2}},   {"ex_2_1_2", {6, 2, 3}},
      {"ex_2_1_3", {12, 4, 9}},   {"ex_2_1_4", {10, 5, 6}},   {"ex_2_2_1", {9, 5, 3}},   {"ex_2_2_2", {5, 2, 4}},
      {"ex_2_2_3", {4, 3, 2}},    {"ex_2_2_4", {6, 2, 4}},    {"ex_2_2_5", {4, 2, 3}},   {"ex_2_2_7", {7, 3, 4}},
      {"ex_2_2_8", {7, 3, 4}},    {"ex_2_2_9", {10, 1, 2}},   {"ex_2_2_10", {12, 1, 3}}, {"ex_2_3_1", {12, 1, 4}},
      {"ex_2_3_3", {7, 2, 3}},    {"ex_2_3_4", {3, 1, 2}},    {"ex_2_3_5", {3, 2, 1}},   {"ex_3_1_1", {3, 1, 2}},
      {"ex_3_1_2", {3, 2, 1}},    {"ex_3_1_3", {7, 3, 4}},    {"ex_3_1_4_a", {4, 2, 3}}, {"ex_3_1_4_b", {4, 3, 2}},
      {"ex_3_1_5", {10, 3, 7}},   {"ex_3_2_1", {5, 2, 4}},    {"ex_3_2_2", {6, 2, 4}},   {"ex_3_2_3", {8, 2, 6}},
      {"ex_3_2_4", {12, 2, 10}},  {"ex_3_2_7", {12, 10, 8}},  {"ex_3_2_8", {10, 8, 4}},   {"ex_3_3_1", {5, 2, 2}},   {"ex_3_3_2", {7, 3, 3}},
      {"ex_3_3_3", {6, 2, 2}},    {"ex_3_3_4", {6, 5, 5}},    {"ex_3_4_1", {6, 3, 0}},   {"ex_3_4_2", {6, 0, 2}},
      {"ex_3_5_1", {3, 2, 2, true}}, {"ex_4_1_1", {6, 1, 3}}, {"ex_4_1_2", {10, 1, 5}},  {"ex_4_1_4", {3, 1, 2}},
      {"ex_4_1_5", {4, 2, 3}},    {"ex_4_1_6", {5, 2, 4}},    {"ex_4_1_7", {4, 2, 2}},   {"thm_4_2_1", {6, 4, 5}},
      {"ex_4_2_1", {6, 4, 5}},    {"ex_4_2_2", {6, 2, 4}},    {"ex_4_2_4", {8, 2, 6}},   {"ex_4_2_6", {12, 1, 3}},
      {"ex_4_2_7", {4, 2, 3}},    {"ex_4_2_8", {5, 3, 3}},    {"ex_4_3_1", {10, 5, 6}},  {"ex_4_3_2", {12, 3, 9}},
      {"ex_4_3_3", {12, 3, 4}},   {"ex_4_3_4", {4, 2, 3}},    {"ex_4_3_5", {6, 4, 3}},   {"ex_4_3_6", {4, 2, 3}},
      {"ex_4_3_7", {6, 3, 5}},    {"thm_4_3_6", {12, 5, 10}}, {"ex_4_3_8", {14, 7, 8}},  {"ex_4_4_3_a", {4, 2, 3}},
      {"ex_4_4_3_b", {6, 4, 5}},  {"ex_4_5_1", {5, 2, 2, true}}, {"ex_4_5_2", {5, 2, 4, true}},
      {"ex_4_5_3", {5, 2, 1, true}}, {"ex_5_1_1", {7, 5, 3}}, {"ex_5_1_2", {4, 3, 2}},   {"ex_5_1_3", {5, 1, 3}},
      {"ex_5_1_4", {5, 2, 1}},    {"ex_5_1_6", {8, 1, 6}},    {"ex_5_1_7", {10, 1, 2}},  {"ex_5_1_9", {6, 3, 4}},
      {"ex_5_2_1", {5, 2, 4}},    {"ex_5_2_2", {6, 2, 4}},    {"ex_5_2_3", {8, 2, 6}},   {"ex_5_3_1", {6, 2, 2}},
      {"ex_5_3_2", {9, 4, 4}},    {"ex_5_3_3_a", {3, 1, 1}},  {"ex_5_4_1", {5, 3, 0}},   {"ex_5_4_2", {6, 2, 0}},
      {"ex_5_4_4", {6, 3, 0}},    {"ex_5_6_1", {4, 2, 3, true}}, {"ex_5_6_2", {6, 5, 3, true}},
  };
  for (const auto& [name, spec] : tables) {
    // Abstract a_i labels: every singleton counts alike, so no element is designated trivial.
    if (name != "ex_4_1_4" && name != "ex_4_1_5") cache.set_zero(name, spec.n);
    is_zn(name, spec);
  }
  cache.set_zero("ex_5_5_3", 12);

  std::vector<Cell> row7;
  for (Element j = 0; j < 12; ++j) row7.emplace_back(7, j);
  for (const char* name : {"ex_4_3_9", "ex_5_1_5", "ex_5_6_3", "ex_5_3_3_b"}) cache.set_zero(name, 12);
  misprint("ex_4_3_9", {12, 1, 6}, row7, "misprint-4.3.9");
  misprint("ex_5_1_5", {9, 5, 3}, {{5, 6}, {5, 7}, {5, 8}}, "misprint-5.1.5");
  // Labels e,0..5: label 3 sits at position 4 and label 2 at position 3.
  misprint("ex_5_6_3", {6, 4, 5, true}, {{4, 3}}, "misprint-5.6.3");
  add("ex_5_3_3_b", "table of 3:2:2",
      [M]() -> Outcome {
        const auto& m = M("ex_5_3_3_b");
        if (!table_diff(m, build_zn({3, 2, 2}), 3).empty() && table_diff(m, build_zn({3, 1, 1}), 3).empty()) return {};
        return "printed table is not the registered copy of 3:1:1";
      },
      "misprint-5.3.3");

  for (auto [name, n, mm] : {std::tuple{"ex_1_5_1", 5u, 2u}, {"ex_1_5_2", 7u, 4u}, {"ex_1_5_4", 5u, 4u}}) {
    const std::string fixture = name;
    add(fixture, "loop L_" + std::to_string(n) + "(" + std::to_string(mm) + ")", [=, &cache] {
      const auto& m = cache.magma(fixture);
      return all_of({describe(table_diff(m, build_loop(n, mm), n)), expect(is_loop(m).holds, true, "loop")});
    });
  }
  add("ex_1_5_2", "commutative loop of order 8", [M] {
    const auto& m = M("ex_1_5_2");
    return all_of({expect(is_loop(m).holds, true, "loop"), expect(check_commutative(m).holds, true, "commutative"),
                   expect(m.order() == 8, true, "order 8")});
  });
  add("ex_5_5_3", "table of 3:2:1 x 4:1:3", [M] {
    const auto p = direct_product({build_zn({3, 2, 1}), build_zn({4, 1, 3})});
    return describe(table_diff(M("ex_5_5_3"), p, p.order()));
  });
  add("ex_5_5_3", "{(0,0),(0,1),(0,2),(0,3)} is an S-subgroupoid over {(0,0),(0,2)}", [M] {
    const auto& m = M("ex_5_5_3");
    return all_of({semigroups(m, {{0, 2}}), expect(is_s_subgroupoid(m, SubsetMask(12, {0, 1, 2, 3})), true,
                                                   "S-subgroupoid")});
  });

  add("ex_1_2_1", "non-commutative, no identity", [M] {
    const auto& m = M("ex_1_2_1");
    return all_of({expect(check_commutative(m).holds, false, "commutative"),
                   expect(basic_report(m).two_sided_identities.empty(), true, "identity-free")});
  });
  for (const char* name : {"ex_1_2_2", "ex_3_1_1", "ex_3_1_2"}) {
    add(name, "non-associative and non-commutative", [M, name = std::string(name)] {
      const auto& m = M(name);
      return all_of({expect(check_associative(m).holds, false, "associative"),
                     expect(check_commutative(m).holds, false, "commutative")});
    });
  }
  add("ex_1_2_6", "{a1,a3} and {a2,a4} are subgroupoids", [M] { return closed(M("ex_1_2_6"), {{0, 2}, {1, 3}}); });
  add("ex_1_2_7", "three subgroupoids of order 4",
      [M] { return closed(M("ex_1_2_7"), {{0, 3, 6, 9}, {2, 5, 8, 11}, {1, 4, 7, 10}}); });
  add("ex_1_4_1", "SG", [M] { return expect(smarandache_witness(M("ex_1_4_1")).has_value(), true, "SG"); });
  add("ex_1_4_3", "{a4} is a semigroup", [M] { return semigroups(M("ex_1_4_3"), {{3}}); });
  add("ex_2_1_1", "not Moufang", [M] { return expect(law(M("ex_2_1_1"), LawId::Moufang), false, "Moufang"); });
  add("ex_2_1_2", "Bol", [M] { return expect(law(M("ex_2_1_2"), LawId::Bol), true, "Bol"); });
  add("ex_2_1_3", "P-groupoid", [M] { return expect(law(M("ex_2_1_3"), LawId::P), true, "P"); });
  add("ex_2_1_4", "right alternative", [M] { return expect(law(M("ex_2_1_4"), LawId::RightAlt), true, "right alt"); });
  add("ex_2_2_2", "every singleton is a subgroupoid",
      [M] { return family_is(enumerate_closed(M("ex_2_2_2")).members, singletons(5, {0, 1, 2, 3, 4}), "closed sets"); });
  add("ex_2_2_3", "right ideals {a0,a2}, {a1,a3}; no left ideals", [M] {
    const auto& m = M("ex_2_2_3");
    return all_of({family_is(ideals(m, IdealSide::Right), {SubsetMask(4, {0, 2}), SubsetMask(4, {1, 3})},
                             "right ideals"),
                   family_is(ideals(m, IdealSide::Left), {}, "left ideals")});
  });
  add("ex_2_2_4", "{a0,a2,a4} is an ideal",
      [M] { return expect(is_ideal(M("ex_2_2_4"), SubsetMask(6, {0, 2, 4}), IdealSide::TwoSided).holds, true, "ideal"); });
  add("ex_2_2_5", "left ideals {a0,a2}, {a1,a3}; no right ideals", [M] {
    const auto& m = M("ex_2_2_5");
    return all_of({family_is(ideals(m, IdealSide::Left), {SubsetMask(4, {0, 2}), SubsetMask(4, {1, 3})},
                             "left ideals"),
                   family_is(ideals(m, IdealSide::Right), {}, "right ideals")});
  });
  add("ex_2_2_7", "simple", [M] { return expect(is_simple(M("ex_2_2_7")).simple, true, "simple"); });
  add("ex_2_2_8", "normal groupoid without a proper normal subgroupoid", [M] {
    const auto& m = M("ex_2_2_8");
    return all_of({expect(is_normal_groupoid(m).holds, true, "normal"), expect(is_simple(m).simple, true, "simple")});
  });
  add("ex_2_2_9", "not normal: a1*G is the odd residues, G*a1 = G", [M] {
    const auto& m = M("ex_2_2_9");
    const auto g = SubsetMask::full(10);
    return all_of({expect(is_normal_groupoid(m).holds, false, "normal"),
                   expect(left_multiple(m, 1, g) == SubsetMask(10, {1, 3, 5, 7, 9}), true, "a1*G odd"),
                   expect(right_multiple(m, g, 1) == g, true, "G*a1 = G")});
  });
  add("ex_2_2_10", "{a0,a3,a6,a9} and {a2,a5,a8,a11} are conjugate", [M] {
    const auto v = are_conjugate_subgroupoids(M("ex_2_2_10"), SubsetMask(12, {0, 3, 6, 9}),
                                              SubsetMask(12, {2, 5, 8, 11}));
    return expect(v.holds, true, "conjugate");
  });
  add("ex_2_3_1", "x0+4Z, ..., x3+4Z are commutative subgroupoids", [M] {
    const auto& m = M("ex_2_3_1");
    Outcome out = closed(m, {{0, 4, 8}, {1, 5, 9}, {2, 6, 10}, {3, 7, 11}});
    for (Element r = 0; r < 4; ++r) {
      const SubsetMask p(12, {r, r + 4, r + 8});
      out = all_of({out, expect(check_commutative(m, p).holds, true, p.to_string() + " commutative")});
    }
    return out;
  });
  add("ex_2_3_1", "the four cosets are all the subgroupoids; inner commutative",
      [M]() -> Outcome {
        const auto& m = M("ex_2_3_1");
        const auto r = is_inner_commutative(m);
        if (r.holds) return "inner commutative holds";
        if (enumerate_closed(m).members.size() != 29) return "closed-set count differs from 29";
        if (!closed(m, {{0, 3}}).empty() || check_commutative(m, SubsetMask(12, {0, 3})).holds) {
          return "{0,3} is not a non-commutative subgroupoid";
        }
        return {};
      },
      "2.3.1-inner");
  add("ex_2_3_3", "a*b = 0 does not force b*a = 0", [M] {
    const auto& m = M("ex_2_3_3");
    for (Element a = 0; a < m.order(); ++a) {
      for (Element b = 0; b < m.order(); ++b) {
        if (m.at(a, b) == 0 && m.at(b, a) != 0) return Outcome{};
      }
    }
    return Outcome{"every a*b = 0 has b*a = 0"};
  });
  add("ex_2_3_5", "(1,2) and (0,1) are conjugate pairs", [M] {
    const auto pairs = conjugate_pairs(M("ex_2_3_5"));
    auto has = [&](Element a, Element b) {
      return std::any_of(pairs.begin(), pairs.end(), [&](const ConjugatePair& p) {
        return (p.a == a && p.b == b) || (p.a == b && p.b == a);
      });
    };
    return all_of({expect(has(1, 2), true, "(1,2) conjugate"), expect(has(0, 1), true, "(0,1) conjugate")});
  });
  add("ex_3_1_3", "non-commutative", [M] { return expect(check_commutative(M("ex_3_1_3")).holds, false, "commutative"); });
  add("ex_3_1_4_a", "left ideals {0,2}, {1,3}, neither a right ideal", [M] {
    const auto& m = M("ex_3_1_4_a");
    return all_of({family_is(ideals(m, IdealSide::Left), {SubsetMask(4, {0, 2}), SubsetMask(4, {1, 3})},
                             "left ideals"),
                   family_is(ideals(m, IdealSide::Right), {}, "right ideals")});
  });
  add("ex_3_1_4_b", "right ideals {0,2}, {1,3}, neither a left ideal", [M] {
    const auto& m = M("ex_3_1_4_b");
    return all_of({family_is(ideals(m, IdealSide::Right), {SubsetMask(4, {0, 2}), SubsetMask(4, {1, 3})},
                             "right ideals"),
                   family_is(ideals(m, IdealSide::Left), {}, "left ideals")});
  });
  add("ex_3_2_1", "singletons are the only subgroupoids",
      [M] { return family_is(enumerate_closed(M("ex_3_2_1")).members, singletons(5, {0, 1, 2, 3, 4}), "closed sets"); });
  add("ex_3_2_2", "{0,2,4} is a subgroupoid", [M] { return closed(M("ex_3_2_2"), {{0, 2, 4}}); });
  add("ex_3_2_3", "{0,2,4,6} is a subgroupoid", [M] { return closed(M("ex_3_2_3"), {{0, 2, 4, 6}}); });
  add("ex_3_2_4", "{0,2,...,10} is a subgroupoid", [M] { return closed(M("ex_3_2_4"), {{0, 2, 4, 6, 8, 10}}); });
  add("ex_3_2_7", "{0,4,8} is a subgroupoid", [M] { return closed(M("ex_3_2_7"), {{0, 4, 8}}); });
  add("ex_3_2_7", "{2,6,10} is a subgroupoid",
      [M] {
        const auto& m = M("ex_3_2_7");
        return all_of({expect(m.at(2, 2) == 0, true, "2*2 = 0"),
                       expect(is_closed(m, SubsetMask(12, {2, 6, 10})), false, "{2,6,10} closed")});
      },
      "3.2.7-B");
  add("ex_3_2_8", "{0,2,4,6,8} is a subgroupoid", [M] { return closed(M("ex_3_2_8"), {{0, 2, 4, 6, 8}}); });
  add("ex_3_2_8", "{0,2,4,6,8} is the only subgroupoid",
      [M]() -> Outcome {
        const auto& m = M("ex_3_2_8");
        if (enumerate_closed(m).members.size() != 33) return "closed-set count differs from 33";
        return closed(m, {{0, 5}});
      },
      "3.2.8-only");
  for (const char* name : {"ex_3_3_1", "ex_3_3_2"}) {
    add(name, "commutative, non-associative, no subgroupoid beyond {0}", [M, name = std::string(name)] {
      const auto& m = M(name);
      return all_of({expect(check_commutative(m).holds, true, "commutative"),
                     expect(check_associative(m).holds, false, "associative"),
                     family_is(nontrivial(m, enumerate_closed(m).members), {}, "non-trivial closed sets")});
    });
  }
  add("ex_3_3_3", "commutative with subgroupoid {0,2,4}", [M] {
    const auto& m = M("ex_3_3_3");
    return all_of({expect(check_commutative(m).holds, true, "commutative"), closed(m, {{0, 2, 4}})});
  });
  add("ex_3_4_1", "non-commutative with subgroupoid {0,3}", [M] {
    const auto& m = M("ex_3_4_1");
    return all_of({expect(check_commutative(m).holds, false, "commutative"), closed(m, {{0, 3}})});
  });
  add("ex_3_4_2", "non-commutative with subgroupoid {0,2,4}", [M] {
    const auto& m = M("ex_3_4_2");
    return all_of({expect(check_commutative(m).holds, false, "commutative"), closed(m, {{0, 2, 4}})});
  });
  add("ex_3_5_1", "e is the identity", [M] {
    return expect(basic_report(M("ex_3_5_1")).two_sided_identities == std::vector<Element>{0}, true, "e identity");
  });
  add("ex_4_1_1", "{0,3}, {1,4}, {2,5} are semigroups", [M] { return semigroups(M("ex_4_1_1"), {{0, 3}, {1, 4}, {2, 5}}); });
  add("ex_4_1_2", "{0,5} is a semigroup", [M] { return semigroups(M("ex_4_1_2"), {{0, 5}}); });
  add("ex_4_1_4", "non-commutative, S-commutative through {a1}", [M] {
    const auto& m = M("ex_4_1_4");
    return all_of({expect(check_commutative(m).holds, false, "commutative"), semigroups(m, {{0}}),
                   expect(s_commutative(m), true, "S-commutative")});
  });
  add("ex_4_1_5", "non-commutative, S-commutative; the singletons are the only semigroups", [M] {
    const auto& m = M("ex_4_1_5");
    return all_of({expect(check_commutative(m).holds, false, "commutative"),
                   expect(s_commutative(m), true, "S-commutative"),
                   semigroups(m, {{0}, {1}, {2}, {3}})});
  });
  add("ex_4_1_5", "the singletons are the only semigroups",
      [M]() -> Outcome {
        const auto& m = M("ex_4_1_5");
        auto extra = enumerate_subsemigroups(m).members;
        std::erase_if(extra, [](const SubsetMask& s) { return s.count() == 1; });
        return family_is(extra, {SubsetMask(4, {0, 2}), SubsetMask(4, {1, 3})}, "non-singleton semigroups");
      },
      "4.1.5-semigroups");
  add("ex_4_1_6", "non-commutative, S-commutative; the singletons are the only semigroups", [M] {
    const auto& m = M("ex_4_1_6");
    return all_of({expect(check_commutative(m).holds, false, "commutative"),
                   expect(s_commutative(m), true, "S-commutative"),
                   family_is(enumerate_subsemigroups(m, SPolicy{false, 1}).members,
                             singletons(5, {0, 1, 2, 3, 4}), "semigroups")});
  });
  add("ex_4_1_7", "commutative SG through {0,2}", [M] {
    const auto& m = M("ex_4_1_7");
    return all_of({expect(check_commutative(m).holds, true, "commutative"), semigroups(m, {{0, 2}}),
                   expect(s_commutative(m), true, "S-commutative")});
  });
  for (const char* name : {"ex_4_2_1", "thm_4_2_1"}) {
    add(name, "{1,3,5} is an S-left ideal, not an S-right ideal; {3} is a semigroup", [M, name = std::string(name)] {
      const auto& m = M(name);
      const SubsetMask a(6, {1, 3, 5});
      return all_of({semigroups(m, {{3}}), expect(s_ideal(m, a, IdealSide::Left), true, "S-left ideal"),
                     expect(s_ideal(m, a, IdealSide::Right), false, "S-right ideal")});
    });
  }
  add("ex_4_2_2", "{0,3} is a semigroup; {0,2,4} is an ideal but not an S-subgroupoid", [M] {
    const auto& m = M("ex_4_2_2");
    const SubsetMask q(6, {0, 2, 4});
    return all_of({semigroups(m, {{0, 3}}), expect(is_ideal(m, q, IdealSide::TwoSided).holds, true, "ideal"),
                   expect(is_s_subgroupoid(m, q), false, "S-subgroupoid")});
  });
  add("ex_4_2_4", "{0,4} is a semigroup; {0,2,4,6} is S-normal", [M] {
    const auto& m = M("ex_4_2_4");
    const SubsetMask a(8, {0, 2, 4, 6});
    return all_of({semigroups(m, {{0, 4}}), expect(is_s_subgroupoid(m, a), true, "S-subgroupoid"),
                   expect(s_normal(m, a), true, "S-normal")});
  });
  add("ex_4_2_4", "aA = A for every a",
      [M]() -> Outcome {
        const auto& m = M("ex_4_2_4");
        const SubsetMask a(8, {0, 2, 4, 6});
        for (Element x = 0; x < 8; ++x) {
          if (left_multiple(m, x, a).count() != 2 || right_multiple(m, a, x).count() != 2) {
            return "a*A or A*a is not a two-element set for a = " + std::to_string(x);
          }
        }
        return {};
      },
      "4.2.4-normal");
  add("ex_4_2_6", "A1 = {0,3,6,9} and A2 = {2,5,8,11} are S-conjugate with 3*A2 = A1, 2*A1 = A2", [M] {
    const auto& m = M("ex_4_2_6");
    const SubsetMask a1(12, {0, 3, 6, 9});
    const SubsetMask a2(12, {2, 5, 8, 11});
    return all_of({semigroups(m, {{0, 6}, {8}}), expect(is_s_subgroupoid(m, a1), true, "A1 S-subgroupoid"),
                   expect(is_s_subgroupoid(m, a2), true, "A2 S-subgroupoid"),
                   expect(left_multiple(m, 3, a2) == a1, true, "3*A2 = A1"),
                   expect(left_multiple(m, 2, a1) == a2, true, "2*A1 = A2"),
                   expect(s_conjugate(m, a1, a2), true, "S-conjugate")});
  });
  add("ex_4_2_7", "{0,2}, {1,3} are non-commutative S-subgroupoids", [M] {
    const auto& m = M("ex_4_2_7");
    Outcome out = semigroups(m, {{1}, {2}});
    for (const auto& s : {SubsetMask(4, {0, 2}), SubsetMask(4, {1, 3})}) {
      out = all_of({out, expect(is_s_subgroupoid(m, s), true, s.to_string() + " S-subgroupoid"),
                    expect(check_commutative(m, s).holds, false, s.to_string() + " commutative")});
    }
    return out;
  });
  add("ex_4_2_7", "S-inner commutative",
      [M]() -> Outcome {
        const auto& m = M("ex_4_2_7");
        if (s_inner_commutative(m)) return "S-inner commutative holds";
        const SubsetMask a1(4, {0, 2});
        if (!check_associative(m, a1).holds || check_commutative(m, a1).holds) {
          return "{0,2} is not a non-commutative semigroup";
        }
        return {};
      },
      "4.2.7-inner");
  add("ex_4_2_8", "commutative, S-inner commutative", [M] {
    const auto& m = M("ex_4_2_8");
    return all_of({expect(check_commutative(m).holds, true, "commutative"), semigroups(m, {{1}, {2}, {3}, {4}}),
                   expect(s_inner_commutative(m), true, "S-inner commutative")});
  });
  add("ex_4_2_9", "non-commutative, non-associative SG through {a,c}; S-inner commutative", [M] {
    const auto& m = M("ex_4_2_9");
    return all_of({expect(check_commutative(m).holds, false, "commutative"),
                   expect(check_associative(m).holds, false, "associative"),
                   expect(m.at(0, 1) == 2 && m.at(1, 0) == 0, true, "a*b = c, b*a = a"), semigroups(m, {{0, 2}}),
                   expect(s_inner_commutative(m), true, "S-inner commutative")});
  });
  add("ex_4_3_1", "{2} is a semigroup; Moufang everywhere; strong Moufang", [M] {
    const auto& m = M("ex_4_3_1");
    return all_of({semigroups(m, {{2}}), expect(law(m, LawId::Moufang), true, "Moufang"),
                   expect(s_law(m, LawId::Moufang, SLawStrength::Strong).holds, true, "strong Moufang")});
  });
  add("ex_4_3_2", "{0,4,8} satisfies Moufang, {0,3,6,9} does not; S-Moufang but not strong", [M] {
    const auto& m = M("ex_4_3_2");
    const SubsetMask a1(12, {0, 4, 8});
    const SubsetMask a2(12, {0, 3, 6, 9});
    return all_of({semigroups(m, {{0, 4}, {0, 6}}), expect(is_s_subgroupoid(m, a1), true, "A1 S-subgroupoid"),
                   expect(is_s_subgroupoid(m, a2), true, "A2 S-subgroupoid"),
                   expect(law(m, LawId::Moufang, a1), true, "Moufang on A1"),
                   expect(law(m, LawId::Moufang, a2), false, "Moufang on A2"),
                   expect(s_law(m, LawId::Moufang, SLawStrength::Weak).holds, true, "S-Moufang"),
                   expect(s_law(m, LawId::Moufang, SLawStrength::Strong).holds, false, "strong Moufang")});
  });
  add("ex_4_3_3", "{2}, {4}, {10} are semigroups; Bol everywhere", [M] {
    const auto& m = M("ex_4_3_3");
    return all_of({semigroups(m, {{2}, {4}, {10}}), expect(law(m, LawId::Bol), true, "Bol"),
                   expect(s_law(m, LawId::Bol, SLawStrength::Strong).holds, true, "strong Bol")});
  });
  add("ex_4_3_4", "{0,2} is an S-subgroupoid satisfying Bol; Bol fails globally", [M] {
    const auto& m = M("ex_4_3_4");
    const SubsetMask a(4, {0, 2});
    return all_of({semigroups(m, {{2}}), expect(is_s_subgroupoid(m, a), true, "S-subgroupoid"),
                   expect(law(m, LawId::Bol, a), true, "Bol on {0,2}"), expect(law(m, LawId::Bol), false, "Bol")});
  });
  add("ex_4_3_5", "singletons {1}..{4} are semigroups; P everywhere", [M] {
    const auto& m = M("ex_4_3_5");
    return all_of({semigroups(m, {{1}, {2}, {3}, {4}}), expect(law(m, LawId::P), true, "P"),
                   expect(s_law(m, LawId::P, SLawStrength::Strong).holds, true, "strong P")});
  });
  add("ex_4_3_6", "{2} and {3} are semigroups; strong P", [M] {
    const auto& m = M("ex_4_3_6");
    return all_of({semigroups(m, {{2}, {3}}), expect(s_law(m, LawId::P, SLawStrength::Strong).holds, true,
                                                    "strong P")});
  });
  add("thm_4_3_6", "{6} is a semigroup, {0,6} satisfies P, P fails globally", [M] {
    const auto& m = M("thm_4_3_6");
    const SubsetMask a(12, {0, 6});
    return all_of({semigroups(m, {{6}}), expect(law(m, LawId::P, a), true, "P on {0,6}"),
                   expect(law(m, LawId::P), false, "P")});
  });
  add("ex_4_3_7", "{0,3} is a semigroup satisfying P; P fails globally", [M] {
    const auto& m = M("ex_4_3_7");
    return all_of({semigroups(m, {{0, 3}}), expect(law(m, LawId::P, SubsetMask(6, {0, 3})), true, "P on {0,3}"),
                   expect(law(m, LawId::P), false, "P")});
  });
  add("ex_4_3_8", "{4} is a semigroup; alternative everywhere; strong alternative", [M] {
    const auto& m = M("ex_4_3_8");
    return all_of({semigroups(m, {{4}}), expect(law(m, LawId::Alternative), true, "alternative"),
                   expect(s_law(m, LawId::Alternative, SLawStrength::Strong).holds, true, "strong alternative")});
  });
  add("ex_4_3_9", "{2}, {4}, {8} are semigroups; {4,10} is alternative, {1,7} is not", [M] {
    const auto m = build_zn({12, 1, 6});
    return all_of({semigroups(m, {{2}, {4}, {8}}),
                   expect(law(m, LawId::Alternative, SubsetMask(12, {4, 10})), true, "alternative on {4,10}"),
                   expect(law(m, LawId::Alternative, SubsetMask(12, {1, 7})), false, "alternative on {1,7}"),
                   expect(s_law(m, LawId::Alternative, SLawStrength::Strong).holds, false, "strong alternative")});
  });
  add("ex_4_4_3_a", "{3} in 4:2:3 and {3} in 6:4:5 are S-isomorphic", [M] {
    return expect(s_isomorphic(M("ex_4_4_3_a"), SubsetMask(4, {3}), M("ex_4_4_3_b"), SubsetMask(6, {3})), true,
                  "S-isomorphic");
  });
  add("ex_4_5_1", "every {e,a_i} is a semigroup", [M] {
    const auto& m = M("ex_4_5_1");
    for (Element a = 1; a < m.order(); ++a) {
      if (!semigroup(m, {0, a})) return SubsetMask(m.order(), {0, a}).to_string() + " is not a semigroup";
    }
    return Outcome{};
  });
  add("ex_4_5_2", "loop", [M] { return expect(is_loop(M("ex_4_5_2")).holds, true, "loop"); });
  add("ex_4_5_3", "not a loop", [M] { return expect(is_loop(M("ex_4_5_3")).holds, false, "loop"); });
  add("ex_5_1_1", "singletons {1}..{6} are semigroups",
      [M] { return semigroups(M("ex_5_1_1"), {{1}, {2}, {3}, {4}, {5}, {6}}); });
  add("ex_5_1_2", "{1}, {2}, {3} are semigroups", [M] { return semigroups(M("ex_5_1_2"), {{1}, {2}, {3}}); });
  for (const char* name : {"ex_5_1_3", "ex_5_1_4", "ex_5_4_1"}) {
    add(name, "not an SG", [M, name = std::string(name)] {
      return expect(smarandache_witness(M(name)).has_value(), false, "SG");
    });
  }
  add("ex_5_1_5", "{0,3,6} and {1,2,4,5,7,8} are subgroupoids; not an SG", [M] {
    const auto m = build_zn({9, 5, 3});
    return all_of({closed(m, {{0, 3, 6}, {1, 2, 4, 5, 7, 8}}),
                   expect(smarandache_witness(m).has_value(), false, "SG")});
  });
  add("ex_5_1_5", "those are the only subgroupoids",
      [M]() -> Outcome {
        const auto m = build_zn({9, 5, 3});
        const auto got = nontrivial(m, enumerate_closed(m).members);
        if (got.size() == 2) return "only the listed subgroupoids";
        return all_of({expect(got.size() == 3, true, "three non-trivial closed sets"), closed(m, {{3, 6}})});
      },
      "5.1.5-subgroupoids");  add("ex_5_1_6", "{4} is a semigroup", [M] { return semigroups(M("ex_5_1_6"), {{4}}); });
  add("ex_5_1_7", "{5} is a semigroup", [M] { return semigroups(M("ex_5_1_7"), {{5}}); });
  add("ex_5_1_9", "Bol everywhere", [M] {
    const auto& m = M("ex_5_1_9");
    return all_of({expect(law(m, LawId::Bol), true, "Bol"),
                   expect(s_law(m, LawId::Bol, SLawStrength::Strong).holds, true, "strong Bol")});
  });
  add("ex_5_2_1", "{1}..{4} are semigroups", [M] { return semigroups(M("ex_5_2_1"), {{1}, {2}, {3}, {4}}); });
  add("ex_5_2_2", "{0,3} is a semigroup", [M] { return semigroups(M("ex_5_2_2"), {{0, 3}}); });
  add("ex_5_2_3", "{0,4} is a semigroup", [M] { return semigroups(M("ex_5_2_3"), {{0, 4}}); });
  add("ex_5_3_1", "{4} is a semigroup", [M] { return semigroups(M("ex_5_3_1"), {{4}}); });
  add("ex_5_3_2", "commutative", [M] { return expect(check_commutative(M("ex_5_3_2")).holds, true, "commutative"); });
  add("ex_5_3_2", "not an SG",
      [M]() -> Outcome {
        const auto& m = M("ex_5_3_2");
        if (!smarandache_witness(m)) return "no semigroup found";
        return semigroups(m, {{0, 3, 6}});
      },
      "5.3.2-sg");
  add("ex_5_3_3_a", "semigroup", [M] { return expect(check_associative(M("ex_5_3_3_a")).holds, true, "associative"); });
  add("ex_5_3_3_b", "3:2:2 is an SG through {1} and {2}",
      [M] { return semigroups(build_zn({3, 2, 2}), {{1}, {2}}); });
  add("ex_5_4_1", "non-associative and non-commutative", [M] {
    const auto& m = M("ex_5_4_1");
    return all_of({expect(check_associative(m).holds, false, "associative"),
                   expect(check_commutative(m).holds, false, "commutative")});
  });
  add("ex_5_4_2", "{0,3} is a semigroup", [M] { return semigroups(M("ex_5_4_2"), {{0, 3}}); });
  add("ex_5_6_1", "{e,m} is a semigroup for m = 1, 2, 3", [M] { return semigroups(M("ex_5_6_1"), {{0, 2}, {0, 3}, {0, 4}}); });
  add("ex_5_6_2", "right alternative on non-degenerate triples", [M] {
    const auto m = build_zn({6, 5, 3, true});
    return expect(check_law(m, LawId::RightAlt, std::nullopt, true).holds, true, "non-degenerate right alt");
  });
  add("ex_5_6_2", "not S-left alternative",
      [M]() -> Outcome {
        const auto m = build_zn({6, 5, 3, true});
        if (!s_law(m, LawId::LeftAlt, SLawStrength::Weak).holds) return "weak S-left alternative fails";
        const SubsetMask h(7, {5, 6});
        if (!is_s_subgroupoid(m, h) || !check_law(m, LawId::LeftAlt, h).holds) return "{5,e} is not a left alternative S-subgroupoid";
        return {};
      },
      "5.6.2-left");
  add("ex_5_6_3", "left alternative on non-degenerate triples; not right alternative", [M] {
    const auto m = build_zn({6, 4, 5, true});
    return all_of({expect(check_law(m, LawId::LeftAlt, std::nullopt, true).holds, true, "non-degenerate left alt"),
                   expect(law(m, LawId::RightAlt), false, "right alternative")});
  });
  add("ex_5_6_3", "left alternative on the full carrier",
      [M]() -> Outcome {
        const auto m = build_zn({6, 4, 5, true});
        const auto r = check_law(m, LawId::LeftAlt);
        if (r.holds) return "full-domain left alternative holds";
        if (r.witness->elems[0] != 1 || r.witness->elems[1] != 3) return "first failure is " + r.witness->to_string();
        return {};
      },
      "5.6.3-degenerate");

  // Machines.
  add("ex_6_1_1", "delta(2,0) = 1 and every letter 1 leads to state 1", [] {
    const auto sa = load_semi_fixture("ex_6_1_1");
    return all_of({expect(sa.next(2, 0) == 1 && sa.next(0, 0) == 0 && sa.next(1, 0) == 0, true, "letter 0 column"),
                   expect(sa.next(0, 1) == 1 && sa.next(1, 1) == 1 && sa.next(2, 1) == 1, true, "letter 1 column")});
  });
  add("ex_6_1_2", "parity check: the final state is the parity of the ones", []() -> Outcome {
    const auto at = load_automaton_fixture("ex_6_1_2");
    for (unsigned len = 0; len <= 8; ++len) {
      for (unsigned bits = 0; bits < (1u << len); ++bits) {
        InputWord w;
        for (unsigned i = 0; i < len; ++i) w.push_back(bits >> i & 1u);
        const auto r = run_auto(at, 0, w);
        if (r.final_state != static_cast<State>(std::count(w.begin(), w.end(), 1u) % 2)) return "parity broken";
        if (r.output != w) return "output is not the input";
      }
    }
    return {};
  });
  add("ex_6_2_1", "columns 0-3 of the 4:2:1 / 6:2:1 machine", []() -> Outcome {
    const auto printed = load_semi_fixture("ex_6_2_1");
    const auto built = from_groupoids({4, 2, 1}, {6, 2, 1});
    for (State z = 0; z < 4; ++z) {
      for (Letter a = 0; a < 4; ++a) {
        if (printed.next(z, a) != built.next(z, a)) return "cell (" + std::to_string(z) + "," + std::to_string(a) + ")";
      }
    }
    return {};
  });
  add("ex_6_2_1", "{0,2} is a sub semi-automaton",
      []() -> Outcome {
        const auto built = from_groupoids({4, 2, 1}, {6, 2, 1});
        const SubsetMask half(4, {0, 2});
        const auto all = closed_state_sets(built);
        const auto even = closed_state_sets(built, std::vector<Letter>{0, 2, 4});
        if (std::find(all.begin(), all.end(), half) != all.end()) return "{0,2} is closed";
        if (std::find(even.begin(), even.end(), half) == even.end()) return "{0,2} not closed under even letters";
        return {};
      },
      "6.2.1-substates");
  add("ex_6_2_2", "delta is the 3:1:2 product of state and letter",
      []() -> Outcome {
        const auto printed = load_semi_fixture("ex_6_2_2");
        const auto stated = from_groupoids({3, 1, 2}, {4, 2, 2});
        const auto coefficients = from_groupoids({3, 2, 2}, {4, 2, 2});
        if (printed.delta == stated.delta) return "printed table matches the stated operation";
        if (printed.delta != coefficients.delta) return "printed table is not (2z + 2a) mod 3";
        return {};
      },
      "6.2.2-operation");
  add("ex_6_2_3", "4:2:2 / 3:1:2 machine with sub semi-automaton {0,2}", [] {
    const auto printed = load_semi_fixture("ex_6_2_3");
    const auto built = from_groupoids({4, 2, 2}, {3, 1, 2});
    const auto sets = closed_state_sets(printed);
    return all_of({expect(printed.delta == built.delta, true, "delta equal"),
                   expect(std::find(sets.begin(), sets.end(), SubsetMask(4, {0, 2})) != sets.end(), true,
                          "{0,2} closed")});
  });
  add("ex_6_2_4", "delta and lambda equal the 4:3:2 / 5:2:3 / 5:2:3 machine; sub automata {0,2}, {1,3}", [] {
    const auto printed = load_automaton_fixture("ex_6_2_4");
    const auto built = from_groupoids({4, 3, 2}, {5, 2, 3}, {5, 2, 3});
    return all_of({expect(printed.semi.delta == built.semi.delta, true, "delta equal"),
                   expect(printed.lambda == built.lambda, true, "lambda equal"),
                   family_is(closed_state_sets(printed.semi), {SubsetMask(4, {0, 2}), SubsetMask(4, {1, 3})},
                             "closed state sets")});
  });
  add("ex_6_2_5", "no proper sub automaton; lambda equals the 4:2:3 output", [] {
    const auto printed = load_automaton_fixture("ex_6_2_5");
    const auto built = from_groupoids({5, 3, 2}, {3, 0, 2}, {4, 2, 3});
    return all_of({family_is(closed_state_sets(printed.semi), {}, "closed state sets"),
                   family_is(closed_state_sets(built.semi), {}, "closed state sets of the stated machine"),
                   expect(printed.lambda == built.lambda, true, "lambda equal")});
  });
  add("ex_6_2_5", "delta is built from 5:3:2",
      []() -> Outcome {
        const auto printed = load_automaton_fixture("ex_6_2_5");
        const auto stated = from_groupoids({5, 3, 2}, {3, 0, 2});
        const auto coefficients = from_groupoids({5, 3, 3}, {3, 0, 2});
        if (printed.semi.delta == stated.delta) return "printed delta matches 5:3:2";
        if (printed.semi.delta != coefficients.delta) return "printed delta is not 3z + 3a";
        return {};
      },
      "6.2.5-table");
  return c;
}

}  // namespace

FixtureReport fixture_check_all() {
  Cache cache;
  FixtureReport report;
  for (const auto& claim : build_claims(cache)) {
    FixtureCheck check{claim.fixture, claim.claim, VerifyStatus::Pass, {}, claim.erratum};
    try {
      check.detail = claim.check();
    } catch (const Error& e) {
      check.detail = e.what();
      check.erratum.clear();
    }
    if (!claim.erratum.empty() && !find_erratum(claim.erratum)) check.detail = "unregistered erratum";
    if (!check.detail.empty()) {
      check.status = VerifyStatus::Fail;
      ++report.failed;
    } else if (!check.erratum.empty()) {
      check.status = VerifyStatus::PassWithErrata;
      ++report.with_errata;
    } else {
      ++report.passed;
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace magma
