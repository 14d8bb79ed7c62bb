#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "magma/automata.hpp"
#include "magma/census.hpp"
#include "magma/errata.hpp"
#include "magma/error.hpp"
#include "magma/fixtures.hpp"
#include "magma/identities.hpp"
#include "magma/smarandache.hpp"
#include "magma/substructures.hpp"
#include "magma/verify.hpp"
#include "magma/zn.hpp"

using namespace magma;

namespace {

constexpr int kOk = 0;
constexpr int kFailures = 1;
constexpr int kUsage = 2;

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const unsigned n = static_cast<unsigned>(std::stoul(text));
      return {n, n};
    }
    return {static_cast<unsigned>(std::stoul(text.substr(0, dots))),
            static_cast<unsigned>(std::stoul(text.substr(dots + 2)))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidSpec, "bad range '" + text + "'");
  }
}

std::vector<LawId> parse_laws(const std::string& text) {
  if (text.empty() || text == "all") return {kAllLaws.begin(), kAllLaws.end()};
  std::vector<LawId> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_law(item));
  return out;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

int cmd_table(const std::string& spec) {
  std::cout << to_text(build_zn(parse_spec(spec)));
  return kOk;
}

int cmd_check(const std::string& spec, const std::string& laws, const std::string& domain) {
  const auto m = build_zn(parse_spec(spec));
  std::optional<SubsetMask> dom;
  if (!domain.empty()) dom = parse_subset(domain, m.order());
  bool all = true;
  for (LawId law : parse_laws(laws)) {
    const auto r = check_law(m, law, dom);
    all = all && r.holds;
    std::cout << law_name(law) << ": " << (r.holds ? "holds" : "fails");
    if (r.witness) std::cout << " witness " << r.witness->to_string();
    std::cout << " (" << r.checked << " tuples)\n";
  }
  return all ? kOk : kFailures;
}

int cmd_subs(const std::string& spec, const std::string& kind) {
  const auto m = build_zn(parse_spec(spec));
  ClosedSetFamily fam;
  if (kind == "closed") {
    fam = enumerate_closed(m);
  } else if (kind == "semigroup") {
    fam = enumerate_subsemigroups(m);
  } else if (kind == "ideal-left") {
    fam = enumerate_ideals(m, IdealSide::Left);
  } else if (kind == "ideal-right") {
    fam = enumerate_ideals(m, IdealSide::Right);
  } else if (kind == "s-subgroupoid") {
    fam = s_subgroupoids(m);
  } else {
    throw Error(ErrorCode::InvalidSpec, "unknown kind '" + kind + "'");
  }
  for (const auto& s : fam.members) std::cout << s.to_string() << '\n';
  std::cout << "# " << fam.members.size() << " sets" << (fam.complete ? "" : " (incomplete: member cap reached)")
            << '\n';
  return fam.complete ? kOk : kFailures;
}

int cmd_sg(const std::string& spec) {
  const auto m = build_zn(parse_spec(spec));
  const auto w = smarandache_witness(m);
  std::cout << "spec: " << spec << "\nsg: " << yes(w.has_value()) << '\n';
  if (!w) return kFailures;
  std::cout << "witness: " << w->subset.to_string() << (w->commutative ? " (commutative)" : "") << '\n';
  std::cout << "degenerate: " << yes(w->degenerate_sg) << '\n';
  const auto subs = s_subgroupoids(m);
  std::cout << "s_subgroupoids:";
  for (const auto& s : subs.members) std::cout << ' ' << s.to_string();
  std::cout << "\ns_commutative: " << yes(s_commutative(m)) << "\ns_inner_commutative: " << yes(s_inner_commutative(m))
            << "\ns_idempotent: " << yes(s_idempotent(m)) << '\n';
  for (LawId law : kAllLaws) {
    const auto both = s_law_both(m, law, subs);
    std::cout << "s_" << law_name(law) << ": weak " << yes(both.weak) << ", strong " << yes(both.strong) << '\n';
  }
  return kOk;
}

int cmd_census(const std::string& cls, const std::string& range, const std::string& out, const std::string& format,
               std::size_t subset_bound, unsigned threads) {
  CensusOptions opts;
  opts.cls = parse_census_class(cls);
  std::tie(opts.n_lo, opts.n_hi) = parse_range(range);
  opts.subset_bound = subset_bound;
  opts.threads = threads;
  const bool jsonl = format == "jsonl" || (format.empty() && out.size() > 6 && out.ends_with(".jsonl"));
  // Compute first so a range error leaves no partial file behind.
  const auto records = census(opts);
  std::ofstream file;
  if (!out.empty() && out != "-") {
    file.open(out);
    if (!file) throw Error(ErrorCode::InvalidSpec, "cannot write '" + out + "'");
  }
  std::ostream& os = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;
  if (!jsonl) os << csv_header() << '\n';
  std::size_t rows = 0;
  std::size_t disagreements = 0;
  for (const auto& r : records) {
    ++rows;
    for (const auto& [name, value] : r.cells) {
      if (name.starts_with("agree_") && std::holds_alternative<bool>(value) && !std::get<bool>(value)) {
        ++disagreements;
        std::cerr << "disagreement: " << format_spec(r.spec) << ' ' << name << '\n';
      }
    }
    os << (jsonl ? to_jsonl(r) : to_csv(r)) << '\n';
  }
  std::cerr << rows << " rows, " << disagreements << " disagreements\n";
  return disagreements == 0 ? kOk : kFailures;
}

void print_report(const VerificationReport& r) {
  std::cout << r.id << ' ' << status_name(r.status) << " n=" << r.lo << ".." << r.hi << " checked=" << r.checked
            << " failures=" << r.failure_count << " unexplained=" << r.unexplained_count << "  " << r.summary << '\n';
  for (const auto& f : r.failures) {
    std::cout << "  " << f.spec << ": " << f.detail;
    if (!f.erratum.empty()) std::cout << " [erratum " << f.erratum << ']';
    std::cout << '\n';
  }
  if (r.failure_count > r.failures.size()) {
    std::cout << "  ... " << r.failure_count - r.failures.size() << " more\n";
  }
  for (const auto& key : r.errata) {
    if (const auto* e = find_erratum(key)) std::cout << "  erratum " << e->id << ": " << e->computed << '\n';
  }
}

int cmd_verify(const std::string& id, const std::string& range) {
  std::optional<unsigned> lo;
  std::optional<unsigned> hi;
  if (!range.empty()) std::tie(lo, hi) = parse_range(range);
  std::vector<std::string> ids;
  if (id == "all") {
    for (const auto& info : theorem_registry()) ids.push_back(info.id);
  } else {
    ids.push_back(id);
  }
  bool ok = true;
  for (const auto& t : ids) {
    const auto r = verify_theorem(t, lo, hi);
    print_report(r);
    ok = ok && r.status != VerifyStatus::Fail;
  }
  return ok ? kOk : kFailures;
}

int cmd_automaton(const std::string& z, const std::string& a, const std::string& b, const std::string& dot,
                  const std::string& run, unsigned start) {
  const ZnSpec zs = parse_spec(z);
  const ZnSpec as = parse_spec(a);
  std::string text;
  std::string graph;
  SemiAutomaton semi;
  std::optional<Automaton> full;
  if (b.empty()) {
    semi = from_groupoids(zs, as);
    text = to_text(semi);
    graph = to_dot(semi);
  } else {
    full = from_groupoids(zs, as, parse_spec(b));
    semi = full->semi;
    text = to_text(*full);
    graph = to_dot(*full);
  }
  std::cout << text;
  std::cout << "closed state sets:";
  for (const auto& s : closed_state_sets(semi)) std::cout << ' ' << s.to_string();
  std::cout << '\n';
  if (!dot.empty()) {
    std::ofstream f(dot);
    if (!f) throw Error(ErrorCode::InvalidSpec, "cannot write '" + dot + "'");
    f << graph;
  }
  if (!run.empty()) {
    const InputWord w = parse_word(run);
    if (full) {
      const auto r = run_auto(*full, start, w);
      std::cout << "final state: " << r.final_state << "\noutput:";
      for (auto o : r.output) std::cout << ' ' << o;
      std::cout << '\n';
    } else {
      std::cout << "final state: " << run_semi(semi, start, w) << '\n';
    }
  }
  return kOk;
}

int cmd_fixtures(bool verbose) {
  const auto report = fixture_check_all();
  for (const auto& c : report.checks) {
    if (!verbose && c.status == VerifyStatus::Pass) continue;
    std::cout << status_name(c.status) << ' ' << c.fixture << ": " << c.claim;
    if (!c.erratum.empty()) std::cout << " [erratum " << c.erratum << ']';
    if (!c.detail.empty()) std::cout << " -- " << c.detail;
    std::cout << '\n';
  }
  std::cout << report.checks.size() << " checks: " << report.passed << " pass, " << report.with_errata
            << " pass with errata, " << report.failed << " fail\n";
  return report.ok() ? kOk : kFailures;
}

int cmd_errata() {
  for (const auto& e : errata_registry()) {
    std::cout << e.id << "\n  printed: " << e.printed << "\n  computed: " << e.computed << "\n  affects:";
    for (const auto& a : e.affects) std::cout << ' ' << a;
    std::cout << '\n';
  }
  return kOk;
}

int cmd_theorems() {
  for (const auto& t : theorem_registry()) {
    std::cout << t.id << "  [" << t.lo << ".." << t.hi << "]  " << t.summary << '\n';
  }
  return kOk;
}

bool usage_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSpec:
    case ErrorCode::InvalidLoopParams:
    case ErrorCode::ParseError:
    case ErrorCode::UnknownTheorem:
    case ErrorCode::UnknownFixture:
    case ErrorCode::SubsetOutOfRange:
    case ErrorCode::BoundExceeded:
    case ErrorCode::OrderTooLarge:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite groupoids over Z_n: tables, laws, substructures, Smarandache structure, automata"};
  app.require_subcommand(1);

  std::string spec;
  auto* table = app.add_subcommand("table", "print the Cayley table of n:t:u[+e]");
  table->add_option("spec", spec)->required();

  std::string laws = "all";
  std::string domain;
  auto* check = app.add_subcommand("check", "check identities over the carrier or a subset");
  check->add_option("spec", spec)->required();
  check->add_option("--laws", laws, "comma list of moufang,bol,p,left-alt,right-alt,alternative");
  check->add_option("--domain", domain, "subset such as {0,2}");

  std::string kind = "closed";
  auto* subs = app.add_subcommand("subs", "enumerate substructures");
  subs->add_option("spec", spec)->required();
  subs->add_option("--kind", kind)->check(
      CLI::IsMember({"closed", "semigroup", "ideal-left", "ideal-right", "s-subgroupoid"}));

  auto* sg = app.add_subcommand("sg", "Smarandache report");
  sg->add_option("spec", spec)->required();

  std::string cls = "z";
  std::string range;
  std::string out;
  std::string format;
  std::size_t subset_bound = kDefaultSubsetBound;
  unsigned threads = 0;
  auto* cen = app.add_subcommand("census", "classify every member of a class");
  cen->add_option("--class", cls)->check(CLI::IsMember({"z", "zs", "zss", "zsss", "adj"}));
  cen->add_option("--n", range, "A..B")->required();
  cen->add_option("--out", out, "output file (stdout when absent)");
  cen->add_option("--format", format)->check(CLI::IsMember({"csv", "jsonl"}));
  cen->add_option("--subset-bound", subset_bound, "largest order with subset-count columns");
  cen->add_option("--threads", threads);

  std::string theorem;
  std::string vrange;
  auto* ver = app.add_subcommand("verify", "replay a theorem against brute force");
  ver->add_option("--theorem", theorem, "registry id or 'all'")->required();
  ver->add_option("--n", vrange, "A..B");

  std::string z, a, b, dot, run;
  unsigned start = 0;
  auto* aut = app.add_subcommand("automaton", "machine built from groupoids");
  aut->add_option("--z", z)->required();
  aut->add_option("--a", a)->required();
  aut->add_option("--b", b);
  aut->add_option("--dot", dot, "write Graphviz output to this file");
  aut->add_option("--run", run, "input word such as 0,1,1");
  aut->add_option("--start", start, "initial state");

  bool do_check = false;
  bool verbose = false;
  auto* fix = app.add_subcommand("fixtures", "recheck the printed tables");
  fix->add_flag("--check", do_check)->required();
  fix->add_flag("--verbose,-v", verbose);

  auto* err = app.add_subcommand("errata", "list the erratum registry");
  auto* thm = app.add_subcommand("theorems", "list the verification registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (table->parsed()) return cmd_table(spec);
    if (check->parsed()) return cmd_check(spec, laws, domain);
    if (subs->parsed()) return cmd_subs(spec, kind);
    if (sg->parsed()) return cmd_sg(spec);
    if (cen->parsed()) return cmd_census(cls, range, out, format, subset_bound, threads);
    if (ver->parsed()) return cmd_verify(theorem, vrange);
    if (aut->parsed()) return cmd_automaton(z, a, b, dot, run, start);
    if (fix->parsed()) return cmd_fixtures(verbose);
    if (err->parsed()) return cmd_errata();
    if (thm->parsed()) return cmd_theorems();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage_error(e.code()) ? kUsage : kFailures;
  }
  return kUsage;
}
