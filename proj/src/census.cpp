#include "magma/census.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "magma/error.hpp"
#include "magma/identities.hpp"
#include "magma/smarandache.hpp"
#include "magma/substructures.hpp"

namespace magma {

CensusClass parse_census_class(std::string_view text) {
  if (text == "z") return CensusClass::Z;
  if (text == "zs") return CensusClass::ZStar;
  if (text == "zss") return CensusClass::ZStarStar;
  if (text == "zsss") return CensusClass::ZStarStarStar;
  if (text == "adj") return CensusClass::Adjoined;
  throw Error(ErrorCode::InvalidSpec, "unknown class '" + std::string(text) + "'");
}

std::string_view census_class_name(CensusClass c) {
  switch (c) {
    case CensusClass::Z: return "z";
    case CensusClass::ZStar: return "zs";
    case CensusClass::ZStarStar: return "zss";
    case CensusClass::ZStarStarStar: return "zsss";
    case CensusClass::Adjoined: return "adj";
  }
  return "?";
}

const CensusValue* CensusRecord::get(std::string_view column) const {
  for (const auto& [name, value] : cells) {
    if (name == column) return &value;
  }
  return nullptr;
}

namespace {

std::string law_column(LawId law) {
  std::string s(law_name(law));
  std::replace(s.begin(), s.end(), '-', '_');
  return s;
}

constexpr LawId kSLaws[] = {LawId::Moufang, LawId::Bol, LawId::P, LawId::Alternative};

}  // namespace

std::vector<std::string> census_columns() {
  std::vector<std::string> cols = {"spec", "n", "t", "u", "adjoined", "class", "commutative", "associative",
                                   "has_identity", "idempotent_groupoid", "idempotent_count", "strictly_noncommutative"};
  for (LawId law : kAllLaws) cols.push_back(law_column(law));
  for (const char* c : {"closed_subsets", "subsemigroups", "left_ideals", "right_ideals", "s_subgroupoids", "sg",
                        "sg_witness", "degenerate_sg", "s_commutative", "s_inner_commutative"}) {
    cols.emplace_back(c);
  }
  for (LawId law : kSLaws) {
    cols.push_back("s_" + law_column(law) + "_weak");
    cols.push_back("s_" + law_column(law) + "_strong");
  }
  for (const char* c : {"s_idempotent", "pred_semigroup", "pred_idempotent", "pred_strong_p", "pred_strong_bol",
                        "pred_strong_moufang", "pred_strong_alternative", "pred_adj_right_alt", "pred_adj_left_alt",
                        "obs_adj_right_alt", "obs_adj_left_alt", "agree_semigroup", "agree_idempotent",
                        "agree_adj_right_alt", "agree_adj_left_alt"}) {
    cols.emplace_back(c);
  }
  return cols;
}

CensusRecord census_record(const ZnSpec& spec, ClassTag tag, std::size_t subset_bound) {
  const FiniteMagma m = build_zn(spec);
  const bool adj = spec.adjoin_identity;
  const bool small = m.order() <= subset_bound;
  CensusRecord r{spec, tag, {}};
  auto put = [&](std::string name, CensusValue v) { r.cells.emplace_back(std::move(name), std::move(v)); };
  auto count = [](std::size_t c) { return CensusValue{static_cast<long long>(c)}; };

  put("spec", format_spec(spec));
  put("n", static_cast<long long>(spec.n));
  put("t", static_cast<long long>(spec.t));
  put("u", static_cast<long long>(spec.u));
  put("adjoined", adj);
  put("class", std::string(class_name(tag)));

  const BasicReport basic = basic_report(m);
  put("commutative", basic.commutative.holds);
  put("associative", basic.associative.holds);
  put("has_identity", !basic.two_sided_identities.empty());
  put("idempotent_groupoid", basic.idempotent_groupoid);
  put("idempotent_count", count(basic.idempotents.size()));
  put("strictly_noncommutative", basic.strictly_noncommutative);
  for (LawId law : kAllLaws) put(law_column(law), check_law(m, law).holds);

  std::optional<ClosedSetFamily> s_subs;
  if (small) {
    put("closed_subsets", count(enumerate_closed(m).members.size()));
    put("subsemigroups", count(enumerate_subsemigroups(m).members.size()));
    put("left_ideals", count(enumerate_ideals(m, IdealSide::Left).members.size()));
    put("right_ideals", count(enumerate_ideals(m, IdealSide::Right).members.size()));
    s_subs = s_subgroupoids(m);
    put("s_subgroupoids", count(s_subs->members.size()));
  } else {
    for (const char* c : {"closed_subsets", "subsemigroups", "left_ideals", "right_ideals", "s_subgroupoids"}) {
      put(c, std::monostate{});
    }
  }

  const auto witness = smarandache_witness(m);
  put("sg", witness.has_value());
  put("sg_witness", witness ? CensusValue{witness->subset.to_string()} : CensusValue{std::string()});
  put("degenerate_sg", witness && witness->degenerate_sg);
  if (small) {
    put("s_commutative", witness.has_value() && s_commutative(m));
    put("s_inner_commutative", witness.has_value() && s_inner_commutative(m));
  } else {
    put("s_commutative", std::monostate{});
    put("s_inner_commutative", std::monostate{});
  }
  for (LawId law : kSLaws) {
    if (s_subs && witness) {
      const auto both = s_law_both(m, law, *s_subs);
      put("s_" + law_column(law) + "_weak", both.weak);
      put("s_" + law_column(law) + "_strong", both.strong);
    } else if (small) {
      put("s_" + law_column(law) + "_weak", false);
      put("s_" + law_column(law) + "_strong", false);
    } else {
      put("s_" + law_column(law) + "_weak", std::monostate{});
      put("s_" + law_column(law) + "_strong", std::monostate{});
    }
  }
  put("s_idempotent", s_idempotent(m));

  const PredictedFlags pf = predicted_flags(spec.n, spec.t, spec.u, adj);
  put("pred_semigroup", pf.semigroup);
  put("pred_idempotent", pf.idempotent_groupoid);
  put("pred_strong_p", pf.strong_p);
  put("pred_strong_bol", pf.strong_bol);
  put("pred_strong_moufang", pf.strong_moufang);
  put("pred_strong_alternative", pf.strong_alternative);
  put("pred_adj_right_alt", pf.adjoined_right_alt);
  put("pred_adj_left_alt", pf.adjoined_left_alt);

  if (adj) {
    // Non-degenerate tuples only; a law with no such tuple agrees vacuously.
    const LawReport ra = check_law(m, LawId::RightAlt, std::nullopt, true);
    const LawReport la = check_law(m, LawId::LeftAlt, std::nullopt, true);
    put("obs_adj_right_alt", ra.holds);
    put("obs_adj_left_alt", la.holds);
    put("agree_semigroup", std::monostate{});
    put("agree_idempotent", std::monostate{});
    put("agree_adj_right_alt", ra.checked == 0 || ra.holds == pf.adjoined_right_alt);
    put("agree_adj_left_alt", la.checked == 0 || la.holds == pf.adjoined_left_alt);
  } else {
    put("obs_adj_right_alt", std::monostate{});
    put("obs_adj_left_alt", std::monostate{});
    put("agree_semigroup", basic.associative.holds == pf.semigroup);
    put("agree_idempotent", basic.idempotent_groupoid == pf.idempotent_groupoid);
    put("agree_adj_right_alt", std::monostate{});
    put("agree_adj_left_alt", std::monostate{});
  }
  return r;
}

void census(const CensusOptions& opts, const std::function<void(const CensusRecord&)>& sink) {
  if (opts.n_lo > opts.n_hi) throw Error(ErrorCode::InvalidSpec, "empty n range");
  if (opts.n_hi > enumeration_bound()) {
    throw Error(ErrorCode::BoundExceeded,
                "n = " + std::to_string(opts.n_hi) + " exceeds bound " + std::to_string(enumeration_bound()));
  }
  const bool adj = opts.cls == CensusClass::Adjoined;
  const ClassTag tag = [&] {
    switch (opts.cls) {
      case CensusClass::Z: return ClassTag::Z;
      case CensusClass::ZStar: return ClassTag::ZStar;
      case CensusClass::ZStarStar: return ClassTag::ZStarStar;
      default: return ClassTag::ZStarStarStar;
    }
  }();
  std::vector<ZnSpec> specs;
  for (unsigned n = std::max(opts.n_lo, 2u); n <= opts.n_hi; ++n) {
    for (auto [t, u] : enumerate_class(n, tag)) specs.push_back({n, t, u, adj});
  }

  std::vector<std::optional<CensusRecord>> rows(specs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        rows[i] = census_record(specs[i], classify_pair(specs[i].n, specs[i].t, specs[i].u), opts.subset_bound);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(specs.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  for (const auto& row : rows) sink(*row);
}

std::vector<CensusRecord> census(const CensusOptions& opts) {
  std::vector<CensusRecord> out;
  census(opts, [&](const CensusRecord& r) { out.push_back(r); });
  return out;
}

namespace {

std::string csv_cell(const CensusValue& v) {
  struct {
    std::string operator()(std::monostate) const { return "NA"; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(long long x) const { return std::to_string(x); }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
      return q + "\"";
    }
  } visit;
  return std::visit(visit, v);
}

}  // namespace

std::string csv_header() {
  std::string out;
  for (const auto& c : census_columns()) out += (out.empty() ? "" : ",") + c;
  return out;
}

std::string to_csv(const CensusRecord& r) {
  std::string out;
  for (std::size_t i = 0; i < r.cells.size(); ++i) {
    if (i) out += ',';
    out += csv_cell(r.cells[i].second);
  }
  return out;
}

std::string to_jsonl(const CensusRecord& r) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [name, value] : r.cells) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, std::monostate>) {
            j[name] = nullptr;
          } else {
            j[name] = x;
          }
        },
        value);
  }
  return j.dump();
}

}  // namespace magma
