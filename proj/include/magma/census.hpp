#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "magma/zn.hpp"

namespace magma {

enum class CensusClass { Z, ZStar, ZStarStar, ZStarStarStar, Adjoined };

/// "z", "zs", "zss", "zsss", "adj". Throws INVALID_SPEC.
CensusClass parse_census_class(std::string_view text);
std::string_view census_class_name(CensusClass c);

/// monostate marks a column that was not computed (order above the subset bound).
using CensusValue = std::variant<std::monostate, bool, long long, std::string>;

struct CensusRecord {
  ZnSpec spec;
  ClassTag tag = ClassTag::None;
  std::vector<std::pair<std::string, CensusValue>> cells;

  /// nullptr for an unknown column.
  const CensusValue* get(std::string_view column) const;
};

inline constexpr std::size_t kDefaultSubsetBound = 16;

struct CensusOptions {
  CensusClass cls = CensusClass::Z;
  unsigned n_lo = 3;
  unsigned n_hi = 3;
  std::size_t subset_bound = kDefaultSubsetBound;
  unsigned threads = 0;  // 0: hardware concurrency
};

std::vector<std::string> census_columns();

/// One row for a single groupoid.
CensusRecord census_record(const ZnSpec& spec, ClassTag tag, std::size_t subset_bound = kDefaultSubsetBound);

/// Rows ordered by (n, t, u), computed concurrently and handed to the sink in
/// order. Throws BOUND_EXCEEDED when n_hi exceeds the enumeration bound.
void census(const CensusOptions& opts, const std::function<void(const CensusRecord&)>& sink);
std::vector<CensusRecord> census(const CensusOptions& opts);

std::string csv_header();
std::string to_csv(const CensusRecord& r);
std::string to_jsonl(const CensusRecord& r);

}  // namespace magma
