#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace magma {

enum class VerifyStatus { Pass, Fail, PassWithErrata };
std::string_view status_name(VerifyStatus s);

struct VerifyFailure {
  std::string spec;
  std::string detail;
  std::string erratum;  // registry key explaining it; empty when unexplained
};

struct VerificationReport {
  std::string id;
  std::string summary;
  unsigned lo = 0;
  unsigned hi = 0;
  std::size_t checked = 0;
  std::size_t failure_count = 0;      // all failures, including explained ones
  std::size_t unexplained_count = 0;
  std::vector<VerifyFailure> failures;  // first kMaxListedFailures
  std::vector<std::string> errata;      // registry keys involved
  std::string note;
  VerifyStatus status = VerifyStatus::Pass;
};

inline constexpr std::size_t kMaxListedFailures = 64;

struct TheoremInfo {
  std::string id;
  std::string summary;
  unsigned lo = 0;
  unsigned hi = 0;
};

std::vector<TheoremInfo> theorem_registry();

/// Replays the predicted condition against brute force over n in [lo, hi]
/// (the entry's default range when absent). Throws UNKNOWN_THEOREM.
VerificationReport verify_theorem(std::string_view id, std::optional<unsigned> lo = std::nullopt,
                                  std::optional<unsigned> hi = std::nullopt);

}  // namespace magma
