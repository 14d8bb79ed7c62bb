#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace magma {

/// A printed claim that direct computation contradicts.
struct Erratum {
  std::string id;
  std::string printed;   // what the source asserts, paraphrased
  std::string computed;  // what brute force finds
  std::vector<std::string> affects;  // theorem or example ids
};

const std::vector<Erratum>& errata_registry();
/// nullptr when the id is unknown.
const Erratum* find_erratum(std::string_view id);

}  // namespace magma
