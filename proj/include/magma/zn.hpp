#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "magma/magma.hpp"

namespace magma {

/// Recipe for a*b = t*a + u*b (mod n), optionally with an identity `e`
/// adjoined at index n (a*a = e, a*e = e*a = a).
struct ZnSpec {
  unsigned n = 3;
  unsigned t = 1;
  unsigned u = 2;
  bool adjoin_identity = false;

  bool operator==(const ZnSpec&) const = default;
};

/// Most restrictive modular class holding a pair; Z is the smallest.
enum class ClassTag { Z, ZStar, ZStarStar, ZStarStarStar, None };

std::string_view class_name(ClassTag tag);

FiniteMagma build_zn(const ZnSpec& spec);

ClassTag classify_pair(unsigned n, unsigned t, unsigned u);

/// Membership respecting the chain Z ⊂ Z* ⊂ Z** ⊂ Z***.
bool in_class(unsigned n, unsigned t, unsigned u, ClassTag tag);

/// Pairs of the class ordered by t, then u.
std::vector<std::pair<unsigned, unsigned>> enumerate_class(unsigned n, ClassTag tag);
std::size_t class_size(unsigned n, ClassTag tag);

/// Loop on Z_n ∪ {e}: i*j = m*j - (m-1)*i (mod n) for i != j, i*i = e.
FiniteMagma build_loop(unsigned n, unsigned m);
bool loop_params_valid(unsigned n, unsigned m);

struct Residues {
  unsigned t2 = 0;         // t^2
  unsigned u2 = 0;         // u^2
  unsigned t3 = 0;         // t^3
  unsigned t_plus_u = 0;   // t + u
  unsigned tu_plus_u = 0;  // t*u + u
  unsigned t_plus_tu = 0;  // t + t*u
};

/// Flags that follow from congruences on (n, t, u) alone.
struct PredictedFlags {
  bool semigroup = false;            // t^2 = t and u^2 = u
  bool idempotent_groupoid = false;  // t + u = 1
  bool strong_p = false;             // t^2 = t and u^2 = u
  bool strong_alternative = false;   // t^2 = t and u^2 = u
  bool strong_bol = false;           // t^3 = t and u^2 = u
  bool strong_moufang = false;       // t^2 = t and u^2 = u
  bool adjoined_right_alt = false;   // t^2 = 1 and t*u + u = 0
  bool adjoined_left_alt = false;    // u^2 = 1 and t + t*u = 0
  Residues residues;
};

PredictedFlags predicted_flags(unsigned n, unsigned t, unsigned u, bool adjoined = false);

/// Parses "n:t:u" or "n:t:u+e".
ZnSpec parse_spec(std::string_view text);
std::string format_spec(const ZnSpec& spec);

}  // namespace magma
