#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "magma/subset.hpp"
#include "magma/zn.hpp"

namespace magma {

using State = std::uint32_t;
using Letter = std::uint32_t;
using InputWord = std::vector<Letter>;

struct SemiAutomaton {
  std::size_t state_count = 0;
  std::size_t input_count = 0;
  std::vector<State> delta;  // state_count x input_count, row-major
  std::vector<std::string> state_labels;
  std::vector<std::string> input_labels;

  State next(State z, Letter a) const { return delta[z * input_count + a]; }
  bool operator==(const SemiAutomaton&) const = default;
};

struct Automaton {
  SemiAutomaton semi;
  std::size_t output_count = 0;
  std::vector<Letter> lambda;  // state_count x input_count, row-major

  Letter out(State z, Letter a) const { return lambda[z * semi.input_count + a]; }
  bool operator==(const Automaton&) const = default;
};

SemiAutomaton make_semi(std::size_t states, std::size_t inputs, std::vector<State> delta);
SemiAutomaton make_semi(const std::vector<std::vector<State>>& rows);
Automaton make_automaton(SemiAutomaton semi, std::size_t outputs, std::vector<Letter> lambda);
Automaton make_automaton(const std::vector<std::vector<State>>& delta_rows, std::size_t outputs,
                         const std::vector<std::vector<Letter>>& lambda_rows);

State run_semi(const SemiAutomaton& sa, State z0, const InputWord& w);

struct AutoRun {
  std::vector<Letter> output;
  State final_state = 0;
};

AutoRun run_auto(const Automaton& at, State z0, const InputWord& w);

/// Binary tree over letters: a leaf, or the juxtaposition of two words.
class FreeWord {
 public:
  static FreeWord leaf(Letter a);
  static FreeWord join(FreeWord left, FreeWord right);

  bool is_leaf() const noexcept { return !left_; }
  Letter letter() const noexcept { return letter_; }
  const FreeWord& left() const { return *left_; }
  const FreeWord& right() const { return *right_; }

  /// Leaves from left to right.
  InputWord leaves() const;
  /// Fully parenthesised form, e.g. "((0.1).2)".
  std::string to_string() const;

 private:
  Letter letter_ = 0;
  std::shared_ptr<const FreeWord> left_;
  std::shared_ptr<const FreeWord> right_;
};

/// leaf a -> delta(z, a); (w1 . w2) -> run_free(run_free(z, w1), w2).
State run_free(const SemiAutomaton& sa, State z0, const FreeWord& fw);

/// States Z_nz, inputs Z_na, delta(z, a) = t_Z z + u_Z (a mod n_Z) (mod n_Z).
SemiAutomaton from_groupoids(const ZnSpec& z, const ZnSpec& a);
/// As above with outputs Z_nb, lambda(z, a) = t_B (z mod n_B) + u_B (a mod n_B) (mod n_B).
Automaton from_groupoids(const ZnSpec& z, const ZnSpec& a, const ZnSpec& b);

/// Nonempty proper state subsets closed under delta for every letter in
/// `letters` (all letters when absent).
std::vector<SubsetMask> closed_state_sets(const SemiAutomaton& sa,
                                          const std::optional<std::vector<Letter>>& letters = std::nullopt);
/// Closed state sets that properly contain another closed state set.
std::vector<SubsetMask> s_sub_semi_automata(const SemiAutomaton& sa);

/// Restriction of a machine to a closed state set, states renumbered in
/// increasing order.
SemiAutomaton restrict_states(const SemiAutomaton& sa, const SubsetMask& states);
Automaton restrict_states(const Automaton& at, const SubsetMask& states);

/// Pair (z1, z2) has index z1 * k2 + z2; likewise for letter pairs.
Automaton series_compose(const Automaton& k1, const Automaton& k2);
Automaton parallel_compose(const Automaton& k1, const Automaton& k2);

inline constexpr std::size_t kMaxDividesStates = 6;

/// K1 is the image of a sub-automaton of K2 under a state surjection that
/// commutes with delta and lambda (letters and outputs matched by index).
bool automaton_divides(const Automaton& k1, const Automaton& k2, std::size_t max_states = kMaxDividesStates);
bool automaton_equivalent(const Automaton& k1, const Automaton& k2, std::size_t max_states = kMaxDividesStates);

std::string to_dot(const SemiAutomaton& sa);
std::string to_dot(const Automaton& at);

/// Text form: "k n" or "k n m", then k delta rows, then k lambda rows.
std::string to_text(const Automaton& at);
std::string to_text(const SemiAutomaton& sa);
std::variant<SemiAutomaton, Automaton> parse_machine(std::string_view text);

/// Parses a word such as "0,1,1" or "011" (single digits).
InputWord parse_word(std::string_view text);

}  // namespace magma
