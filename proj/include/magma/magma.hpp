#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "magma/subset.hpp"

namespace magma {

/// Which side a multiplier sits on: Left means x*S, Right means S*x.
enum class Side { Left, Right };

std::string_view side_name(Side s);

/// Counterexample to an equation: the substituted elements and the two
/// differing evaluations.
struct Witness {
  enum class Kind { Pair, Triple };

  Kind kind = Kind::Pair;
  std::array<Element, 3> elems{};
  Element lhs = 0;
  Element rhs = 0;

  std::size_t arity() const noexcept { return kind == Kind::Pair ? 2 : 3; }
  std::string to_string() const;
  bool operator==(const Witness&) const = default;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
};

/// Finite groupoid given by its Cayley table (row = left operand).
/// Immutable once built.
class FiniteMagma {
 public:
  FiniteMagma(std::size_t order, std::vector<Element> table, std::vector<std::string> labels = {},
              std::optional<Element> designated_zero = std::nullopt,
              std::optional<Element> adjoined_identity = std::nullopt);

  std::size_t order() const noexcept { return order_; }

  /// Unchecked product; callers guarantee a, b < order().
  Element at(Element a, Element b) const noexcept { return table_[a * order_ + b]; }

  const std::vector<Element>& table() const noexcept { return table_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool has_labels() const noexcept { return !labels_.empty(); }
  /// Display name; falls back to the decimal index.
  std::string label(Element e) const;

  std::optional<Element> designated_zero() const noexcept { return zero_; }
  /// Index of an identity element adjoined to a modular construction, if any.
  std::optional<Element> adjoined_identity() const noexcept { return adjoined_identity_; }

  FiniteMagma with_designated_zero(std::optional<Element> zero) const;
  FiniteMagma with_labels(std::vector<std::string> labels) const;

  SubsetMask full_set() const { return SubsetMask::full(order_); }

  bool operator==(const FiniteMagma&) const = default;

 private:
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<std::string> labels_;
  std::optional<Element> zero_;
  std::optional<Element> adjoined_identity_;
};

FiniteMagma build_table(std::size_t order, const std::vector<Element>& entries,
                        std::vector<std::string> labels = {});
FiniteMagma build_table(const std::vector<std::vector<Element>>& rows, std::vector<std::string> labels = {});

/// Bounds-checked product.
Element product(const FiniteMagma& m, Element a, Element b);

/// Commutativity over the domain (whole carrier when absent); first
/// failing pair in lexicographic order is the witness.
Verdict check_commutative(const FiniteMagma& m, const std::optional<SubsetMask>& domain = std::nullopt);
/// Associativity over the domain; first failing triple is the witness.
Verdict check_associative(const FiniteMagma& m, const std::optional<SubsetMask>& domain = std::nullopt);

struct BasicReport {
  Verdict commutative;
  Verdict associative;
  std::vector<Element> left_identities;
  std::vector<Element> right_identities;
  std::vector<Element> two_sided_identities;
  std::vector<Element> idempotents;
  bool strictly_noncommutative = false;
  bool idempotent_groupoid = false;
};

BasicReport basic_report(const FiniteMagma& m);

SubsetMask center(const FiniteMagma& m);

struct ZeroDivisors {
  std::vector<Element> left;
  std::vector<Element> right;
};

/// a is a right zero divisor when a*b = zero for some b != zero; a is a left
/// zero divisor when b*a = zero for some b != zero. `zero` is never listed.
ZeroDivisors zero_divisor_report(const FiniteMagma& m, Element zero);

struct ConjugatePair {
  Element a = 0;
  Element b = 0;
  Element x = 0;  // a = b*x (Right) or x*b (Left)
  Side a_side = Side::Right;
  Element y = 0;  // b = a*y (Right) or y*a (Left)
  Side b_side = Side::Right;
};

std::vector<ConjugatePair> conjugate_pairs(const FiniteMagma& m);

struct LoopVerdict {
  bool holds = false;
  std::optional<Element> identity;
  std::string reason;
};

LoopVerdict is_loop(const FiniteMagma& m);

inline constexpr std::size_t kDefaultProductCap = 4096;

/// Componentwise product; element (g1,...,gk) has mixed-radix index with
/// the first factor most significant.
FiniteMagma direct_product(const std::vector<FiniteMagma>& factors, std::size_t cap = kDefaultProductCap);

/// Index of a tuple in a product of the given factor orders.
Element encode_tuple(const std::vector<std::size_t>& orders, const std::vector<Element>& coords);
std::vector<Element> decode_tuple(const std::vector<std::size_t>& orders, Element index);

struct IsoResult {
  bool isomorphic = false;
  std::vector<Element> bijection;  // bijection[i] is the image of element i
};

inline constexpr std::size_t kDefaultIsoCap = 6;

IsoResult are_isomorphic(const FiniteMagma& m1, const FiniteMagma& m2, std::size_t max_order = kDefaultIsoCap);

/// Table of the opposite operation (a, b) -> b*a.
FiniteMagma transpose(const FiniteMagma& m);

/// Cayley text format: order line, one line per row, optional "# labels:" line.
std::string to_text(const FiniteMagma& m);
FiniteMagma parse_text(std::string_view text);

}  // namespace magma
