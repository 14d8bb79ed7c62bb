#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace magma {

using Element = std::uint32_t;

/// Subset of a carrier {0, ..., width-1}, stored as a 64-bit membership word.
class SubsetMask {
 public:
  static constexpr std::size_t kMaxWidth = 64;

  SubsetMask() = default;
  explicit SubsetMask(std::size_t width);
  SubsetMask(std::size_t width, std::initializer_list<Element> elems);

  static SubsetMask from_bits(std::size_t width, std::uint64_t bits);
  static SubsetMask from_elements(std::size_t width, const std::vector<Element>& elems);
  static SubsetMask full(std::size_t width);
  static SubsetMask singleton(std::size_t width, Element e);

  std::size_t width() const noexcept { return width_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool contains(Element e) const noexcept { return e < width_ && ((bits_ >> e) & 1u); }
  void insert(Element e);
  void erase(Element e);

  std::size_t count() const noexcept;
  bool empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == full_bits(width_); }
  bool is_subset_of(const SubsetMask& other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  bool is_proper_subset_of(const SubsetMask& other) const noexcept {
    return is_subset_of(other) && bits_ != other.bits_;
  }
  bool intersects(const SubsetMask& other) const noexcept { return (bits_ & other.bits_) != 0; }

  /// Members in increasing order.
  std::vector<Element> elements() const;

  /// Brace form used in every report, e.g. "{0,2,4}".
  std::string to_string() const;

  SubsetMask operator&(const SubsetMask& o) const { return from_bits(width_, bits_ & o.bits_); }
  SubsetMask operator|(const SubsetMask& o) const { return from_bits(width_, bits_ | o.bits_); }
  bool operator==(const SubsetMask& o) const noexcept = default;
  std::strong_ordering operator<=>(const SubsetMask& o) const noexcept;

  static std::uint64_t full_bits(std::size_t width) noexcept {
    return width >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
  }

 private:
  std::size_t width_ = 0;
  std::uint64_t bits_ = 0;
};

/// Parses "{0,2,4}" or "0,2,4"; "{}" is the empty set.
SubsetMask parse_subset(std::string_view text, std::size_t width);

}  // namespace magma
