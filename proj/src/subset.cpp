#include "magma/subset.hpp"

#include <bit>
#include <charconv>

#include "magma/error.hpp"

namespace magma {

namespace {

void check_width(std::size_t width) {
  if (width > SubsetMask::kMaxWidth) {
    throw Error(ErrorCode::OrderTooLarge,
                "subset width " + std::to_string(width) + " exceeds " +
                    std::to_string(SubsetMask::kMaxWidth));
  }
}

}  // namespace

SubsetMask::SubsetMask(std::size_t width) : width_(width) { check_width(width); }

SubsetMask::SubsetMask(std::size_t width, std::initializer_list<Element> elems) : width_(width) {
  check_width(width);
  for (Element e : elems) insert(e);
}

SubsetMask SubsetMask::from_bits(std::size_t width, std::uint64_t bits) {
  SubsetMask s(width);
  if ((bits & ~full_bits(width)) != 0) {
    throw Error(ErrorCode::SubsetOutOfRange, "bits outside carrier of width " + std::to_string(width));
  }
  s.bits_ = bits;
  return s;
}

SubsetMask SubsetMask::from_elements(std::size_t width, const std::vector<Element>& elems) {
  SubsetMask s(width);
  for (Element e : elems) s.insert(e);
  return s;
}

SubsetMask SubsetMask::full(std::size_t width) {
  SubsetMask s(width);
  s.bits_ = full_bits(width);
  return s;
}

SubsetMask SubsetMask::singleton(std::size_t width, Element e) {
  SubsetMask s(width);
  s.insert(e);
  return s;
}

void SubsetMask::insert(Element e) {
  if (e >= width_) {
    throw Error(ErrorCode::SubsetOutOfRange,
                "element " + std::to_string(e) + " outside carrier of width " + std::to_string(width_));
  }
  bits_ |= std::uint64_t{1} << e;
}

void SubsetMask::erase(Element e) {
  if (e < width_) bits_ &= ~(std::uint64_t{1} << e);
}

std::size_t SubsetMask::count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<Element> SubsetMask::elements() const {
  std::vector<Element> out;
  out.reserve(count());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<Element>(std::countr_zero(b)));
  }
  return out;
}

std::string SubsetMask::to_string() const {
  std::string s = "{";
  bool first = true;
  for (Element e : elements()) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  s += '}';
  return s;
}

std::strong_ordering SubsetMask::operator<=>(const SubsetMask& o) const noexcept {
  if (auto c = width_ <=> o.width_; c != 0) return c;
  return bits_ <=> o.bits_;
}

SubsetMask parse_subset(std::string_view text, std::size_t width) {
  SubsetMask s(width);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  bool braced = i < text.size() && text[i] == '{';
  if (braced) ++i;
  skip_ws();
  if (braced && i < text.size() && text[i] == '}') {
    ++i;
    skip_ws();
    if (i != text.size()) throw Error(ErrorCode::ParseError, "trailing text in subset");
    return s;
  }
  while (true) {
    skip_ws();
    unsigned long v = 0;
    auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc{}) throw Error(ErrorCode::ParseError, "expected element in subset '" + std::string(text) + "'");
    i = static_cast<std::size_t>(p - text.data());
    s.insert(static_cast<Element>(v));
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  if (braced) {
    if (i >= text.size() || text[i] != '}') throw Error(ErrorCode::ParseError, "missing '}' in subset");
    ++i;
  }
  skip_ws();
  if (i != text.size()) throw Error(ErrorCode::ParseError, "trailing text in subset");
  return s;
}

}  // namespace magma
