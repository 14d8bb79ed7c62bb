#include "magma/magma.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "magma/error.hpp"

namespace magma {

std::string_view side_name(Side s) { return s == Side::Left ? "left" : "right"; }

std::string Witness::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < arity(); ++i) {
    if (i) s += ',';
    s += std::to_string(elems[i]);
  }
  s += "): " + std::to_string(lhs) + " != " + std::to_string(rhs);
  return s;
}

FiniteMagma::FiniteMagma(std::size_t order, std::vector<Element> table, std::vector<std::string> labels,
                         std::optional<Element> designated_zero, std::optional<Element> adjoined_identity)
    : order_(order),
      table_(std::move(table)),
      labels_(std::move(labels)),
      zero_(designated_zero),
      adjoined_identity_(adjoined_identity) {
  if (order_ == 0) throw Error(ErrorCode::InvalidSpec, "order must be positive");
  if (table_.size() != order_ * order_) {
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(order_ * order_) + " entries, got " +
                                               std::to_string(table_.size()));
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= order_) {
      throw Error(ErrorCode::EntryOutOfRange, "entry " + std::to_string(table_[i]) + " at row " +
                                                  std::to_string(i / order_) + ", column " +
                                                  std::to_string(i % order_));
    }
  }
  if (!labels_.empty()) {
    if (labels_.size() != order_) {
      throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(order_) + " labels");
    }
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw Error(ErrorCode::InvalidSpec, "labels must be distinct");
  }
  if (zero_ && *zero_ >= order_) throw Error(ErrorCode::IndexOutOfRange, "designated zero out of range");
  if (adjoined_identity_ && *adjoined_identity_ >= order_) {
    throw Error(ErrorCode::IndexOutOfRange, "adjoined identity out of range");
  }
}

std::string FiniteMagma::label(Element e) const {
  if (!labels_.empty() && e < labels_.size()) return labels_[e];
  return std::to_string(e);
}

FiniteMagma FiniteMagma::with_designated_zero(std::optional<Element> zero) const {
  return FiniteMagma(order_, table_, labels_, zero, adjoined_identity_);
}

FiniteMagma FiniteMagma::with_labels(std::vector<std::string> labels) const {
  return FiniteMagma(order_, table_, std::move(labels), zero_, adjoined_identity_);
}

FiniteMagma build_table(std::size_t order, const std::vector<Element>& entries, std::vector<std::string> labels) {
  return FiniteMagma(order, entries, std::move(labels));
}

FiniteMagma build_table(const std::vector<std::vector<Element>>& rows, std::vector<std::string> labels) {
  std::vector<Element> flat;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw Error(ErrorCode::LengthMismatch, "table is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return FiniteMagma(rows.size(), std::move(flat), std::move(labels));
}

Element product(const FiniteMagma& m, Element a, Element b) {
  if (a >= m.order() || b >= m.order()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "product(" + std::to_string(a) + "," + std::to_string(b) + ") on order " + std::to_string(m.order()));
  }
  return m.at(a, b);
}

namespace {

std::vector<Element> domain_elements(const FiniteMagma& m, const std::optional<SubsetMask>& domain) {
  if (!domain) {
    std::vector<Element> all(m.order());
    std::iota(all.begin(), all.end(), Element{0});
    return all;
  }
  if (domain->width() != m.order()) throw Error(ErrorCode::SubsetOutOfRange, "subset width differs from order");
  return domain->elements();
}

}  // namespace

Verdict check_commutative(const FiniteMagma& m, const std::optional<SubsetMask>& domain) {
  auto elems = domain_elements(m, domain);
  for (Element a : elems) {
    for (Element b : elems) {
      if (m.at(a, b) != m.at(b, a)) return {false, Witness{Witness::Kind::Pair, {a, b, 0}, m.at(a, b), m.at(b, a)}};
    }
  }
  return {};
}

Verdict check_associative(const FiniteMagma& m, const std::optional<SubsetMask>& domain) {
  auto elems = domain_elements(m, domain);
  for (Element a : elems) {
    for (Element b : elems) {
      Element ab = m.at(a, b);
      for (Element c : elems) {
        Element l = m.at(ab, c);
        Element r = m.at(a, m.at(b, c));
        if (l != r) return {false, Witness{Witness::Kind::Triple, {a, b, c}, l, r}};
      }
    }
  }
  return {};
}

BasicReport basic_report(const FiniteMagma& m) {
  BasicReport r;
  const auto n = static_cast<Element>(m.order());
  r.commutative = check_commutative(m);
  r.associative = check_associative(m);
  for (Element e = 0; e < n; ++e) {
    bool left = true, right = true;
    for (Element a = 0; a < n && (left || right); ++a) {
      if (m.at(e, a) != a) left = false;
      if (m.at(a, e) != a) right = false;
    }
    if (left) r.left_identities.push_back(e);
    if (right) r.right_identities.push_back(e);
    if (left && right) r.two_sided_identities.push_back(e);
    if (m.at(e, e) == e) r.idempotents.push_back(e);
  }
  r.idempotent_groupoid = r.idempotents.size() == m.order();
  r.strictly_noncommutative = true;
  for (Element a = 0; a < n && r.strictly_noncommutative; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (m.at(a, b) == m.at(b, a)) {
        r.strictly_noncommutative = false;
        break;
      }
    }
  }
  return r;
}

SubsetMask center(const FiniteMagma& m) {
  SubsetMask c(m.order());
  const auto n = static_cast<Element>(m.order());
  for (Element x = 0; x < n; ++x) {
    bool central = true;
    for (Element a = 0; a < n && central; ++a) central = m.at(a, x) == m.at(x, a);
    if (central) c.insert(x);
  }
  return c;
}

ZeroDivisors zero_divisor_report(const FiniteMagma& m, Element zero) {
  if (zero >= m.order()) throw Error(ErrorCode::IndexOutOfRange, "zero out of range");
  ZeroDivisors z;
  const auto n = static_cast<Element>(m.order());
  for (Element a = 0; a < n; ++a) {
    if (a == zero) continue;
    bool right = false, left = false;
    for (Element b = 0; b < n; ++b) {
      if (b == zero) continue;
      if (m.at(a, b) == zero) right = true;
      if (m.at(b, a) == zero) left = true;
    }
    if (left) z.left.push_back(a);
    if (right) z.right.push_back(a);
  }
  return z;
}

namespace {

// Finds x with target = source*x (Right) or x*source (Left), right side first.
std::optional<std::pair<Element, Side>> reach(const FiniteMagma& m, Element source, Element target) {
  const auto n = static_cast<Element>(m.order());
  for (Element x = 0; x < n; ++x) {
    if (m.at(source, x) == target) return std::pair{x, Side::Right};
  }
  for (Element x = 0; x < n; ++x) {
    if (m.at(x, source) == target) return std::pair{x, Side::Left};
  }
  return std::nullopt;
}

}  // namespace

std::vector<ConjugatePair> conjugate_pairs(const FiniteMagma& m) {
  std::vector<ConjugatePair> out;
  const auto n = static_cast<Element>(m.order());
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      auto to_a = reach(m, b, a);
      if (!to_a) continue;
      auto to_b = reach(m, a, b);
      if (!to_b) continue;
      out.push_back({a, b, to_a->first, to_a->second, to_b->first, to_b->second});
    }
  }
  return out;
}

LoopVerdict is_loop(const FiniteMagma& m) {
  LoopVerdict v;
  auto r = basic_report(m);
  if (r.two_sided_identities.empty()) {
    v.reason = "no two-sided identity";
    return v;
  }
  v.identity = r.two_sided_identities.front();
  const auto n = static_cast<Element>(m.order());
  for (Element a = 0; a < n; ++a) {
    std::vector<bool> row(n), col(n);
    for (Element b = 0; b < n; ++b) {
      if (row[m.at(a, b)]) {
        v.reason = "row " + std::to_string(a) + " repeats " + std::to_string(m.at(a, b));
        return v;
      }
      if (col[m.at(b, a)]) {
        v.reason = "column " + std::to_string(a) + " repeats " + std::to_string(m.at(b, a));
        return v;
      }
      row[m.at(a, b)] = true;
      col[m.at(b, a)] = true;
    }
  }
  v.holds = true;
  return v;
}

Element encode_tuple(const std::vector<std::size_t>& orders, const std::vector<Element>& coords) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i] + coords[i];
  return static_cast<Element>(idx);
}

std::vector<Element> decode_tuple(const std::vector<std::size_t>& orders, Element index) {
  std::vector<Element> coords(orders.size());
  std::size_t rest = index;
  for (std::size_t i = orders.size(); i-- > 0;) {
    coords[i] = static_cast<Element>(rest % orders[i]);
    rest /= orders[i];
  }
  return coords;
}

FiniteMagma direct_product(const std::vector<FiniteMagma>& factors, std::size_t cap) {
  if (factors.size() < 2) throw Error(ErrorCode::InvalidSpec, "direct product needs at least two factors");
  std::vector<std::size_t> orders;
  std::size_t total = 1;
  for (const auto& f : factors) {
    orders.push_back(f.order());
    total *= f.order();
    if (total > cap) {
      throw Error(ErrorCode::ProductOrderOverflow, "product order exceeds cap " + std::to_string(cap));
    }
  }
  std::vector<std::vector<Element>> coords(total);
  for (std::size_t i = 0; i < total; ++i) coords[i] = decode_tuple(orders, static_cast<Element>(i));
  std::vector<Element> table(total * total);
  std::vector<Element> tmp(factors.size());
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      for (std::size_t k = 0; k < factors.size(); ++k) tmp[k] = factors[k].at(coords[i][k], coords[j][k]);
      table[i * total + j] = encode_tuple(orders, tmp);
    }
  }
  std::vector<std::string> labels(total);
  for (std::size_t i = 0; i < total; ++i) {
    std::string s = "(";
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) s += ',';
      s += factors[k].label(coords[i][k]);
    }
    labels[i] = s + ")";
  }
  std::optional<Element> zero;
  if (std::all_of(factors.begin(), factors.end(), [](const FiniteMagma& f) { return f.designated_zero().has_value(); })) {
    std::vector<Element> z;
    for (const auto& f : factors) z.push_back(*f.designated_zero());
    zero = encode_tuple(orders, z);
  }
  return FiniteMagma(total, std::move(table), std::move(labels), zero);
}

namespace {

bool extend_iso(const FiniteMagma& a, const FiniteMagma& b, std::vector<Element>& map, std::vector<bool>& used,
                Element next) {
  const auto n = static_cast<Element>(a.order());
  if (next == n) return true;
  for (Element img = 0; img < n; ++img) {
    if (used[img]) continue;
    map[next] = img;
    used[img] = true;
    bool ok = true;
    for (Element x = 0; x <= next && ok; ++x) {
      for (Element y = 0; y <= next && ok; ++y) {
        Element p = a.at(x, y);
        if (p <= next) ok = b.at(map[x], map[y]) == map[p];
      }
    }
    if (ok && extend_iso(a, b, map, used, next + 1)) return true;
    used[img] = false;
  }
  return false;
}

}  // namespace

IsoResult are_isomorphic(const FiniteMagma& m1, const FiniteMagma& m2, std::size_t max_order) {
  if (m1.order() != m2.order()) throw Error(ErrorCode::OrderMismatch, "orders differ");
  if (m1.order() > max_order) {
    throw Error(ErrorCode::OrderTooLarge, "isomorphism search capped at order " + std::to_string(max_order));
  }
  IsoResult r;
  std::vector<Element> map(m1.order());
  std::vector<bool> used(m1.order());
  if (extend_iso(m1, m2, map, used, 0)) {
    r.isomorphic = true;
    r.bijection = map;
  }
  return r;
}

FiniteMagma transpose(const FiniteMagma& m) {
  const auto n = m.order();
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = m.table()[b * n + a];
  return FiniteMagma(n, std::move(t), m.labels(), m.designated_zero(), m.adjoined_identity());
}

std::string to_text(const FiniteMagma& m) {
  std::string s = std::to_string(m.order()) + "\n";
  for (std::size_t a = 0; a < m.order(); ++a) {
    for (std::size_t b = 0; b < m.order(); ++b) {
      if (b) s += ' ';
      s += std::to_string(m.table()[a * m.order() + b]);
    }
    s += '\n';
  }
  if (m.has_labels()) {
    s += "# labels:";
    for (const auto& l : m.labels()) s += " " + l;
    s += '\n';
  }
  return s;
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::size_t parse_count(const std::string& tok, std::string_view what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    throw Error(ErrorCode::ParseError, "bad " + std::string(what) + " '" + tok + "'");
  }
  return v;
}

}  // namespace

FiniteMagma parse_text(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  while (!lines.empty() && split_ws(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty table text");
  auto head = split_ws(lines[0]);
  if (head.size() != 1) throw Error(ErrorCode::ParseError, "first line must hold the order");
  std::size_t n = parse_count(head[0], "order");
  if (n == 0) throw Error(ErrorCode::ParseError, "order must be positive");
  std::vector<std::string> labels;
  std::size_t rows_end = lines.size();
  const std::string_view tag = "# labels:";
  if (lines.back().substr(0, tag.size()) == tag) {
    labels = split_ws(lines.back().substr(tag.size()));
    --rows_end;
  }
  if (rows_end - 1 != n) {
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(n) + " rows, found " + std::to_string(rows_end - 1));
  }
  std::vector<Element> entries;
  entries.reserve(n * n);
  for (std::size_t i = 1; i < rows_end; ++i) {
    auto toks = split_ws(lines[i]);
    if (toks.size() != n) throw Error(ErrorCode::ParseError, "row " + std::to_string(i - 1) + " has wrong length");
    for (const auto& t : toks) entries.push_back(static_cast<Element>(parse_count(t, "entry")));
  }
  return FiniteMagma(n, std::move(entries), std::move(labels));
}

}  // namespace magma
