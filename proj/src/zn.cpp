#include "magma/zn.hpp"

#include <charconv>
#include <numeric>

#include "magma/error.hpp"

namespace magma {

std::string_view class_name(ClassTag tag) {
  switch (tag) {
    case ClassTag::Z: return "Z";
    case ClassTag::ZStar: return "Z*";
    case ClassTag::ZStarStar: return "Z**";
    case ClassTag::ZStarStarStar: return "Z***";
    case ClassTag::None: return "none";
  }
  return "none";
}

FiniteMagma build_zn(const ZnSpec& spec) {
  const unsigned n = spec.n;
  if (n < 3) throw Error(ErrorCode::InvalidSpec, "modulus must be at least 3");
  if (spec.t >= n || spec.u >= n) throw Error(ErrorCode::InvalidSpec, "coefficients must lie in [0, n)");
  if (spec.t == 0 && spec.u == 0) throw Error(ErrorCode::InvalidSpec, "(t, u) = (0, 0) is excluded");
  if (!spec.adjoin_identity) {
    std::vector<Element> table(std::size_t{n} * n);
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b) table[a * n + b] = (spec.t * a + spec.u * b) % n;
    return FiniteMagma(n, std::move(table), {}, Element{0});
  }
  const unsigned order = n + 1;
  const Element e = n;
  std::vector<Element> table(std::size_t{order} * order);
  for (unsigned a = 0; a < order; ++a) {
    for (unsigned b = 0; b < order; ++b) {
      Element v;
      if (a == e) v = b;
      else if (b == e) v = a;
      else if (a == b) v = e;
      else v = (spec.t * a + spec.u * b) % n;
      table[a * order + b] = v;
    }
  }
  std::vector<std::string> labels;
  for (unsigned i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  labels.push_back("e");
  return FiniteMagma(order, std::move(table), std::move(labels), Element{0}, e);
}

ClassTag classify_pair(unsigned n, unsigned t, unsigned u) {
  if (t >= n || u >= n || (t == 0 && u == 0)) return ClassTag::None;
  if (t == 0 || u == 0) return ClassTag::ZStarStarStar;
  if (t == u) return ClassTag::ZStarStar;
  if (std::gcd(t, u) != 1) return ClassTag::ZStar;
  return ClassTag::Z;
}

bool in_class(unsigned n, unsigned t, unsigned u, ClassTag tag) {
  ClassTag c = classify_pair(n, t, u);
  if (c == ClassTag::None || tag == ClassTag::None) return false;
  return static_cast<int>(c) <= static_cast<int>(tag);
}

std::vector<std::pair<unsigned, unsigned>> enumerate_class(unsigned n, ClassTag tag) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned t = 0; t < n; ++t)
    for (unsigned u = 0; u < n; ++u)
      if (in_class(n, t, u, tag)) out.emplace_back(t, u);
  return out;
}

std::size_t class_size(unsigned n, ClassTag tag) { return enumerate_class(n, tag).size(); }

bool loop_params_valid(unsigned n, unsigned m) {
  return n > 3 && n % 2 == 1 && m >= 1 && m < n && std::gcd(m, n) == 1 && std::gcd(m - 1, n) == 1;
}

FiniteMagma build_loop(unsigned n, unsigned m) {
  if (!loop_params_valid(n, m)) {
    throw Error(ErrorCode::InvalidLoopParams, "need n > 3 odd, m < n, gcd(m, n) = gcd(m - 1, n) = 1");
  }
  const unsigned order = n + 1;
  const Element e = n;
  const unsigned left = (n - (m - 1) % n) % n;  // -(m-1) mod n
  std::vector<Element> table(std::size_t{order} * order);
  for (unsigned i = 0; i < order; ++i) {
    for (unsigned j = 0; j < order; ++j) {
      Element v;
      if (i == e) v = j;
      else if (j == e) v = i;
      else if (i == j) v = e;
      else v = (m * j + left * i) % n;
      table[i * order + j] = v;
    }
  }
  std::vector<std::string> labels;
  for (unsigned i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  labels.push_back("e");
  return FiniteMagma(order, std::move(table), std::move(labels), std::nullopt, e);
}

PredictedFlags predicted_flags(unsigned n, unsigned t, unsigned u, bool adjoined) {
  PredictedFlags f;
  Residues& r = f.residues;
  r.t2 = (t * t) % n;
  r.u2 = (u * u) % n;
  r.t3 = (r.t2 * t) % n;
  r.t_plus_u = (t + u) % n;
  r.tu_plus_u = (t * u + u) % n;
  r.t_plus_tu = (t + t * u) % n;
  const bool idem_coeffs = r.t2 == t % n && r.u2 == u % n;
  f.semigroup = !adjoined && idem_coeffs;
  f.idempotent_groupoid = !adjoined && r.t_plus_u == 1 % n;
  f.strong_p = idem_coeffs;
  f.strong_alternative = idem_coeffs;
  f.strong_moufang = idem_coeffs;
  f.strong_bol = r.t3 == t % n && r.u2 == u % n;
  f.adjoined_right_alt = adjoined && r.t2 == 1 % n && r.tu_plus_u == 0;
  f.adjoined_left_alt = adjoined && r.u2 == 1 % n && r.t_plus_tu == 0;
  return f;
}

namespace {

unsigned parse_uint(std::string_view s, std::string_view full) {
  unsigned v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) {
    throw Error(ErrorCode::InvalidSpec, "malformed spec '" + std::string(full) + "'");
  }
  return v;
}

}  // namespace

ZnSpec parse_spec(std::string_view text) {
  ZnSpec spec;
  std::string_view body = text;
  constexpr std::string_view suffix = "+e";
  if (body.size() >= suffix.size() && body.substr(body.size() - suffix.size()) == suffix) {
    spec.adjoin_identity = true;
    body.remove_suffix(suffix.size());
  }
  auto c1 = body.find(':');
  auto c2 = c1 == std::string_view::npos ? c1 : body.find(':', c1 + 1);
  if (c1 == std::string_view::npos || c2 == std::string_view::npos || body.find(':', c2 + 1) != std::string_view::npos) {
    throw Error(ErrorCode::InvalidSpec, "expected n:t:u[+e], got '" + std::string(text) + "'");
  }
  spec.n = parse_uint(body.substr(0, c1), text);
  spec.t = parse_uint(body.substr(c1 + 1, c2 - c1 - 1), text);
  spec.u = parse_uint(body.substr(c2 + 1), text);
  if (spec.n < 3 || spec.t >= spec.n || spec.u >= spec.n || (spec.t == 0 && spec.u == 0)) {
    throw Error(ErrorCode::InvalidSpec, "spec '" + std::string(text) + "' violates n >= 3, t,u < n, (t,u) != (0,0)");
  }
  return spec;
}

std::string format_spec(const ZnSpec& spec) {
  std::string s = std::to_string(spec.n) + ":" + std::to_string(spec.t) + ":" + std::to_string(spec.u);
  if (spec.adjoin_identity) s += "+e";
  return s;
}

}  // namespace magma
