#include "magma/identities.hpp"

#include "magma/error.hpp"

namespace magma {

std::string_view law_name(LawId law) {
  switch (law) {
    case LawId::Moufang: return "moufang";
    case LawId::Bol: return "bol";
    case LawId::P: return "p";
    case LawId::LeftAlt: return "lalt";
    case LawId::RightAlt: return "ralt";
    case LawId::Alternative: return "alt";
  }
  return "?";
}

LawId parse_law(std::string_view name) {
  for (LawId l : kAllLaws)
    if (law_name(l) == name) return l;
  throw Error(ErrorCode::ParseError, "unknown law '" + std::string(name) + "'");
}

std::size_t law_arity(LawId law) { return (law == LawId::Moufang || law == LawId::Bol) ? 3 : 2; }

namespace {

// Evaluates products while noting whether the tuple is degenerate. With no
// identity to watch, it is a plain table lookup.
class Evaluator {
 public:
  Evaluator(const FiniteMagma& m, std::optional<Element> e) : m_(m), e_(e) {}

  // Product of two syntactically distinct subterms; a flag marks a side
  // that is itself a written square.
  Element mul(Element a, Element b, bool a_square = false, bool b_square = false) {
    if (e_) {
      if ((a == *e_ && !a_square) || (b == *e_ && !b_square)) degenerate_ = true;
      if (!a_square && !b_square && a == b) degenerate_ = true;
    }
    return m_.at(a, b);
  }
  Element square(Element a) { return m_.at(a, a); }
  void reset(const Element* vars, std::size_t k) {
    degenerate_ = false;
    if (e_)
      for (std::size_t i = 0; i < k; ++i)
        if (vars[i] == *e_) degenerate_ = true;
  }
  bool degenerate() const { return degenerate_; }

 private:
  const FiniteMagma& m_;
  std::optional<Element> e_;
  bool degenerate_ = false;
};

std::pair<Element, Element> eval_one(Evaluator& ev, LawId law, Element x, Element y, Element z) {
  switch (law) {
    case LawId::Moufang:
      return {ev.mul(ev.mul(x, y), ev.mul(z, x)), ev.mul(ev.mul(x, ev.mul(y, z)), x)};
    case LawId::Bol:
      return {ev.mul(ev.mul(ev.mul(x, y), z), y), ev.mul(x, ev.mul(ev.mul(y, z), y))};
    case LawId::P:
      return {ev.mul(ev.mul(x, y), x), ev.mul(x, ev.mul(y, x))};
    case LawId::RightAlt:
      return {ev.mul(ev.mul(x, y), y), ev.mul(x, ev.square(y), false, true)};
    case LawId::LeftAlt:
      return {ev.mul(ev.square(x), y, true, false), ev.mul(x, ev.mul(x, y))};
    case LawId::Alternative: {
      auto r = eval_one(ev, LawId::RightAlt, x, y, z);
      if (r.first != r.second) return r;
      auto l = eval_one(ev, LawId::LeftAlt, x, y, z);
      if (l.first != l.second) return l;
      return r;
    }
  }
  return {0, 0};
}

}  // namespace

std::pair<Element, Element> evaluate_law(const FiniteMagma& m, LawId law, const std::array<Element, 3>& elems) {
  const std::size_t k = law_arity(law);
  for (std::size_t i = 0; i < k; ++i)
    if (elems[i] >= m.order()) throw Error(ErrorCode::IndexOutOfRange, "law argument out of range");
  Evaluator ev(m, std::nullopt);
  return eval_one(ev, law, elems[0], elems[1], k == 3 ? elems[2] : 0);
}

bool replay_witness(const FiniteMagma& m, LawId law, const Witness& w) {
  if (w.arity() != law_arity(law)) return false;
  auto [l, r] = evaluate_law(m, law, w.elems);
  return l == w.lhs && r == w.rhs && l != r;
}

LawReport check_law(const FiniteMagma& m, LawId law, const std::optional<SubsetMask>& domain, bool skip_degenerate) {
  LawReport rep;
  rep.law = law;
  rep.domain = domain;
  std::vector<Element> elems;
  if (domain) {
    if (domain->width() != m.order()) throw Error(ErrorCode::SubsetOutOfRange, "domain width differs from order");
    elems = domain->elements();
  } else {
    for (Element i = 0; i < m.order(); ++i) elems.push_back(i);
  }
  const bool watch = skip_degenerate && m.adjoined_identity().has_value();
  Evaluator ev(m, watch ? m.adjoined_identity() : std::nullopt);
  const std::size_t k = law_arity(law);
  const Witness::Kind kind = k == 3 ? Witness::Kind::Triple : Witness::Kind::Pair;
  const std::size_t zcount = k == 3 ? elems.size() : 1;

  for (Element x : elems) {
    for (Element y : elems) {
      for (std::size_t zi = 0; zi < zcount; ++zi) {
        const Element z = k == 3 ? elems[zi] : 0;
        const Element vars[3] = {x, y, z};
        ev.reset(vars, k);
        auto [l, r] = eval_one(ev, law, x, y, z);
        if (ev.degenerate()) {
          ++rep.degenerate_skipped;
          if (l != r) {
            ++rep.degenerate_failures;
            if (rep.degenerate_witnesses.size() < kMaxListedDegenerate)
              rep.degenerate_witnesses.push_back(Witness{kind, {x, y, z}, l, r});
          }
          continue;
        }
        ++rep.checked;
        if (l != r && rep.holds) {
          rep.holds = false;
          rep.witness = Witness{kind, {x, y, z}, l, r};
          if (!watch) return rep;
        }
      }
    }
  }
  return rep;
}

}  // namespace magma
