#include "magma/automata.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

#include "magma/error.hpp"

namespace magma {

namespace {

void check_index(std::size_t v, std::size_t bound, const char* what) {
  if (v >= bound) {
    throw Error(ErrorCode::IndexOutOfRange,
                std::string(what) + " " + std::to_string(v) + " not below " + std::to_string(bound));
  }
}

void check_word(const SemiAutomaton& sa, State z0, const InputWord& w) {
  check_index(z0, sa.state_count, "state");
  for (Letter a : w) check_index(a, sa.input_count, "letter");
}

std::string state_name(const SemiAutomaton& sa, State z) {
  return sa.state_labels.empty() ? std::to_string(z) : sa.state_labels[z];
}

std::string letter_name(const SemiAutomaton& sa, Letter a) {
  return sa.input_labels.empty() ? std::to_string(a) : sa.input_labels[a];
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string dot_body(const SemiAutomaton& sa, const std::function<std::string(State, Letter)>& label) {
  std::ostringstream os;
  os << "digraph machine {\n  rankdir=LR;\n";
  for (State z = 0; z < sa.state_count; ++z) os << "  " << dot_quote(state_name(sa, z)) << ";\n";
  for (State z = 0; z < sa.state_count; ++z) {
    for (Letter a = 0; a < sa.input_count; ++a) {
      os << "  " << dot_quote(state_name(sa, z)) << " -> " << dot_quote(state_name(sa, sa.next(z, a)))
         << " [label=" << dot_quote(label(z, a)) << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::vector<std::string> pair_labels(std::size_t k1, std::size_t k2) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k1; ++i) {
    for (std::size_t j = 0; j < k2; ++j) out.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return out;
}

}  // namespace

SemiAutomaton make_semi(std::size_t states, std::size_t inputs, std::vector<State> delta) {
  if (states == 0 || inputs == 0) throw Error(ErrorCode::LengthMismatch, "machine needs states and letters");
  if (delta.size() != states * inputs) {
    throw Error(ErrorCode::LengthMismatch, "delta has " + std::to_string(delta.size()) + " entries, expected " +
                                               std::to_string(states * inputs));
  }
  for (State z : delta) {
    if (z >= states) throw Error(ErrorCode::EntryOutOfRange, "delta entry " + std::to_string(z));
  }
  SemiAutomaton sa;
  sa.state_count = states;
  sa.input_count = inputs;
  sa.delta = std::move(delta);
  return sa;
}

SemiAutomaton make_semi(const std::vector<std::vector<State>>& rows) {
  if (rows.empty()) throw Error(ErrorCode::LengthMismatch, "no delta rows");
  std::vector<State> flat;
  for (const auto& r : rows) {
    if (r.size() != rows[0].size()) throw Error(ErrorCode::LengthMismatch, "ragged delta rows");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return make_semi(rows.size(), rows[0].size(), std::move(flat));
}

Automaton make_automaton(SemiAutomaton semi, std::size_t outputs, std::vector<Letter> lambda) {
  if (outputs == 0) throw Error(ErrorCode::LengthMismatch, "machine needs output letters");
  if (lambda.size() != semi.delta.size()) {
    throw Error(ErrorCode::LengthMismatch, "lambda has " + std::to_string(lambda.size()) + " entries, expected " +
                                               std::to_string(semi.delta.size()));
  }
  for (Letter b : lambda) {
    if (b >= outputs) throw Error(ErrorCode::EntryOutOfRange, "lambda entry " + std::to_string(b));
  }
  return Automaton{std::move(semi), outputs, std::move(lambda)};
}

Automaton make_automaton(const std::vector<std::vector<State>>& delta_rows, std::size_t outputs,
                         const std::vector<std::vector<Letter>>& lambda_rows) {
  SemiAutomaton sa = make_semi(delta_rows);
  if (lambda_rows.size() != sa.state_count) throw Error(ErrorCode::LengthMismatch, "lambda row count");
  std::vector<Letter> flat;
  for (const auto& r : lambda_rows) {
    if (r.size() != sa.input_count) throw Error(ErrorCode::LengthMismatch, "lambda row length");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return make_automaton(std::move(sa), outputs, std::move(flat));
}

State run_semi(const SemiAutomaton& sa, State z0, const InputWord& w) {
  check_word(sa, z0, w);
  State z = z0;
  for (Letter a : w) z = sa.next(z, a);
  return z;
}

AutoRun run_auto(const Automaton& at, State z0, const InputWord& w) {
  check_word(at.semi, z0, w);
  AutoRun r;
  r.final_state = z0;
  for (Letter a : w) {
    r.output.push_back(at.out(r.final_state, a));
    r.final_state = at.semi.next(r.final_state, a);
  }
  return r;
}

FreeWord FreeWord::leaf(Letter a) {
  FreeWord w;
  w.letter_ = a;
  return w;
}

FreeWord FreeWord::join(FreeWord left, FreeWord right) {
  FreeWord w;
  w.left_ = std::make_shared<const FreeWord>(std::move(left));
  w.right_ = std::make_shared<const FreeWord>(std::move(right));
  return w;
}

InputWord FreeWord::leaves() const {
  if (is_leaf()) return {letter_};
  InputWord out = left_->leaves();
  const InputWord r = right_->leaves();
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::string FreeWord::to_string() const {
  if (is_leaf()) return std::to_string(letter_);
  return "(" + left_->to_string() + "." + right_->to_string() + ")";
}

State run_free(const SemiAutomaton& sa, State z0, const FreeWord& fw) {
  check_index(z0, sa.state_count, "state");
  if (fw.is_leaf()) {
    check_index(fw.letter(), sa.input_count, "letter");
    return sa.next(z0, fw.letter());
  }
  return run_free(sa, run_free(sa, z0, fw.left()), fw.right());
}

namespace {

void check_machine_spec(const ZnSpec& s) {
  if (s.adjoin_identity) throw Error(ErrorCode::InvalidSpec, "machine specs cannot adjoin an identity");
  (void)build_zn(s);  // validates n, t, u
}

}  // namespace

SemiAutomaton from_groupoids(const ZnSpec& z, const ZnSpec& a) {
  check_machine_spec(z);
  check_machine_spec(a);
  std::vector<State> delta(std::size_t{z.n} * a.n);
  for (State s = 0; s < z.n; ++s) {
    for (Letter x = 0; x < a.n; ++x) delta[s * a.n + x] = (z.t * s + z.u * (x % z.n)) % z.n;
  }
  return make_semi(z.n, a.n, std::move(delta));
}

Automaton from_groupoids(const ZnSpec& z, const ZnSpec& a, const ZnSpec& b) {
  SemiAutomaton sa = from_groupoids(z, a);
  check_machine_spec(b);
  std::vector<Letter> lambda(sa.delta.size());
  for (State s = 0; s < z.n; ++s) {
    for (Letter x = 0; x < a.n; ++x) lambda[s * a.n + x] = (b.t * (s % b.n) + b.u * (x % b.n)) % b.n;
  }
  return make_automaton(std::move(sa), b.n, std::move(lambda));
}

std::vector<SubsetMask> closed_state_sets(const SemiAutomaton& sa, const std::optional<std::vector<Letter>>& letters) {
  if (sa.state_count > SubsetMask::kMaxWidth) {
    throw Error(ErrorCode::OrderTooLarge, "too many states for subset enumeration");
  }
  std::vector<Letter> alpha;
  if (letters) {
    for (Letter a : *letters) check_index(a, sa.input_count, "letter");
    alpha = *letters;
  } else {
    for (Letter a = 0; a < sa.input_count; ++a) alpha.push_back(a);
  }
  const std::size_t k = sa.state_count;
  // Each state's successor set; closure of a seed is reachability.
  std::vector<std::uint64_t> succ(k, 0);
  for (State z = 0; z < k; ++z) {
    for (Letter a : alpha) succ[z] |= std::uint64_t{1} << sa.next(z, a);
  }
  auto close = [&](std::uint64_t s) {
    for (;;) {
      std::uint64_t t = s;
      for (std::uint64_t b = s; b; b &= b - 1) t |= succ[std::countr_zero(b)];
      if (t == s) return s;
      s = t;
    }
  };
  const std::uint64_t full = SubsetMask::full_bits(k);
  std::vector<SubsetMask> out;
  std::uint64_t a = close(0);
  while (a != full) {
    bool advanced = false;
    for (std::size_t i = k; i-- > 0;) {
      const std::uint64_t bi = std::uint64_t{1} << i;
      if (a & bi) continue;
      const std::uint64_t low = bi - 1;
      const std::uint64_t b = close((a & low) | bi);
      if ((b & low) == (a & low)) {
        a = b;
        advanced = true;
        break;
      }
    }
    if (!advanced || a == full) break;
    out.push_back(SubsetMask::from_bits(k, a));
  }
  std::sort(out.begin(), out.end(), [](const SubsetMask& x, const SubsetMask& y) {
    if (x.count() != y.count()) return x.count() < y.count();
    return x.elements() < y.elements();
  });
  return out;
}

std::vector<SubsetMask> s_sub_semi_automata(const SemiAutomaton& sa) {
  const auto all = closed_state_sets(sa);
  std::vector<SubsetMask> out;
  for (const auto& h : all) {
    if (std::any_of(all.begin(), all.end(), [&](const SubsetMask& k) { return k.is_proper_subset_of(h); })) {
      out.push_back(h);
    }
  }
  return out;
}

SemiAutomaton restrict_states(const SemiAutomaton& sa, const SubsetMask& states) {
  const auto elems = states.elements();
  std::vector<State> index(sa.state_count, 0);
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<State>(i);
  std::vector<State> delta;
  for (State z : elems) {
    for (Letter a = 0; a < sa.input_count; ++a) {
      const State t = sa.next(z, a);
      if (!states.contains(t)) throw Error(ErrorCode::NotClosed, states.to_string() + " is not closed under delta");
      delta.push_back(index[t]);
    }
  }
  SemiAutomaton out = make_semi(elems.size(), sa.input_count, std::move(delta));
  out.input_labels = sa.input_labels;
  for (State z : elems) out.state_labels.push_back(state_name(sa, z));
  return out;
}

Automaton restrict_states(const Automaton& at, const SubsetMask& states) {
  SemiAutomaton semi = restrict_states(at.semi, states);
  std::vector<Letter> lambda;
  for (State z : states.elements()) {
    for (Letter a = 0; a < at.semi.input_count; ++a) lambda.push_back(at.out(z, a));
  }
  return make_automaton(std::move(semi), at.output_count, std::move(lambda));
}

Automaton series_compose(const Automaton& k1, const Automaton& k2) {
  if (k1.output_count != k2.semi.input_count) {
    throw Error(ErrorCode::AlphabetMismatch, "K1 emits " + std::to_string(k1.output_count) +
                                                 " letters but K2 reads " + std::to_string(k2.semi.input_count));
  }
  const std::size_t s1 = k1.semi.state_count, s2 = k2.semi.state_count, n = k1.semi.input_count;
  std::vector<State> delta(s1 * s2 * n);
  std::vector<Letter> lambda(s1 * s2 * n);
  for (State z1 = 0; z1 < s1; ++z1) {
    for (State z2 = 0; z2 < s2; ++z2) {
      const std::size_t row = (z1 * s2 + z2) * n;
      for (Letter a = 0; a < n; ++a) {
        const Letter mid = k1.out(z1, a);
        delta[row + a] = static_cast<State>(k1.semi.next(z1, a) * s2 + k2.semi.next(z2, mid));
        lambda[row + a] = k2.out(z2, mid);
      }
    }
  }
  Automaton out = make_automaton(make_semi(s1 * s2, n, std::move(delta)), k2.output_count, std::move(lambda));
  out.semi.state_labels = pair_labels(s1, s2);
  return out;
}

Automaton parallel_compose(const Automaton& k1, const Automaton& k2) {
  const std::size_t s1 = k1.semi.state_count, s2 = k2.semi.state_count;
  const std::size_t n1 = k1.semi.input_count, n2 = k2.semi.input_count;
  const std::size_t n = n1 * n2;
  std::vector<State> delta(s1 * s2 * n);
  std::vector<Letter> lambda(s1 * s2 * n);
  for (State z1 = 0; z1 < s1; ++z1) {
    for (State z2 = 0; z2 < s2; ++z2) {
      for (Letter a1 = 0; a1 < n1; ++a1) {
        for (Letter a2 = 0; a2 < n2; ++a2) {
          const std::size_t cell = (z1 * s2 + z2) * n + a1 * n2 + a2;
          delta[cell] = static_cast<State>(k1.semi.next(z1, a1) * s2 + k2.semi.next(z2, a2));
          lambda[cell] = static_cast<Letter>(k1.out(z1, a1) * k2.output_count + k2.out(z2, a2));
        }
      }
    }
  }
  Automaton out =
      make_automaton(make_semi(s1 * s2, n, std::move(delta)), k1.output_count * k2.output_count, std::move(lambda));
  out.semi.state_labels = pair_labels(s1, s2);
  out.semi.input_labels = pair_labels(n1, n2);
  return out;
}

namespace {

bool surjects_onto(const Automaton& k1, const Automaton& k2, const std::vector<State>& dom) {
  const std::size_t n = k1.semi.input_count;
  std::vector<int> pos(k2.semi.state_count, -1);
  for (std::size_t i = 0; i < dom.size(); ++i) pos[dom[i]] = static_cast<int>(i);
  std::vector<State> phi(dom.size());
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == dom.size()) {
      std::uint64_t hit = 0;
      for (State s : phi) hit |= std::uint64_t{1} << s;
      return hit == SubsetMask::full_bits(k1.semi.state_count);
    }
    for (State c = 0; c < k1.semi.state_count; ++c) {
      phi[k] = c;
      bool ok = true;
      for (std::size_t i = 0; i <= k && ok; ++i) {
        for (Letter a = 0; a < n && ok; ++a) {
          if (k2.out(dom[i], a) != k1.out(phi[i], a)) ok = false;
          const auto p = static_cast<std::size_t>(pos[k2.semi.next(dom[i], a)]);
          if (ok && p <= k && phi[p] != k1.semi.next(phi[i], a)) ok = false;
        }
      }
      // earlier states whose successor is slot k
      for (std::size_t i = 0; i < k && ok; ++i) {
        for (Letter a = 0; a < n && ok; ++a) {
          if (static_cast<std::size_t>(pos[k2.semi.next(dom[i], a)]) == k && phi[k] != k1.semi.next(phi[i], a)) {
            ok = false;
          }
        }
      }
      if (ok && rec(k + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

bool automaton_divides(const Automaton& k1, const Automaton& k2, std::size_t max_states) {
  if (k1.semi.state_count > max_states || k2.semi.state_count > max_states) {
    throw Error(ErrorCode::OrderTooLarge, "divides search limited to " + std::to_string(max_states) + " states");
  }
  if (k1.semi.input_count != k2.semi.input_count || k1.output_count != k2.output_count) return false;
  auto subs = closed_state_sets(k2.semi);
  subs.push_back(SubsetMask::full(k2.semi.state_count));
  for (const auto& t : subs) {
    if (t.count() < k1.semi.state_count) continue;
    if (surjects_onto(k1, k2, t.elements())) return true;
  }
  return false;
}

bool automaton_equivalent(const Automaton& k1, const Automaton& k2, std::size_t max_states) {
  return automaton_divides(k1, k2, max_states) && automaton_divides(k2, k1, max_states);
}

std::string to_dot(const SemiAutomaton& sa) {
  return dot_body(sa, [&](State, Letter a) { return letter_name(sa, a); });
}

std::string to_dot(const Automaton& at) {
  return dot_body(at.semi,
                  [&](State z, Letter a) { return letter_name(at.semi, a) + "/" + std::to_string(at.out(z, a)); });
}

namespace {

void write_rows(std::ostringstream& os, const std::vector<std::uint32_t>& flat, std::size_t rows, std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) os << (c ? " " : "") << flat[r * cols + c];
    os << '\n';
  }
}

}  // namespace

std::string to_text(const SemiAutomaton& sa) {
  std::ostringstream os;
  os << sa.state_count << ' ' << sa.input_count << '\n';
  write_rows(os, sa.delta, sa.state_count, sa.input_count);
  return os.str();
}

std::string to_text(const Automaton& at) {
  std::ostringstream os;
  os << at.semi.state_count << ' ' << at.semi.input_count << ' ' << at.output_count << '\n';
  write_rows(os, at.semi.delta, at.semi.state_count, at.semi.input_count);
  write_rows(os, at.lambda, at.semi.state_count, at.semi.input_count);
  return os.str();
}

std::variant<SemiAutomaton, Automaton> parse_machine(std::string_view text) {
  std::vector<std::vector<long long>> lines;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> nums;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
        nums.push_back(v);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad token '" + tok + "'");
      }
    }
    if (!nums.empty()) lines.push_back(std::move(nums));
  }
  if (lines.empty() || lines[0].size() < 2 || lines[0].size() > 3) {
    throw Error(ErrorCode::ParseError, "header must be 'k n' or 'k n m'");
  }
  const auto k = static_cast<std::size_t>(lines[0][0]);
  const auto n = static_cast<std::size_t>(lines[0][1]);
  const bool has_out = lines[0].size() == 3;
  const std::size_t want = 1 + k * (has_out ? 2 : 1);
  if (lines.size() != want) {
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(want - 1) + " table rows, found " +
                                           std::to_string(lines.size() - 1));
  }
  auto flat = [&](std::size_t first) {
    std::vector<std::uint32_t> out;
    for (std::size_t r = first; r < first + k; ++r) {
      if (lines[r].size() != n) throw Error(ErrorCode::ParseError, "row " + std::to_string(r) + " length");
      for (long long v : lines[r]) out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
  };
  SemiAutomaton sa;
  try {
    sa = make_semi(k, n, flat(1));
    if (!has_out) return sa;
    return make_automaton(std::move(sa), static_cast<std::size_t>(lines[0][2]), flat(1 + k));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, e.what());
  }
}

InputWord parse_word(std::string_view text) {
  InputWord w;
  const bool commas = text.find(',') != std::string_view::npos;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    w.push_back(static_cast<Letter>(std::stoul(cur)));
    cur.clear();
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      cur += c;
      if (!commas) flush();
    } else if (c == ',' || c == ' ') {
      flush();
    } else {
      throw Error(ErrorCode::ParseError, std::string("bad letter character '") + c + "'");
    }
  }
  flush();
  return w;
}

}  // namespace magma
