#include "polebracket/code.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace polebracket {

CodeError::CodeError(Kind kind, int component, int offset, const std::string& what)
    : std::runtime_error("component " + std::to_string(component) + ", token " + std::to_string(offset) + ": " +
                         what),
      kind_(kind),
      component_(component),
      offset_(offset) {}

TwistedGaussCode::TwistedGaussCode(std::vector<Component> components) : components_(std::move(components)) {
  struct Seen {
    int count = 0;
    int sign = 0;
    bool over = false;
    bool under = false;
    TokenPos over_pos, under_pos;
  };
  std::map<int, Seen> seen;
  for (int c = 0; c < num_components(); ++c) {
    const auto& comp = components_[static_cast<std::size_t>(c)];
    for (int i = 0; i < static_cast<int>(comp.size()); ++i) {
      const Token& t = comp[static_cast<std::size_t>(i)];
      if (t.is_bar()) continue;
      if (t.crossing <= 0) throw CodeError(CodeError::Kind::Syntax, c, i, "crossing ids must be positive");
      if (t.sign != 1 && t.sign != -1) throw CodeError(CodeError::Kind::Syntax, c, i, "sign must be +1 or -1");
      Seen& s = seen[t.crossing];
      if (++s.count > 2)
        throw CodeError(CodeError::Kind::Pairing, c, i, "crossing " + std::to_string(t.crossing) + " visited more than twice");
      if (s.count == 2 && s.sign != t.sign)
        throw CodeError(CodeError::Kind::Pairing, c, i, "crossing " + std::to_string(t.crossing) + " has mismatched signs");
      s.sign = t.sign;
      bool& flag = t.role == Role::Over ? s.over : s.under;
      if (flag)
        throw CodeError(CodeError::Kind::Pairing, c, i,
                        "crossing " + std::to_string(t.crossing) + " visited twice as " +
                            (t.role == Role::Over ? "over" : "under"));
      flag = true;
      (t.role == Role::Over ? s.over_pos : s.under_pos) = TokenPos{c, i};
    }
  }
  std::map<int, int> renumber;
  for (const auto& [id, s] : seen) {
    if (s.count != 2) {
      const TokenPos p = s.over ? s.over_pos : s.under_pos;
      throw CodeError(CodeError::Kind::Pairing, p.component, p.offset,
                      "crossing " + std::to_string(id) + " visited only once");
    }
    const int fresh = static_cast<int>(renumber.size()) + 1;
    renumber[id] = fresh;
    signs_.push_back(s.sign);
    over_.push_back(s.over_pos);
    under_.push_back(s.under_pos);
  }
  for (auto& comp : components_)
    for (auto& t : comp)
      if (t.is_visit()) t.crossing = renumber[t.crossing];
}

int TwistedGaussCode::num_bars() const {
  int n = 0;
  for (const auto& comp : components_)
    n += static_cast<int>(std::count_if(comp.begin(), comp.end(), [](const Token& t) { return t.is_bar(); }));
  return n;
}

namespace {

Token parse_token(std::string_view word, int component, int offset) {
  auto fail = [&](const std::string& why) {
    throw CodeError(CodeError::Kind::Syntax, component, offset, "bad token '" + std::string(word) + "': " + why);
  };
  if (word == "B") return Token::bar();
  if (word.size() < 3) fail("expected O<id><sign>, U<id><sign> or B");
  Role role;
  if (word[0] == 'O')
    role = Role::Over;
  else if (word[0] == 'U')
    role = Role::Under;
  else
    fail("expected O, U or B");
  int sign = 0;
  std::string_view digits = word.substr(1);
  if (digits.back() == '+') {
    sign = 1;
    digits.remove_suffix(1);
  } else if (digits.back() == '-') {
    sign = -1;
    digits.remove_suffix(1);
  } else if (digits.size() >= 3 && digits.substr(digits.size() - 3) == "\xE2\x88\x92") {  // U+2212
    sign = -1;
    digits.remove_suffix(3);
  } else {
    fail("missing sign");
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    fail("crossing id must be a positive integer");
  if (digits.size() > 9) fail("crossing id too large");
  const int id = std::stoi(std::string(digits));
  if (id == 0) fail("crossing id must be a positive integer");
  return Token::visit(id, role, sign);
}

}  // namespace

TwistedGaussCode parse_code(std::string_view text) {
  std::vector<Component> comps;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (tokens.empty()) continue;
    const int c = static_cast<int>(comps.size());
    Component comp;
    if (tokens.size() == 1 && tokens[0] == "EMPTY") {
      comps.push_back(std::move(comp));
      continue;
    }
    for (int i = 0; i < static_cast<int>(tokens.size()); ++i) {
      if (tokens[static_cast<std::size_t>(i)] == "EMPTY")
        throw CodeError(CodeError::Kind::Syntax, c, i, "EMPTY must stand alone on its line");
      comp.push_back(parse_token(tokens[static_cast<std::size_t>(i)], c, i));
    }
    comps.push_back(std::move(comp));
  }
  return TwistedGaussCode(std::move(comps));
}

std::string to_string(const Token& t) {
  if (t.is_bar()) return "B";
  return std::string(t.role == Role::Over ? "O" : "U") + std::to_string(t.crossing) + (t.sign > 0 ? "+" : "-");
}

std::string to_text(const TwistedGaussCode& code) {
  std::string out;
  for (const auto& comp : code.components()) {
    if (comp.empty()) {
      out += "EMPTY\n";
      continue;
    }
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (i) out += ' ';
      out += to_string(comp[i]);
    }
    out += '\n';
  }
  return out;
}

std::string serialize(const TwistedGaussCode& code) { return to_text(canonicalize(code)); }

int writhe(const TwistedGaussCode& code) {
  int w = 0;
  for (int id = 1; id <= code.num_crossings(); ++id) w += code.sign(id);
  return w;
}

namespace {

// Branch-and-bound search for the lexicographically least encoding over
// component orders and rotations, numbering crossings by first appearance.
class Canonicalizer {
 public:
  explicit Canonicalizer(const TwistedGaussCode& code)
      : code_(code), used_(static_cast<std::size_t>(code.num_components()), false),
        numbering_(static_cast<std::size_t>(code.num_crossings()) + 1, 0) {}

  TwistedGaussCode run() {
    search(0);
    std::vector<Component> comps;
    for (const auto& [c, r] : best_choice_) {
      const auto& src = code_.component(c);
      Component comp;
      for (std::size_t i = 0; i < src.size(); ++i) comp.push_back(src[(i + static_cast<std::size_t>(r)) % src.size()]);
      comps.push_back(std::move(comp));
    }
    // Renumber by first appearance.
    std::vector<int> fresh(static_cast<std::size_t>(code_.num_crossings()) + 1, 0);
    int next = 0;
    for (auto& comp : comps)
      for (auto& t : comp)
        if (t.is_visit()) {
          auto& f = fresh[static_cast<std::size_t>(t.crossing)];
          if (!f) f = ++next;
          t.crossing = f;
        }
    return TwistedGaussCode(std::move(comps));
  }

 private:
  static int encode(const Token& t, int id) {
    if (t.is_bar()) return 1;
    return 2 + 4 * (id - 1) + (t.role == Role::Under ? 2 : 0) + (t.sign < 0 ? 1 : 0);
  }

  // Compares `prefix_` against the same-length prefix of the best encoding.
  bool worse_than_best() const {
    if (!have_best_) return false;
    const std::size_t n = std::min(prefix_.size(), best_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (prefix_[i] != best_[i]) return prefix_[i] > best_[i];
    }
    return false;
  }

  void search(int depth) {
    if (depth == code_.num_components()) {
      if (!have_best_ || prefix_ < best_) {
        best_ = prefix_;
        best_choice_ = choice_;
        have_best_ = true;
      }
      return;
    }
    std::vector<Component> tried_free;
    for (int c = 0; c < code_.num_components(); ++c) {
      if (used_[static_cast<std::size_t>(c)]) continue;
      const auto& comp = code_.component(c);
      const bool has_visit = std::any_of(comp.begin(), comp.end(), [](const Token& t) { return t.is_visit(); });
      if (!has_visit) {
        // Bar-only components are interchangeable when equal.
        if (std::find(tried_free.begin(), tried_free.end(), comp) != tried_free.end()) continue;
        tried_free.push_back(comp);
      }
      const std::size_t len = comp.size();
      const std::size_t rotations = len == 0 ? 1 : len;
      for (std::size_t r = 0; r < rotations; ++r) {
        const std::size_t saved_len = prefix_.size();
        const int saved_next = next_id_;
        std::vector<int> assigned;
        for (std::size_t i = 0; i < len; ++i) {
          const Token& t = comp[(i + r) % len];
          int id = 0;
          if (t.is_visit()) {
            int& slot = numbering_[static_cast<std::size_t>(t.crossing)];
            if (!slot) {
              slot = ++next_id_;
              assigned.push_back(t.crossing);
            }
            id = slot;
          }
          prefix_.push_back(encode(t, id));
        }
        prefix_.push_back(0);
        if (!worse_than_best()) {
          used_[static_cast<std::size_t>(c)] = true;
          choice_.emplace_back(c, static_cast<int>(r));
          search(depth + 1);
          choice_.pop_back();
          used_[static_cast<std::size_t>(c)] = false;
        }
        for (int x : assigned) numbering_[static_cast<std::size_t>(x)] = 0;
        next_id_ = saved_next;
        prefix_.resize(saved_len);
      }
    }
  }

  const TwistedGaussCode& code_;
  std::vector<bool> used_;
  std::vector<int> numbering_;
  int next_id_ = 0;
  std::vector<int> prefix_;
  std::vector<std::pair<int, int>> choice_;
  std::vector<int> best_;
  std::vector<std::pair<int, int>> best_choice_;
  bool have_best_ = false;
};

}  // namespace

TwistedGaussCode canonicalize(const TwistedGaussCode& code) { return Canonicalizer(code).run(); }

TwistedGaussCode random_diagram(std::uint64_t seed, int crossings, int bars, int components) {
  if (crossings < 0 || bars < 0) throw CodeError(CodeError::Kind::Infeasible, 0, 0, "negative crossing or bar count");
  if (components < 1) throw CodeError(CodeError::Kind::Infeasible, 0, 0, "need at least one component");
  const int total = 2 * crossings + bars;
  if (components > 1 && components > total)
    throw CodeError(CodeError::Kind::Infeasible, 0, 0,
                    std::to_string(components) + " components need at least as many tokens, have " +
                        std::to_string(total));
  std::mt19937_64 rng(seed);
  auto below = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  std::vector<Token> tokens;
  for (int id = 1; id <= crossings; ++id) {
    const int sign = (rng() & 1) ? 1 : -1;
    tokens.push_back(Token::visit(id, Role::Over, sign));
    tokens.push_back(Token::visit(id, Role::Under, sign));
  }
  for (int b = 0; b < bars; ++b) tokens.push_back(Token::bar());
  for (std::size_t i = tokens.size(); i > 1; --i) std::swap(tokens[i - 1], tokens[below(i)]);

  std::vector<Component> comps;
  if (components == 1) {
    comps.push_back(tokens);
  } else {
    // Choose components-1 distinct cut points among the total-1 interior gaps.
    std::vector<std::size_t> gaps;
    for (std::size_t g = 1; g < tokens.size(); ++g) gaps.push_back(g);
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(components); ++i)
      std::swap(gaps[i], gaps[i + below(gaps.size() - i)]);
    std::vector<std::size_t> cuts(gaps.begin(), gaps.begin() + (components - 1));
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(tokens.size());
    std::size_t start = 0;
    for (std::size_t cut : cuts) {
      comps.emplace_back(tokens.begin() + static_cast<std::ptrdiff_t>(start),
                         tokens.begin() + static_cast<std::ptrdiff_t>(cut));
      start = cut;
    }
  }
  return TwistedGaussCode(std::move(comps));
}

}  // namespace polebracket
