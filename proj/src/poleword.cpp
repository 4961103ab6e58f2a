#include "polebracket/poleword.hpp"

#include <algorithm>
#include <set>

namespace polebracket {

PoleWord PoleWord::from_pattern(std::string_view pattern) {
  std::vector<PoleEntry> e;
  PoleKind next = PoleKind::Sink;
  for (char ch : pattern) {
    if (ch == '|') {
      e.push_back(PoleEntry::flip());
    } else if (ch == 'L' || ch == 'R') {
      e.push_back(PoleEntry::pole(next, ch == 'L' ? Side::Left : Side::Right));
      next = next == PoleKind::Sink ? PoleKind::Source : PoleKind::Sink;
    } else if (ch != ' ') {
      throw std::invalid_argument("pole pattern: unexpected character");
    }
  }
  return PoleWord(std::move(e));
}

int PoleWord::pole_count() const {
  return static_cast<int>(std::count_if(entries_.begin(), entries_.end(), [](const PoleEntry& e) { return !e.is_flip; }));
}

int PoleWord::flip_count() const { return static_cast<int>(entries_.size()) - pole_count(); }

bool PoleWord::kinds_alternate() const {
  std::vector<PoleKind> kinds;
  for (const auto& e : entries_)
    if (!e.is_flip) kinds.push_back(e.kind);
  if (kinds.size() % 2) return false;
  for (std::size_t i = 0; i < kinds.size(); ++i)
    if (kinds[i] == kinds[(i + 1) % kinds.size()]) return false;
  return true;
}

NormalWord normalize(const PoleWord& w) {
  NormalWord n;
  bool frame = false;
  for (const auto& e : w.entries()) {
    if (e.is_flip)
      frame = !frame;
    else
      n.sides.push_back(frame ? opposite(e.side) : e.side);
  }
  n.one_sided = frame;
  return n;
}

namespace {

std::vector<PoleEntry> reversed(const std::vector<PoleEntry>& e) {
  std::vector<PoleEntry> r(e.rbegin(), e.rend());
  for (auto& x : r)
    if (!x.is_flip) x.side = opposite(x.side);
  return r;
}

std::vector<std::pair<int, int>> all_redexes(const std::vector<PoleEntry>& e) {
  std::vector<int> poles;
  for (int i = 0; i < static_cast<int>(e.size()); ++i)
    if (!e[static_cast<std::size_t>(i)].is_flip) poles.push_back(i);
  std::vector<std::pair<int, int>> out;
  const auto np = poles.size();
  if (np < 2) return out;
  for (std::size_t k = 0; k < np; ++k) {
    const int a = poles[k], b = poles[(k + 1) % np];
    // Everything strictly between two consecutive poles is a flip mark.
    int flips = 0;
    for (int i = (a + 1) % static_cast<int>(e.size()); i != b; i = (i + 1) % static_cast<int>(e.size())) ++flips;
    const Side sa = e[static_cast<std::size_t>(a)].side;
    const Side sb = flips % 2 ? opposite(e[static_cast<std::size_t>(b)].side) : e[static_cast<std::size_t>(b)].side;
    if (sa == sb) out.emplace_back(a, b);
  }
  return out;
}

// Leftmost redex (pair of entry indices), or {-1,-1}.
std::pair<int, int> leftmost_redex(const std::vector<PoleEntry>& e) {
  const auto all = all_redexes(e);
  return all.empty() ? std::pair{-1, -1} : all.front();
}

std::vector<PoleEntry> erase_pair(const std::vector<PoleEntry>& e, std::pair<int, int> redex) {
  std::vector<PoleEntry> out;
  out.reserve(e.size() - 2);
  for (int i = 0; i < static_cast<int>(e.size()); ++i)
    if (i != redex.first && i != redex.second) out.push_back(e[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace

NormalWord canonical_form(const PoleWord& w) {
  const auto& e = w.entries();
  NormalWord best = normalize(w);
  const std::vector<PoleEntry> variants[2] = {e, reversed(e)};
  for (const auto& v : variants) {
    const std::size_t n = v.size();
    for (std::size_t r = 0; r < std::max<std::size_t>(n, 1); ++r) {
      std::vector<PoleEntry> rot;
      rot.reserve(n);
      for (std::size_t i = 0; i < n; ++i) rot.push_back(v[(i + r) % n]);
      NormalWord cand = normalize(PoleWord(rot));
      best = std::min(best, cand);
      for (auto& s : cand.sides) s = opposite(s);
      best = std::min(best, cand);
    }
  }
  return best;
}

bool equivalent(const PoleWord& a, const PoleWord& b) { return canonical_form(a) == canonical_form(b); }

PoleWord reduce(const PoleWord& w) {
  std::vector<PoleEntry> e = w.entries();
  for (auto redex = leftmost_redex(e); redex.first >= 0; redex = leftmost_redex(e)) e = erase_pair(e, redex);
  return PoleWord(std::move(e));
}

bool is_irreducible(const PoleWord& w) { return leftmost_redex(w.entries()).first < 0; }

int index(const PoleWord& w) { return reduce(w).pole_count() / 2; }

bool confluence_oracle(const PoleWord& w, int max_poles) {
  if (w.pole_count() > max_poles)
    throw BoundExceeded("confluence_oracle: " + std::to_string(w.pole_count()) + " poles exceeds bound " +
                        std::to_string(max_poles));
  std::set<std::vector<std::pair<bool, int>>> seen;
  std::set<NormalWord> terminals;
  auto key = [](const std::vector<PoleEntry>& e) {
    std::vector<std::pair<bool, int>> k;
    for (const auto& x : e) k.emplace_back(x.is_flip, static_cast<int>(x.side));
    return k;
  };
  std::vector<std::vector<PoleEntry>> stack{w.entries()};
  while (!stack.empty()) {
    auto cur = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(key(cur)).second) continue;
    const auto redexes = all_redexes(cur);
    if (redexes.empty()) {
      terminals.insert(canonical_form(PoleWord(cur)));
      continue;
    }
    for (const auto& r : redexes) stack.push_back(erase_pair(cur, r));
  }
  return terminals.size() == 1;
}

std::string render(const PoleWord& w) {
  std::string out;
  for (const auto& e : w.entries()) {
    if (e.is_flip) {
      out += "|f|";
    } else {
      out += '(';
      out += e.kind == PoleKind::Sink ? 'I' : 'O';
      out += ':';
      out += e.side == Side::Left ? 'L' : 'R';
      out += ')';
    }
  }
  return out;
}

PoleWord parse_pole_word(std::string_view text) {
  std::vector<PoleEntry> e;
  std::size_t i = 0;
  auto fail = [&] { throw std::invalid_argument("pole word: malformed at offset " + std::to_string(i)); };
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
    } else if (text.substr(i, 3) == "|f|") {
      e.push_back(PoleEntry::flip());
      i += 3;
    } else if (text[i] == '(' && i + 4 < text.size() && text[i + 2] == ':' && text[i + 4] == ')') {
      const char k = text[i + 1], s = text[i + 3];
      if ((k != 'I' && k != 'O') || (s != 'L' && s != 'R')) fail();
      e.push_back(PoleEntry::pole(k == 'I' ? PoleKind::Sink : PoleKind::Source, s == 'L' ? Side::Left : Side::Right));
      i += 5;
    } else {
      fail();
    }
  }
  return PoleWord(std::move(e));
}

}  // namespace polebracket
