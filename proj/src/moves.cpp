#include "polebracket/moves.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>

#include "polebracket/surface.hpp"

namespace polebracket {

namespace {

[[noreturn]] void mismatch(const std::string& expected) { throw MoveError("move does not apply: expected " + expected); }

const Token& at(const std::vector<Component>& comps, TokenPos p) {
  return comps[static_cast<std::size_t>(p.component)][static_cast<std::size_t>(p.offset)];
}

bool valid_token(const TwistedGaussCode& code, TokenPos p) {
  return p.component >= 0 && p.component < code.num_components() && p.offset >= 0 &&
         p.offset < static_cast<int>(code.component(p.component).size());
}

bool valid_gap(const TwistedGaussCode& code, TokenPos p) {
  if (p.component < 0 || p.component >= code.num_components()) return false;
  const int n = static_cast<int>(code.component(p.component).size());
  return p.offset >= 0 && (p.offset < n || (n == 0 && p.offset == 0));
}

TokenPos next(const TwistedGaussCode& code, TokenPos p) {
  const int n = static_cast<int>(code.component(p.component).size());
  return {p.component, (p.offset + 1) % n};
}

TokenPos prev(const TwistedGaussCode& code, TokenPos p) {
  const int n = static_cast<int>(code.component(p.component).size());
  return {p.component, (p.offset + n - 1) % n};
}

// Inserts token runs at gaps. Runs at the same gap keep their given order.
TwistedGaussCode insert_runs(const TwistedGaussCode& code, std::vector<std::pair<TokenPos, std::vector<Token>>> runs) {
  std::vector<Component> comps = code.components();
  std::stable_sort(runs.begin(), runs.end(), [](const auto& x, const auto& y) {
    return std::pair(x.first.component, x.first.offset) > std::pair(y.first.component, y.first.offset);
  });
  for (std::size_t i = 0; i < runs.size();) {
    std::size_t j = i;
    while (j < runs.size() && runs[j].first == runs[i].first) ++j;
    auto& comp = comps[static_cast<std::size_t>(runs[i].first.component)];
    std::vector<Token> merged;
    for (std::size_t k = i; k < j; ++k) merged.insert(merged.end(), runs[k].second.begin(), runs[k].second.end());
    comp.insert(comp.begin() + runs[i].first.offset, merged.begin(), merged.end());
    i = j;
  }
  return TwistedGaussCode(std::move(comps));
}

// Removes the tokens at the given positions.
TwistedGaussCode erase_tokens(const TwistedGaussCode& code, std::vector<TokenPos> positions) {
  std::vector<Component> comps = code.components();
  std::sort(positions.begin(), positions.end(), [](TokenPos x, TokenPos y) {
    return std::pair(x.component, x.offset) > std::pair(y.component, y.offset);
  });
  for (TokenPos p : positions) {
    auto& comp = comps[static_cast<std::size_t>(p.component)];
    comp.erase(comp.begin() + p.offset);
  }
  return TwistedGaussCode(std::move(comps));
}

int fresh_id(const TwistedGaussCode& code) { return code.num_crossings() + 1; }

TwistedGaussCode r1_insert(const TwistedGaussCode& code, const MoveSpec& mv, int sign) {
  if (mv.sites.size() != 1 || !valid_gap(code, mv.sites[0])) mismatch("one gap for an R1 insertion");
  if (mv.variant < 0 || mv.variant > 1) mismatch("R1 variant 0 or 1");
  const int id = fresh_id(code);
  std::vector<Token> run{Token::visit(id, Role::Over, sign), Token::visit(id, Role::Under, sign)};
  if (mv.variant == 1) std::swap(run[0], run[1]);
  return insert_runs(code, {{mv.sites[0], run}});
}

TwistedGaussCode r1_delete(const TwistedGaussCode& code, const MoveSpec& mv, int sign) {
  const std::string pattern = std::string("adjacent O_k U_k or U_k O_k with sign ") + (sign > 0 ? "+" : "-");
  if (mv.sites.size() != 1 || !valid_token(code, mv.sites[0])) mismatch(pattern);
  const TokenPos p = mv.sites[0];
  if (code.component(p.component).size() < 2) mismatch(pattern);
  const TokenPos q = next(code, p);
  const Token& a = at(code.components(), p);
  const Token& b = at(code.components(), q);
  if (!a.is_visit() || !b.is_visit() || a.crossing != b.crossing || a.sign != sign) mismatch(pattern);
  return erase_tokens(code, {p, q});
}

TwistedGaussCode r2_insert(const TwistedGaussCode& code, const MoveSpec& mv) {
  if (mv.sites.size() != 2 || !valid_gap(code, mv.sites[0]) || !valid_gap(code, mv.sites[1]))
    mismatch("two gaps for an R2 insertion");
  if (mv.variant < 0 || mv.variant > 3) mismatch("R2 variant 0..3");
  const int s = (mv.variant & 1) ? -1 : 1;
  const int j = fresh_id(code), k = j + 1;
  std::vector<Token> over{Token::visit(j, Role::Over, s), Token::visit(k, Role::Over, -s)};
  std::vector<Token> under{Token::visit(j, Role::Under, s), Token::visit(k, Role::Under, -s)};
  if (mv.variant & 2) std::swap(under[0], under[1]);
  return insert_runs(code, {{mv.sites[0], over}, {mv.sites[1], under}});
}

// For an over pair starting at p, the positions of the matching under pair
// (first in traversal order), or nullopt.
std::optional<std::array<TokenPos, 4>> r2_pattern(const TwistedGaussCode& code, TokenPos p) {
  if (code.component(p.component).size() < 2) return std::nullopt;
  const TokenPos q = next(code, p);
  const Token& a = at(code.components(), p);
  const Token& b = at(code.components(), q);
  if (!a.is_visit() || !b.is_visit() || a.role != Role::Over || b.role != Role::Over) return std::nullopt;
  if (a.crossing == b.crossing || a.sign == b.sign) return std::nullopt;
  const TokenPos ua = code.under_visit(a.crossing), ub = code.under_visit(b.crossing);
  if (ua.component != ub.component) return std::nullopt;
  if (next(code, ua) == ub) return std::array{p, q, ua, ub};
  if (next(code, ub) == ua) return std::array{p, q, ub, ua};
  return std::nullopt;
}

TwistedGaussCode r2_delete(const TwistedGaussCode& code, const MoveSpec& mv) {
  const std::string pattern = "adjacent O_j O_k of opposite signs with adjacent U_j, U_k";
  if (mv.sites.size() != 1 || !valid_token(code, mv.sites[0])) mismatch(pattern);
  const auto pat = r2_pattern(code, mv.sites[0]);
  if (!pat) mismatch(pattern);
  return erase_tokens(code, {(*pat)[0], (*pat)[1], (*pat)[2], (*pat)[3]});
}

// Checks the R3 pattern for three pair starts; returns false on mismatch.
bool r3_pattern(const TwistedGaussCode& code, const ClosedSurface& f, const std::vector<TokenPos>& starts) {
  if (starts.size() != 3) return false;
  std::set<std::pair<int, int>> used;
  std::map<int, int> crossing_count;
  int top = 0, bottom = 0;
  std::vector<int> bands;
  for (TokenPos p : starts) {
    if (!valid_token(code, p) || code.component(p.component).size() < 2) return false;
    const TokenPos q = next(code, p);
    const Token& a = at(code.components(), p);
    const Token& b = at(code.components(), q);
    if (!a.is_visit() || !b.is_visit() || a.crossing == b.crossing) return false;
    if (!used.insert({p.component, p.offset}).second || !used.insert({q.component, q.offset}).second) return false;
    ++crossing_count[a.crossing];
    ++crossing_count[b.crossing];
    if (a.role == Role::Over && b.role == Role::Over) ++top;
    if (a.role == Role::Under && b.role == Role::Under) ++bottom;
    bands.push_back(f.base().band_after(p));
  }
  if (crossing_count.size() != 3) return false;
  for (const auto& [id, n] : crossing_count)
    if (n != 2) return false;
  if (top != 1 || bottom != 1) return false;
  // The three arcs must bound a triangular face.
  const RibbonComplex& r = f.base();
  auto side_caps = [&](int b) {
    const Band& band = r.bands()[static_cast<std::size_t>(b)];
    return std::pair(f.cap_of_corner(r.corner(band.tail.vertex, band.tail.slot)),
                     f.cap_of_corner(r.corner(band.tail.vertex, band.tail.slot - 1)));
  };
  const auto [l0, r0] = side_caps(bands[0]);
  for (int cap : {l0, r0}) {
    if (f.cap_size(cap) != 3) continue;
    bool all = true;
    for (int k = 1; k < 3; ++k) {
      const auto [lk, rk] = side_caps(bands[static_cast<std::size_t>(k)]);
      all = all && (lk == cap || rk == cap);
    }
    if (all) return true;
  }
  return false;
}

TwistedGaussCode r3_rewrite(const TwistedGaussCode& code, const MoveSpec& mv) {
  const ClosedSurface f = ClosedSurface::from_code(code);
  if (!r3_pattern(code, f, mv.sites))
    mismatch("three bar-free adjacent visit pairs on a triangular face, one pair over-over and one under-under");
  std::vector<Component> comps = code.components();
  for (TokenPos p : mv.sites) {
    const TokenPos q = next(code, p);
    std::swap(comps[static_cast<std::size_t>(p.component)][static_cast<std::size_t>(p.offset)],
              comps[static_cast<std::size_t>(q.component)][static_cast<std::size_t>(q.offset)]);
  }
  return TwistedGaussCode(std::move(comps));
}

TwistedGaussCode t1_insert(const TwistedGaussCode& code, const MoveSpec& mv) {
  if (mv.sites.size() != 1 || !valid_gap(code, mv.sites[0])) mismatch("one gap for a T1 insertion");
  return insert_runs(code, {{mv.sites[0], {Token::bar(), Token::bar()}}});
}

TwistedGaussCode t1_delete(const TwistedGaussCode& code, const MoveSpec& mv) {
  const std::string pattern = "two adjacent bars";
  if (mv.sites.size() != 1 || !valid_token(code, mv.sites[0])) mismatch(pattern);
  const TokenPos p = mv.sites[0];
  if (code.component(p.component).size() < 2) mismatch(pattern);
  const TokenPos q = next(code, p);
  if (!at(code.components(), p).is_bar() || !at(code.components(), q).is_bar()) mismatch(pattern);
  return erase_tokens(code, {p, q});
}

bool t3_applies(const TwistedGaussCode& code, TokenPos over, int variant) {
  if (!valid_token(code, over)) return false;
  const Token& t = at(code.components(), over);
  if (!t.is_visit() || t.role != Role::Over) return false;
  const TokenPos under = code.under_visit(t.crossing);
  auto bar_at = [&](TokenPos p) { return at(code.components(), p).is_bar(); };
  if (variant == 0) return bar_at(prev(code, over)) && bar_at(prev(code, under));
  return bar_at(next(code, over)) && bar_at(next(code, under));
}

// Flipping the crossing disk over: the bars in front of both visits pass
// through to behind them, over and under trade places, the sign is kept.
TwistedGaussCode t3_rewrite(const TwistedGaussCode& code, const MoveSpec& mv) {
  const std::string pattern = "a crossing with a bar directly before (variant 0) or after (variant 1) both visits";
  if (mv.sites.size() != 1 || (mv.variant != 0 && mv.variant != 1) || !t3_applies(code, mv.sites[0], mv.variant))
    mismatch(pattern);
  const TokenPos over = mv.sites[0];
  const int id = at(code.components(), over).crossing;
  const TokenPos under = code.under_visit(id);
  std::vector<Component> comps = code.components();
  auto swap_tokens = [&](TokenPos a, TokenPos b) {
    std::swap(comps[static_cast<std::size_t>(a.component)][static_cast<std::size_t>(a.offset)],
              comps[static_cast<std::size_t>(b.component)][static_cast<std::size_t>(b.offset)]);
  };
  for (TokenPos v : {over, under}) {
    auto& tok = comps[static_cast<std::size_t>(v.component)][static_cast<std::size_t>(v.offset)];
    tok.role = tok.role == Role::Over ? Role::Under : Role::Over;
    swap_tokens(v, mv.variant == 0 ? prev(code, v) : next(code, v));
  }
  return TwistedGaussCode(std::move(comps));
}

}  // namespace

TwistedGaussCode apply_move(const TwistedGaussCode& code, const MoveSpec& mv) {
  switch (mv.kind) {
    case MoveKind::R1Pos:
    case MoveKind::R1Neg: {
      const int sign = mv.kind == MoveKind::R1Pos ? 1 : -1;
      if (mv.direction == Direction::Insert) return r1_insert(code, mv, sign);
      if (mv.direction == Direction::Delete) return r1_delete(code, mv, sign);
      break;
    }
    case MoveKind::R2:
      if (mv.direction == Direction::Insert) return r2_insert(code, mv);
      if (mv.direction == Direction::Delete) return r2_delete(code, mv);
      break;
    case MoveKind::R3:
      if (mv.direction == Direction::Rewrite) return r3_rewrite(code, mv);
      break;
    case MoveKind::T1:
      if (mv.direction == Direction::Insert) return t1_insert(code, mv);
      if (mv.direction == Direction::Delete) return t1_delete(code, mv);
      break;
    case MoveKind::T3:
      if (mv.direction == Direction::Rewrite) return t3_rewrite(code, mv);
      break;
    case MoveKind::T2:
    case MoveKind::V1:
    case MoveKind::V2:
    case MoveKind::V3:
    case MoveKind::V4:
      if (mv.direction == Direction::Rewrite) return code;
      break;
  }
  throw MoveError("move " + to_string(mv.kind) + " has no " + to_string(mv.direction) + " form");
}

std::vector<TokenPos> gaps(const TwistedGaussCode& code) {
  std::vector<TokenPos> out;
  for (int k = 0; k < code.num_components(); ++k) {
    const int n = static_cast<int>(code.component(k).size());
    for (int i = 0; i < std::max(n, 1); ++i) out.push_back({k, i});
  }
  return out;
}

std::vector<MoveSpec> enumerate_sites(const TwistedGaussCode& code, MoveKind kind, Direction dir) {
  std::vector<MoveSpec> out;
  std::vector<TokenPos> tokens;
  for (int k = 0; k < code.num_components(); ++k)
    for (int i = 0; i < static_cast<int>(code.component(k).size()); ++i) tokens.push_back({k, i});
  auto try_add = [&](MoveSpec mv) {
    try {
      apply_move(code, mv);
      out.push_back(std::move(mv));
    } catch (const MoveError&) {
    }
  };

  switch (kind) {
    case MoveKind::R1Pos:
    case MoveKind::R1Neg:
      if (dir == Direction::Insert) {
        for (TokenPos g : gaps(code))
          for (int v = 0; v < 2; ++v) out.push_back({kind, dir, {g}, v});
      } else if (dir == Direction::Delete) {
        for (TokenPos p : tokens) try_add({kind, dir, {p}, 0});
      }
      break;
    case MoveKind::R2:
      if (dir == Direction::Insert) {
        const auto gs = gaps(code);
        for (TokenPos a : gs)
          for (TokenPos b : gs)
            for (int v = 0; v < 4; ++v) out.push_back({kind, dir, {a, b}, v});
      } else if (dir == Direction::Delete) {
        for (TokenPos p : tokens)
          if (r2_pattern(code, p)) out.push_back({kind, dir, {p}, 0});
      }
      break;
    case MoveKind::R3:
      if (dir == Direction::Rewrite) {
        const ClosedSurface f = ClosedSurface::from_code(code);
        std::vector<TokenPos> starts;
        for (TokenPos p : tokens) {
          if (code.component(p.component).size() < 2) continue;
          const Token& a = code.component(p.component)[static_cast<std::size_t>(p.offset)];
          const TokenPos q = next(code, p);
          const Token& b = code.component(q.component)[static_cast<std::size_t>(q.offset)];
          if (a.is_visit() && b.is_visit() && a.crossing != b.crossing) starts.push_back(p);
        }
        for (std::size_t i = 0; i < starts.size(); ++i)
          for (std::size_t j = i + 1; j < starts.size(); ++j)
            for (std::size_t k = j + 1; k < starts.size(); ++k) {
              std::vector<TokenPos> s{starts[i], starts[j], starts[k]};
              if (r3_pattern(code, f, s)) out.push_back({kind, dir, s, 0});
            }
      }
      break;
    case MoveKind::T1:
      if (dir == Direction::Insert) {
        for (TokenPos g : gaps(code)) out.push_back({kind, dir, {g}, 0});
      } else if (dir == Direction::Delete) {
        for (TokenPos p : tokens) try_add({kind, dir, {p}, 0});
      }
      break;
    case MoveKind::T3:
      if (dir == Direction::Rewrite)
        for (int id = 1; id <= code.num_crossings(); ++id)
          for (int v = 0; v < 2; ++v)
            if (t3_applies(code, code.over_visit(id), v)) out.push_back({kind, dir, {code.over_visit(id)}, v});
      break;
    case MoveKind::T2:
    case MoveKind::V1:
    case MoveKind::V2:
    case MoveKind::V3:
    case MoveKind::V4:
      if (dir == Direction::Rewrite) out.push_back({kind, dir, {}, 0});
      break;
  }
  return out;
}

namespace {

constexpr std::array<std::pair<MoveKind, std::string_view>, 11> kKindNames{{
    {MoveKind::R1Pos, "R1+"},
    {MoveKind::R1Neg, "R1-"},
    {MoveKind::R2, "R2"},
    {MoveKind::R3, "R3"},
    {MoveKind::T1, "T1"},
    {MoveKind::T2, "T2"},
    {MoveKind::T3, "T3"},
    {MoveKind::V1, "V1"},
    {MoveKind::V2, "V2"},
    {MoveKind::V3, "V3"},
    {MoveKind::V4, "V4"},
}};

}  // namespace

std::string to_string(MoveKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return std::string(name);
  return "?";
}

std::string to_string(Direction d) {
  switch (d) {
    case Direction::Insert:
      return "insert";
    case Direction::Delete:
      return "delete";
    case Direction::Rewrite:
      return "rewrite";
  }
  return "?";
}

MoveKind parse_move_kind(std::string_view text) {
  for (const auto& [k, name] : kKindNames)
    if (name == text) return k;
  if (text == "R1" || text == "R1p") return MoveKind::R1Pos;
  if (text == "R1m") return MoveKind::R1Neg;
  throw MoveError("unknown move kind '" + std::string(text) + "'");
}

Direction parse_direction(std::string_view text) {
  if (text == "insert") return Direction::Insert;
  if (text == "delete") return Direction::Delete;
  if (text == "rewrite") return Direction::Rewrite;
  throw MoveError("unknown move direction '" + std::string(text) + "'");
}

std::string to_string(const MoveSpec& mv) {
  std::string s = to_string(mv.kind) + " " + to_string(mv.direction);
  for (const TokenPos& p : mv.sites) s += " " + std::to_string(p.component) + ":" + std::to_string(p.offset);
  if (mv.variant) s += " v" + std::to_string(mv.variant);
  return s;
}

}  // namespace polebracket
