#include "polebracket/verify.hpp"

#include <algorithm>
#include <random>

#include "polebracket/states.hpp"

namespace polebracket {

namespace {

constexpr std::size_t kMaxSamples = 5;

void record(SuiteResult& r, bool ok, const std::string& what) {
  ++r.checked;
  if (ok) return;
  ++r.failures;
  if (r.samples.size() < kMaxSamples) r.samples.push_back(what);
}

std::string one_line(const TwistedGaussCode& code) {
  std::string s = to_text(code);
  std::replace(s.begin(), s.end(), '\n', '/');
  if (!s.empty()) s.pop_back();
  return s;
}

// Inserts runs at gaps (component, offset), later gaps first.
TwistedGaussCode with_insertions(const TwistedGaussCode& code, std::vector<std::pair<TokenPos, std::vector<Token>>> runs) {
  std::vector<Component> comps = code.components();
  std::stable_sort(runs.begin(), runs.end(), [](const auto& x, const auto& y) {
    return std::pair(x.first.component, x.first.offset) > std::pair(y.first.component, y.first.offset);
  });
  for (const auto& [gap, run] : runs) {
    auto& comp = comps[static_cast<std::size_t>(gap.component)];
    comp.insert(comp.begin() + gap.offset, run.begin(), run.end());
  }
  return TwistedGaussCode(std::move(comps));
}

// A strand passing over both strands of a crossing next to it, arranged so
// that the three arcs bound a non-alternating triangle.
std::optional<TwistedGaussCode> plant_triangle(const TwistedGaussCode& code, std::mt19937_64& rng) {
  if (code.num_crossings() == 0) return std::nullopt;
  const int x = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(code.num_crossings()));
  const auto all_gaps = gaps(code);
  const TokenPos g = all_gaps[rng() % all_gaps.size()];
  const int j = code.num_crossings() + 1, k = j + 1;
  std::vector<int> trials{0, 1, 2, 3, 4, 5, 6, 7};
  std::shuffle(trials.begin(), trials.end(), rng);
  for (int t : trials) {
    const int sj = (t & 1) ? -1 : 1, sk = (t & 2) ? -1 : 1;
    std::vector<Token> top{Token::visit(j, Role::Over, sj), Token::visit(k, Role::Over, sk)};
    if (t & 4) std::swap(top[0], top[1]);
    const TwistedGaussCode out = with_insertions(code, {{g, top},
                                                        {code.over_visit(x), {Token::visit(j, Role::Under, sj)}},
                                                        {code.under_visit(x), {Token::visit(k, Role::Under, sk)}}});
    if (!enumerate_sites(out, MoveKind::R3, Direction::Rewrite).empty()) return out;
  }
  return std::nullopt;
}

// Bars directly in front of both visits of one crossing.
TwistedGaussCode plant_bar_pair(const TwistedGaussCode& code, std::mt19937_64& rng) {
  const int x = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(code.num_crossings()));
  const bool after = rng() & 1;
  auto gap_of = [&](TokenPos p) { return TokenPos{p.component, p.offset + (after ? 1 : 0)}; };
  return with_insertions(code, {{gap_of(code.over_visit(x)), {Token::bar()}}, {gap_of(code.under_visit(x)), {Token::bar()}}});
}

TwistedGaussCode crossing_change(const TwistedGaussCode& code, int id) {
  std::vector<Component> comps = code.components();
  for (auto& comp : comps)
    for (auto& t : comp)
      if (t.is_visit() && t.crossing == id) {
        t.role = t.role == Role::Over ? Role::Under : Role::Over;
        t.sign = -t.sign;
      }
  return TwistedGaussCode(std::move(comps));
}

}  // namespace

std::vector<TwistedGaussCode> twisted_corpus(std::uint64_t seed, int count, int max_crossings, int max_bars) {
  std::vector<TwistedGaussCode> out;
  for (int i = 0; i < count; ++i) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(i));
    const int plant = static_cast<int>(rng() % 3);  // 0 none, 1 triangle, 2 bar pair
    int crossings = static_cast<int>(rng() % static_cast<std::uint64_t>(max_crossings + 1));
    int bars = static_cast<int>(rng() % static_cast<std::uint64_t>(max_bars + 1));
    if (plant == 1) crossings = std::clamp(crossings, 1, std::max(1, max_crossings - 2));
    if (plant == 2) {
      crossings = std::max(crossings, 1);
      bars = std::min(bars, std::max(0, max_bars - 2));
    }
    const int components = (rng() % 4 == 0 && 2 * crossings + bars >= 2) ? 2 : 1;
    TwistedGaussCode code = random_diagram(rng(), crossings, bars, components);
    if (plant == 1 && crossings + 2 <= max_crossings) {
      if (auto planted = plant_triangle(code, rng)) code = *planted;
    } else if (plant == 2 && code.num_bars() + 2 <= max_bars && code.num_crossings() > 0) {
      code = plant_bar_pair(code, rng);
    }
    out.push_back(std::move(code));
  }
  return out;
}

std::vector<TwistedGaussCode> classical_corpus(std::uint64_t seed, int count, int max_crossings) {
  std::vector<TwistedGaussCode> out;
  for (int i = 0; i < count; ++i) {
    std::mt19937_64 rng(seed * 0xD1B54A32D192ED03ULL + static_cast<std::uint64_t>(i));
    const int comps = rng() % 3 == 0 ? 2 : 1;
    TwistedGaussCode code(std::vector<Component>(static_cast<std::size_t>(comps)));
    const int target = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_crossings));
    for (int attempt = 0; attempt < 400 && code.num_crossings() < target; ++attempt) {
      const int pick = static_cast<int>(rng() % 10);
      const auto gs = gaps(code);
      TwistedGaussCode next = code;
      if (pick == 0) {
        MoveSpec mv{rng() & 1 ? MoveKind::R1Pos : MoveKind::R1Neg, Direction::Insert, {gs[rng() % gs.size()]},
                    static_cast<int>(rng() % 2)};
        next = apply_move(code, mv);
      } else if (pick <= 6) {
        if (code.num_crossings() + 2 > max_crossings) continue;
        MoveSpec mv{MoveKind::R2, Direction::Insert, {gs[rng() % gs.size()], gs[rng() % gs.size()]},
                    static_cast<int>(rng() % 4)};
        next = apply_move(code, mv);
      } else if (pick <= 8) {
        const auto sites = enumerate_sites(code, MoveKind::R3, Direction::Rewrite);
        if (sites.empty()) continue;
        next = apply_move(code, sites[rng() % sites.size()]);
      } else {
        if (code.num_crossings() == 0) continue;
        next = crossing_change(code, 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(code.num_crossings())));
      }
      if (ClosedSurface::from_code(next).is_union_of_spheres()) code = next;
    }
    out.push_back(canonicalize(code));
  }
  return out;
}

std::vector<TwistedGaussCode> classical_fixtures() {
  return {
      parse_code("EMPTY"),
      parse_code("O1+ U1+"),
      parse_code("O1- U1-"),
      parse_code("U1+ O1+"),
      parse_code("O1+ O2- U2- U1+"),  // 2-crossing unknot from R2
      parse_code("O1- O2+ U2+ U1-"),
      parse_code("O1+ U1+ O2- U2-"),  // two opposite kinks
      parse_code("O1+ U1+ O2+ U2+"),  // two positive kinks
      parse_code("O1- U2- O3- U1- O2- U3-"),
      parse_code("O1+ U2+ O3+ U1+ O2+ U3+"),
      parse_code("O1- U2- O3+ U4+ O2- U1- O4+ U3+"),  // figure-eight
      parse_code("O1+ O2-\nU1+ U2-"),                 // two-component unlink after R2
      parse_code("O1+ U2+\nO2+ U1+"),                 // Hopf link
  };
}

std::vector<std::pair<MoveKind, Direction>> move_catalog() {
  return {
      {MoveKind::R1Pos, Direction::Insert}, {MoveKind::R1Pos, Direction::Delete}, {MoveKind::R1Neg, Direction::Insert},
      {MoveKind::R1Neg, Direction::Delete}, {MoveKind::R2, Direction::Insert},    {MoveKind::R2, Direction::Delete},
      {MoveKind::R3, Direction::Rewrite},   {MoveKind::T1, Direction::Insert},    {MoveKind::T1, Direction::Delete},
      {MoveKind::T2, Direction::Rewrite},   {MoveKind::T3, Direction::Rewrite},   {MoveKind::V1, Direction::Rewrite},
      {MoveKind::V2, Direction::Rewrite},   {MoveKind::V3, Direction::Rewrite},   {MoveKind::V4, Direction::Rewrite},
  };
}

SuiteResult check_move_invariance(const std::vector<TwistedGaussCode>& corpus, const EvalOptions& opts,
                                  std::vector<std::pair<std::string, long long>>* site_counts) {
  SuiteResult r;
  r.name = "move invariance";
  std::vector<std::pair<std::string, long long>> counts;
  for (const auto& [kind, dir] : move_catalog()) {
    const std::string name = to_string(kind);
    if (std::none_of(counts.begin(), counts.end(), [&](const auto& c) { return c.first == name; }))
      counts.emplace_back(name, 0);
  }
  for (const auto& code : corpus) {
    const MultiLaurent before = normalized(code, opts);
    for (const auto& [kind, dir] : move_catalog()) {
      const auto sites = enumerate_sites(code, kind, dir);
      auto it = std::find_if(counts.begin(), counts.end(), [&](const auto& c) { return c.first == to_string(kind); });
      it->second += static_cast<long long>(sites.size());
      for (const auto& mv : sites) {
        const TwistedGaussCode moved = apply_move(code, mv);
        const MultiLaurent after = normalized(moved, opts);
        record(r, after == before,
               to_string(mv) + " on " + one_line(code) + ": " + before.to_string() + " -> " + after.to_string());
      }
    }
  }
  if (site_counts) *site_counts = std::move(counts);
  return r;
}

SuiteResult check_theorem1_suite(const std::vector<TwistedGaussCode>& corpus) {
  SuiteResult r;
  r.name = "theorem 1";
  for (const auto& code : corpus) {
    const ClosedSurface f = ClosedSurface::from_code(code);
    enumerate_states(f, [&](const PoleState& s) {
      const auto v = check_theorem1(f, s);
      record(r, v.empty(), v.empty() ? "" : one_line(code) + " mask " + std::to_string(s.mask) + ": " + v[0].detail);
    });
  }
  return r;
}

SuiteResult check_lemma2_suite(const std::vector<TwistedGaussCode>& corpus) {
  SuiteResult r;
  r.name = "lemma 2";
  for (const auto& code : corpus) {
    const ClosedSurface f = ClosedSurface::from_code(code);
    enumerate_states(f, [&](const PoleState& s) {
      const auto v = check_lemma2(f, s);
      record(r, v.empty(), v.empty() ? "" : one_line(code) + " mask " + std::to_string(s.mask) + ": " + v[0].detail);
    });
  }
  return r;
}

SuiteResult check_specialization(const std::vector<TwistedGaussCode>& corpus, const EvalOptions& opts) {
  SuiteResult r;
  r.name = "specialization identity";
  for (const auto& code : corpus) {
    const MultiLaurent lhs = specialize_bracket(surface_pole_bracket(code, opts), opts.rule);
    const MultiLaurent rhs = double_bracket(code, opts);
    record(r, lhs == rhs, one_line(code) + ": " + lhs.to_string() + " vs " + rhs.to_string());
  }
  return r;
}

SuiteResult check_classical(const std::vector<TwistedGaussCode>& corpus, const EvalOptions& opts) {
  SuiteResult r;
  r.name = "classical specialization";
  for (const auto& code : corpus) {
    const MultiLaurent db = double_bracket(code, opts);
    const MultiLaurent oracle = classical_kauffman_oracle(code);
    record(r, db == oracle && db.a_only(), one_line(code) + ": " + db.to_string() + " vs oracle " + oracle.to_string());
  }
  return r;
}

}  // namespace polebracket
