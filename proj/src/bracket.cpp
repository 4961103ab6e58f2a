#include "polebracket/bracket.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <thread>

#include <json.hpp>

#include "polebracket/states.hpp"

namespace polebracket {

namespace {

void guard(const ClosedSurface& f, const EvalOptions& opts) {
  const int c = f.base().num_disks();
  if (c > opts.max_crossings && !opts.allow_large)
    throw StateSumTooLarge("state sum over 2^" + std::to_string(c) + " states refused (limit " +
                           std::to_string(opts.max_crossings) + " crossings); override to force");
  if (c >= 63) throw StateSumTooLarge("too many crossings for a 64-bit state mask");
}

// Counts states per key. Each worker takes a contiguous mask range and its
// own evaluator from `make`; the merge is integer addition, so the result
// does not depend on the partition.
template <class Key, class Factory>
std::map<Key, long long> fold_states(const ClosedSurface& f, const EvalOptions& opts, const Factory& make) {
  guard(f, opts);
  const std::uint64_t n = num_states(f);
  const std::uint64_t w = std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(opts.workers, 1)), 1, n);
  std::vector<std::map<Key, long long>> partial(w);
  auto run = [&](std::uint64_t i) {
    const std::uint64_t lo = n / w * i + std::min(i, n % w);
    const std::uint64_t hi = lo + n / w + (i < n % w ? 1 : 0);
    auto eval = make();
    for (std::uint64_t m = lo; m < hi; ++m) ++partial[i][eval(m)];
  };
  if (w == 1) {
    run(0);
  } else {
    std::vector<std::exception_ptr> errors(w);
    std::vector<std::thread> threads;
    for (std::uint64_t i = 0; i < w; ++i)
      threads.emplace_back([&, i] {
        try {
          run(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    for (auto& t : threads) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  std::map<Key, long long> total;
  for (auto& p : partial)
    for (const auto& [k, cnt] : p) total[k] += cnt;
  return total;
}

class DeltaPowers {
 public:
  const MultiLaurent& operator()(int k) {
    while (static_cast<int>(cache_.size()) <= k) cache_.push_back(cache_.back() * delta());
    return cache_[static_cast<std::size_t>(k)];
  }

 private:
  std::vector<MultiLaurent> cache_{MultiLaurent(1)};
};

struct DoubleKey {
  int natural = 0;
  int iness = 0;  // curves weighted by delta
  int mobius = 0;
  std::vector<int> indices;  // positive indices, sorted
  auto operator<=>(const DoubleKey&) const = default;
};

struct SurfaceKey {
  StateClassSignature sig;
  int natural = 0;
  int iness = 0;
  auto operator<=>(const SurfaceKey&) const = default;
};

std::string bits(const Gf2Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += v.test(i) ? '1' : '0';
  return s;
}

MultiLaurent d_product(int mobius, const std::vector<int>& indices) {
  Monomial mono{0, mobius, {}};
  for (int i : indices) {
    if (i <= 0) continue;
    if (!mono.d.empty() && mono.d.back().first == i)
      ++mono.d.back().second;
    else
      mono.d.emplace_back(i, 1);
  }
  return MultiLaurent::monomial(mono);
}

}  // namespace

BracketValue surface_pole_bracket(const ClosedSurface& f, const EvalOptions& opts) {
  const auto counts = fold_states<SurfaceKey>(f, opts, [&f] {
    return [&f](SpliceChoice m) {
      const PoleState s = splice_curves(f, m);
      const StateClassification cls = classify_state(f, s);
      SurfaceKey k;
      k.natural = s.natural;
      for (const auto& c : cls.curves)
        if (!c.inessential) k.sig.push_back(CurveSignature{c.index, c.mobius, bits(c.hom_class), c.separating});
      std::sort(k.sig.begin(), k.sig.end());
      k.iness = cls.iness_count;
      return k;
    };
  });
  BracketValue out;
  DeltaPowers dp;
  for (const auto& [k, cnt] : counts) {
    MultiLaurent term = dp(k.iness).shift_a(k.natural);
    out[k.sig] += term * MultiLaurent(cnt);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

BracketValue surface_pole_bracket(const TwistedGaussCode& code, const EvalOptions& opts) {
  return surface_pole_bracket(ClosedSurface::from_code(code), opts);
}

MultiLaurent specialize_bracket(const BracketValue& b, BracketRule rule) {
  MultiLaurent total;
  DeltaPowers dp;
  for (const auto& [sig, coeff] : b) {
    int mobius = 0, deltas = 0;
    std::vector<int> idx;
    for (const auto& c : sig) {
      mobius += c.mobius ? 1 : 0;
      if (rule == BracketRule::Intrinsic && !c.mobius && c.index == 0) ++deltas;
      idx.push_back(c.index);
    }
    std::sort(idx.begin(), idx.end());
    total += coeff * dp(deltas) * d_product(mobius, idx);
  }
  return total;
}

std::map<std::string, MultiLaurent> assemble_from_table(const std::vector<TableRow>& rows) {
  std::map<std::string, MultiLaurent> out;
  DeltaPowers dp;
  for (const auto& r : rows) {
    if (r.iness < 0) throw std::invalid_argument("assemble_from_table: negative inessential count");
    out[r.label] += dp(r.iness).shift_a(r.natural);
  }
  return out;
}

MultiLaurent double_bracket(const ClosedSurface& f, const EvalOptions& opts) {
  std::map<DoubleKey, long long> counts;
  if (opts.rule == BracketRule::Intrinsic) {
    counts = fold_states<DoubleKey>(f, opts, [&f] {
      return [tracer = StateTracer(f.base()), summaries = std::vector<CurveSummary>()](SpliceChoice m) mutable {
        DoubleKey k;
        k.natural = tracer.trace(m, summaries);
        for (const auto& c : summaries) {
          if (c.one_sided)
            ++k.mobius;
          else if (c.index > 0)
            k.indices.push_back(c.index);
          else
            ++k.iness;
        }
        std::sort(k.indices.begin(), k.indices.end());
        return k;
      };
    });
  } else {
    counts = fold_states<DoubleKey>(f, opts, [&f] {
      return [&f](SpliceChoice m) {
        const PoleState s = splice_curves(f, m);
        const StateClassification cls = classify_state(f, s);
        DoubleKey k;
        k.natural = s.natural;
        k.iness = cls.iness_count;
        k.mobius = cls.nonori_count;
        for (const auto& c : cls.curves)
          if (c.index > 0) k.indices.push_back(c.index);
        std::sort(k.indices.begin(), k.indices.end());
        return k;
      };
    });
  }
  MultiLaurent total;
  DeltaPowers dp;
  for (const auto& [k, cnt] : counts)
    total += dp(k.iness).shift_a(k.natural) * d_product(k.mobius, k.indices) * MultiLaurent(cnt);
  return total;
}

MultiLaurent double_bracket(const TwistedGaussCode& code, const EvalOptions& opts) {
  return double_bracket(ClosedSurface::from_code(code), opts);
}

MultiLaurent normalized(const TwistedGaussCode& code, const EvalOptions& opts) {
  const int w = writhe(code);
  MultiLaurent r = double_bracket(code, opts).shift_a(-3 * w);
  return w % 2 ? -r : r;
}

MultiLaurent classical_kauffman_oracle(const TwistedGaussCode& code) {
  if (code.has_bars()) throw std::invalid_argument("classical_kauffman_oracle: code has bars");
  if (!ClosedSurface::from_code(code).is_union_of_spheres())
    throw std::invalid_argument("classical_kauffman_oracle: realization is not a union of spheres");
  const int c = code.num_crossings();
  enum { OI = 0, UI = 1, OO = 2, UO = 3 };
  auto end_id = [](int crossing, int which) { return 4 * (crossing - 1) + which; };
  // Diagram arcs join the out-end of each visit to the in-end of the next.
  std::vector<std::pair<int, int>> arcs;
  int free_loops = 0;
  for (const auto& comp : code.components()) {
    std::vector<const Token*> visits;
    for (const auto& t : comp)
      if (t.is_visit()) visits.push_back(&t);
    if (visits.empty()) {
      ++free_loops;
      continue;
    }
    for (std::size_t i = 0; i < visits.size(); ++i) {
      const Token& a = *visits[i];
      const Token& b = *visits[(i + 1) % visits.size()];
      arcs.emplace_back(end_id(a.crossing, a.role == Role::Over ? OO : UO),
                        end_id(b.crossing, b.role == Role::Over ? OI : UI));
    }
  }
  DisjointSets base(4 * c);
  for (const auto& [x, y] : arcs) base.unite(x, y);

  // <D> = A <D_A> + A^-1 <D_B>, smoothing one crossing per level.
  std::map<std::pair<int, int>, long long> tally;  // (A power, loops) -> count
  std::function<void(int, DisjointSets&, int)> rec = [&](int k, DisjointSets& ds, int power) {
    if (k > c) {
      int loops = free_loops;
      for (int e = 0; e < 4 * c; ++e) loops += ds.find(e) == e ? 1 : 0;
      ++tally[{power, loops}];
      return;
    }
    const bool positive = code.sign(k) > 0;
    for (int choice = 0; choice < 2; ++choice) {
      DisjointSets next = ds;
      const bool a_smoothing = choice == 0;
      // A joins OI-UO and UI-OO at a positive crossing, OI-UI and UO-OO at a negative one.
      if (a_smoothing == positive) {
        next.unite(end_id(k, OI), end_id(k, UO));
        next.unite(end_id(k, UI), end_id(k, OO));
      } else {
        next.unite(end_id(k, OI), end_id(k, UI));
        next.unite(end_id(k, UO), end_id(k, OO));
      }
      rec(k + 1, next, power + (a_smoothing ? 1 : -1));
    }
  };
  rec(1, base, 0);
  MultiLaurent total;
  DeltaPowers dp;
  for (const auto& [key, cnt] : tally) total += dp(key.second).shift_a(key.first) * MultiLaurent(cnt);
  return total;
}

std::string to_string(const CurveSignature& s) {
  return "[i=" + std::to_string(s.index) + (s.mobius ? ",M" : "") + ",h=" + s.hom + (s.separating ? ",sep" : "") + "]";
}

std::string to_string(const StateClassSignature& sig) {
  if (sig.empty()) return "[]";
  std::string out;
  for (const auto& c : sig) out += to_string(c);
  return out;
}

std::string to_string(const BracketValue& b) {
  if (b.empty()) return "0\n";
  std::string out;
  for (const auto& [sig, coeff] : b) out += to_string(sig) + ": " + coeff.to_string() + "\n";
  return out;
}

std::string to_json(const BracketValue& b) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [sig, coeff] : b) {
    nlohmann::ordered_json entry;
    auto sj = nlohmann::ordered_json::array();
    for (const auto& c : sig)
      sj.push_back({{"index", c.index}, {"mobius", c.mobius}, {"hom", c.hom}, {"separating", c.separating}});
    entry["signature"] = sj;
    entry["coeff"] = nlohmann::ordered_json::parse(coeff.to_json());
    arr.push_back(entry);
  }
  return arr.dump();
}

}  // namespace polebracket
