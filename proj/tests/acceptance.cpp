#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "polebracket/bracket.hpp"
#include "polebracket/poleword.hpp"
#include "polebracket/surface.hpp"
#include "polebracket/verify.hpp"

using namespace polebracket;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::set<int> failed;

void report(int id, const std::string& name, const Outcome& o) {
  std::cout << "criterion " << id << " " << (o.pass ? "PASS" : "FAIL") << " " << name << ": " << o.detail << std::endl;
  if (!o.pass) failed.insert(id);
}

std::string suite_detail(const SuiteResult& r) {
  std::ostringstream os;
  os << r.checked << " checks, " << r.failures << " failures";
  for (const auto& s : r.samples) os << "\n    " << s;
  return os.str();
}

const MultiLaurent A = MultiLaurent::a_power(1);

Outcome worked_example() {
  const auto t0 = Clock::now();
  const auto t = assemble_from_table({{3, 0, "L1"},
                                      {1, 1, "L0"},
                                      {1, 1, "L0"},
                                      {1, 1, "L0"},
                                      {-3, 1, "L2"},
                                      {-1, 2, "L0"},
                                      {-1, 0, "L2"},
                                      {-1, 0, "L2"}});
  const double ms = seconds_since(t0) * 1e3;
  const MultiLaurent l0 = (2 * A - MultiLaurent::a_power(-3)) * delta();
  const MultiLaurent l1 = MultiLaurent::a_power(3);
  const MultiLaurent l2 = MultiLaurent::a_power(-3) * delta();
  const bool ok0 = t.at("L0") == l0, ok1 = t.at("L1") == l1, ok2 = t.at("L2") == l2;
  std::ostringstream os;
  os << "L0 " << (ok0 ? "ok" : "mismatch") << ", L1 " << (ok1 ? "ok" : "mismatch") << ", L2 "
     << (ok2 ? "ok" : "mismatch (rows give " + t.at("L2").to_string() + ", printed total " + l2.to_string() + ")")
     << ", " << ms << " ms";
  return {ok0 && ok1 && ok2 && ms < 1.0, os.str()};
}

Outcome move_invariance(const std::vector<TwistedGaussCode>& corpus) {
  const auto t0 = Clock::now();
  std::vector<std::pair<std::string, long long>> counts;
  const SuiteResult r = check_move_invariance(corpus, {}, &counts);
  const double secs = seconds_since(t0);
  std::ostringstream os;
  os << corpus.size() << " diagrams, " << secs << " s, sites";
  bool covered = true;
  for (const auto& [kind, n] : counts) {
    os << " " << kind << "=" << n;
    covered = covered && n > 0;
  }
  os << "; " << suite_detail(r);
  return {r.passed() && covered && secs < 300.0, os.str()};
}

Outcome fixtures() {
  std::ostringstream os;
  bool ok = true;
  auto expect = [&](const std::string& what, bool cond) {
    ok = ok && cond;
    if (!cond) os << what << " failed; ";
  };
  const MultiLaurent d = delta();
  expect("R(unknot)", normalized(parse_code("EMPTY")) == d);
  expect("R(B)", normalized(parse_code("B")) == MultiLaurent::m_var());
  expect("R(kink)", normalized(parse_code("O1+ U1+")) == d);
  const MultiLaurent vt = normalized(parse_code("O1+ O2+ U1+ U2+"));
  expect("R(virtual trefoil) has d_1", vt.mentions_d(1));
  const auto tref = ClosedSurface::from_code(parse_code("O1- U2- O3- U1- O2- U3-"));
  expect("trefoil sphere", tref.euler() == 2 && tref.orientable() && tref.pieces().size() == 1);
  const auto torus = ClosedSurface::from_code(parse_code("O1+ O2+ U1+ U2+"));
  expect("virtual trefoil torus",
         torus.euler() == 0 && torus.orientable() && torus.pieces().size() == 1 && torus.pieces()[0].genus == 1);
  const auto rp2 = ClosedSurface::from_code(parse_code("B"));
  expect("one-bar loop projective plane",
         rp2.euler() == 1 && !rp2.orientable() && rp2.pieces().size() == 1 && rp2.pieces()[0].crosscaps == 1);
  os << "R(virtual trefoil) = " << vt.to_string();
  return {ok, os.str()};
}

PoleWord random_word(std::mt19937_64& rng, int max_poles) {
  const int n = 2 * static_cast<int>(rng() % static_cast<std::uint64_t>(max_poles / 2 + 1));
  std::string pat;
  for (int i = 0; i < n; ++i) {
    while (rng() % 4 == 0) pat += '|';
    pat += rng() & 1 ? 'L' : 'R';
  }
  return PoleWord::from_pattern(pat);
}

PoleWord random_equivalence(const PoleWord& w, std::mt19937_64& rng) {
  std::vector<PoleEntry> e = w.entries();
  if (e.empty()) return w;
  switch (rng() % 4) {
    case 0:
      std::rotate(e.begin(), e.begin() + static_cast<long>(rng() % e.size()), e.end());
      break;
    case 1:
      std::reverse(e.begin(), e.end());
      for (auto& x : e)
        if (!x.is_flip) x.side = opposite(x.side);
      break;
    case 2: {
      const std::size_t i = rng() % e.size(), j = (i + 1) % e.size();
      if (e[i].is_flip && !e[j].is_flip) {
        e[j].side = opposite(e[j].side);
        std::swap(e[i], e[j]);
      }
      break;
    }
    default:
      e.insert(e.begin() + static_cast<long>(rng() % (e.size() + 1)), 2, PoleEntry::flip());
  }
  return PoleWord(std::move(e));
}

Outcome confluence() {
  int bad_confluence = 0, bad_index = 0, flipped = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    std::mt19937_64 rng(seed);
    const PoleWord w = random_word(rng, 10);
    flipped += w.flip_count() > 0 ? 1 : 0;
    bad_confluence += confluence_oracle(w, 12) ? 0 : 1;
  }
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    std::mt19937_64 rng(seed + 5000);
    const PoleWord w = random_word(rng, 10);
    PoleWord v = w;
    const int steps = 1 + static_cast<int>(rng() % 8);
    for (int k = 0; k < steps; ++k) v = random_equivalence(v, rng);
    bad_index += index(v) == index(w) && equivalent(v, w) ? 0 : 1;
  }
  std::ostringstream os;
  os << "1000 words (" << flipped << " with flips), " << bad_confluence << " non-confluent; 1000 equivalences, "
     << bad_index << " index changes";
  return {bad_confluence == 0 && bad_index == 0 && flipped > 0, os.str()};
}

Outcome performance() {
  const TwistedGaussCode code = random_diagram(12, 12, 2, 1);
  EvalOptions opts;
  const auto t0 = Clock::now();
  const MultiLaurent r1 = normalized(code, opts);
  const double secs = seconds_since(t0);
  bool same = true;
  for (int w : {2, 8}) {
    opts.workers = w;
    same = same && normalized(code, opts).to_json() == r1.to_json();
  }
  std::ostringstream os;
  os << code.num_crossings() << " crossings, " << (1u << code.num_crossings()) << " states, " << secs
     << " s single-threaded, 1/2/8 workers " << (same ? "identical" : "differ");
  return {secs < 10.0 && same, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--known-fail") {
      std::stringstream ss(argv[++i]);
      for (std::string tok; std::getline(ss, tok, ',');) known.insert(std::stoi(tok));
    }

  const auto twisted = twisted_corpus(1, 200, 8, 4);
  auto classical = classical_fixtures();
  const auto grown = classical_corpus(1, 50, 7);
  classical.insert(classical.end(), grown.begin(), grown.end());
  std::vector<TwistedGaussCode> all = twisted;
  all.insert(all.end(), classical.begin(), classical.end());

  report(1, "worked example assembly", worked_example());
  report(2, "move invariance", move_invariance(twisted));
  const SuiteResult c3 = check_classical(classical);
  report(3, "classical specialization", {c3.passed(), std::to_string(classical.size()) + " codes, " + suite_detail(c3)});
  const SuiteResult c4 = check_theorem1_suite(all);
  report(4, "theorem 1 suite", {c4.passed(), suite_detail(c4)});
  const SuiteResult c5 = check_lemma2_suite(all);
  report(5, "lemma 2 suite", {c5.passed(), suite_detail(c5)});
  const SuiteResult c6 = check_specialization(all);
  report(6, "specialization identity", {c6.passed(), suite_detail(c6)});
  report(7, "fixture values", fixtures());
  report(8, "confluence", confluence());
  report(9, "determinism and performance", performance());

  std::cout << (9 - failed.size()) << "/9 criteria pass";
  bool unexpected = false;
  for (int id : failed) unexpected = unexpected || !known.count(id);
  if (!known.empty()) {
    std::cout << "; known failures:";
    for (int id : known) std::cout << " " << id << (failed.count(id) ? "" : " (now passing)");
  }
  std::cout << std::endl;
  return unexpected ? EXIT_FAILURE : EXIT_SUCCESS;
}
