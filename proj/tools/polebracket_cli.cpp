#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polebracket/bracket.hpp"
#include "polebracket/code.hpp"
#include "polebracket/moves.hpp"
#include "polebracket/states.hpp"
#include "polebracket/surface.hpp"
#include "polebracket/verify.hpp"

using namespace polebracket;

namespace {

constexpr int kUsage = 1;
constexpr int kParse = 2;
constexpr int kVerify = 3;

struct Input {
  std::string path;
  std::string inline_code;
};

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("-i,--input", in.path, ".tgc file, '-' for stdin (default)");
  cmd->add_option("--code", in.inline_code, "inline code, '/' separates components");
}

std::string read_input(const Input& in) {
  if (!in.inline_code.empty()) {
    std::string s = in.inline_code;
    for (char& ch : s)
      if (ch == '/') ch = '\n';
    return s;
  }
  if (in.path.empty() || in.path == "-")
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  std::ifstream f(in.path);
  if (!f) throw std::runtime_error("cannot open " + in.path);
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

BracketRule parse_rule(const std::string& s) {
  if (s == "intrinsic") return BracketRule::Intrinsic;
  if (s == "geometric") return BracketRule::Geometric;
  throw CLI::ValidationError("--rule", "expected intrinsic or geometric");
}

TokenPos parse_site(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw MoveError("site must be component:offset, got '" + s + "'");
  return TokenPos{std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
}

void print_info(const ClosedSurface& f, const TwistedGaussCode& code, bool json) {
  if (json) {
    std::cout << f.report_json() << "\n";
    return;
  }
  std::cout << "components " << code.num_components() << "\n"
            << "crossings " << code.num_crossings() << "\n"
            << "bars " << code.num_bars() << "\n"
            << "writhe " << writhe(code) << "\n"
            << "euler " << f.euler() << "\n"
            << "orientable " << (f.orientable() ? "yes" : "no") << "\n"
            << "h1_rank " << f.h1_rank() << "\n";
  for (const auto& p : f.pieces()) {
    if (p.orientable)
      std::cout << "piece orientable genus " << p.genus << "\n";
    else
      std::cout << "piece non-orientable crosscaps " << p.crosscaps << "\n";
  }
}

void print_states(const ClosedSurface& f, bool json, bool dump) {
  if (json) std::cout << "[";
  bool first = true;
  enumerate_states(f, [&](const PoleState& s) {
    const StateClassification cls = classify_state(f, s);
    if (json) {
      std::cout << (first ? "" : ",") << "\n" << state_json(s, cls);
    } else {
      std::cout << "mask " << s.mask << " natural " << s.natural << " curves " << s.curves.size() << " iness "
                << cls.iness_count << " mobius " << cls.nonori_count << "\n";
      if (dump)
        for (std::size_t i = 0; i < s.curves.size(); ++i) {
          const auto& c = cls.curves[i];
          std::cout << "  curve " << i << " word " << render(s.curves[i].word) << " index " << c.index
                    << (c.inessential ? " inessential" : "") << (c.separating ? " separating" : "")
                    << (c.mobius ? " mobius" : "") << "\n";
        }
    }
    first = false;
  });
  if (json) std::cout << "\n]\n";
}

void print_poly(const MultiLaurent& p, bool json) { std::cout << (json ? p.to_json() : p.to_string()) << "\n"; }

void print_suite(const SuiteResult& r) {
  std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.checked << " checks, " << r.failures
            << " failures\n";
  for (const auto& s : r.samples) std::cout << "  " << s << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pole bracket invariants of twisted link diagrams"};
  app.require_subcommand(1, 1);

  Input in;
  bool json = false, dump = false, allow_large = false, list_sites = false;
  int workers = 1, max_crossings = 24, count = 50, crossings = 4, bars = 0, components = 1, variant = 0;
  std::uint64_t seed = 1;
  std::string rule = "intrinsic", kind, direction;
  std::vector<std::string> sites;

  auto eval_flags = [&](CLI::App* cmd) {
    cmd->add_option("--workers", workers, "worker threads for the state sum")->check(CLI::PositiveNumber);
    cmd->add_option("--max-crossings", max_crossings, "refuse state sums above this many crossings");
    cmd->add_flag("--allow-large", allow_large, "lift the crossing guard");
    cmd->add_option("--rule", rule, "intrinsic or geometric curve weights");
  };

  auto* info = app.add_subcommand("info", "surface report");
  add_input(info, in);
  info->add_flag("--json", json);

  auto* states = app.add_subcommand("states", "list the states");
  add_input(states, in);
  states->add_flag("--json", json);
  states->add_flag("--dump", dump, "print every curve of every state");
  states->add_option("--max-crossings", max_crossings);
  states->add_flag("--allow-large", allow_large);

  auto* bracket = app.add_subcommand("bracket", "surface pole bracket");
  auto* dbracket = app.add_subcommand("dbracket", "double bracket");
  auto* invariant = app.add_subcommand("invariant", "normalized invariant R");
  for (auto* cmd : {bracket, dbracket, invariant}) {
    add_input(cmd, in);
    cmd->add_flag("--json", json);
    eval_flags(cmd);
  }

  auto* move = app.add_subcommand("move", "apply a move and print the result");
  add_input(move, in);
  move->add_option("--kind", kind, "R1+, R1-, R2, R3, T1, T2, T3, V1..V4")->required();
  move->add_option("--direction", direction, "insert, delete or rewrite")->required();
  move->add_option("--site", sites, "component:offset, repeatable");
  move->add_option("--variant", variant);
  move->add_flag("--list", list_sites, "list applicable sites instead");

  auto* check = app.add_subcommand("check", "run the verification corpus");
  check->add_option("--seed", seed);
  check->add_option("--count", count, "random twisted diagrams")->check(CLI::NonNegativeNumber);
  eval_flags(check);

  auto* random = app.add_subcommand("random", "emit random diagrams");
  random->add_option("--seed", seed);
  random->add_option("--count", count)->check(CLI::NonNegativeNumber);
  random->add_option("--crossings", crossings)->check(CLI::NonNegativeNumber);
  random->add_option("--bars", bars)->check(CLI::NonNegativeNumber);
  random->add_option("--components", components)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    EvalOptions opts;
    opts.rule = parse_rule(rule);
    opts.workers = workers;
    opts.max_crossings = max_crossings;
    opts.allow_large = allow_large;

    if (*check) {
      const auto twisted = twisted_corpus(seed, count);
      auto classical = classical_fixtures();
      const auto grown = classical_corpus(seed, 50);
      classical.insert(classical.end(), grown.begin(), grown.end());
      std::vector<TwistedGaussCode> all = twisted;
      all.insert(all.end(), classical.begin(), classical.end());
      const std::vector<SuiteResult> results{check_move_invariance(twisted, opts), check_classical(classical, opts),
                                             check_theorem1_suite(all), check_lemma2_suite(all),
                                             check_specialization(all, opts)};
      bool ok = true;
      for (const auto& r : results) {
        print_suite(r);
        ok = ok && r.passed();
      }
      std::cout << (ok ? "all passed" : "failures found") << "\n";
      return ok ? 0 : kVerify;
    }

    if (*random) {
      for (int i = 0; i < count; ++i) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
        std::cout << "# seed " << s << "\n" << serialize(random_diagram(s, crossings, bars, components));
      }
      return 0;
    }

    const TwistedGaussCode code = parse_code(read_input(in));

    if (*info) {
      print_info(ClosedSurface::from_code(code), code, json);
    } else if (*states) {
      if (code.num_crossings() > max_crossings && !allow_large)
        throw StateSumTooLarge("refusing 2^" + std::to_string(code.num_crossings()) + " states; pass --allow-large");
      print_states(ClosedSurface::from_code(code), json, dump);
    } else if (*bracket) {
      const BracketValue b = surface_pole_bracket(code, opts);
      std::cout << (json ? to_json(b) : to_string(b)) << "\n";
    } else if (*dbracket) {
      print_poly(double_bracket(code, opts), json);
    } else if (*invariant) {
      print_poly(normalized(code, opts), json);
    } else if (*move) {
      const MoveKind k = parse_move_kind(kind);
      const Direction d = parse_direction(direction);
      if (list_sites) {
        for (const auto& mv : enumerate_sites(code, k, d)) std::cout << to_string(mv) << "\n";
        return 0;
      }
      MoveSpec mv{k, d, {}, variant};
      for (const auto& s : sites) mv.sites.push_back(parse_site(s));
      std::cout << serialize(apply_move(code, mv));
    }
    return 0;
  } catch (const CodeError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const MoveError& e) {
    std::cerr << "move error: " << e.what() << "\n";
    return kUsage;
  } catch (const StateSumTooLarge& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
