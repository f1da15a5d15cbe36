// Command-line front end.
//
// Exit codes: 0 yes/pass, 1 no/fail, 2 unknown, 3 usage or parse error,
// 4 precondition violated, 5 budget exceeded, 6 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hamcirc/hamcirc.hpp"
#include "hamcirc/serialize.hpp"

namespace {

using namespace hamcirc;
using nlohmann::json;

enum Exit : int { kYes = 0, kNo = 1, kUnknown = 2, kUsage = 3, kPrecondition = 4, kBudget = 5, kInternal = 6 };

std::optional<std::size_t> env_size(const char* name) {
  const char* value = std::getenv(name);
  if (!value || !*value) return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(value, &used);
    if (used != std::string(value).size()) throw std::invalid_argument(name);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ParseError(std::string("environment variable ") + name + " is not a non-negative integer");
  }
}

/// Flag value if given, else the environment variable, else the default.
std::size_t resolve(const std::optional<std::size_t>& flag, const char* env, std::size_t fallback) {
  if (flag) return *flag;
  if (auto v = env_size(env)) return *v;
  return fallback;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write " + path);
  out << content;
  if (!out) throw PreconditionError("failed writing " + path);
}

std::string chain_text(const std::vector<Move>& moves) {
  std::string out;
  for (const Move& m : moves) {
    if (!out.empty()) out += ' ';
    out += to_string(m);
  }
  return out;
}

struct CertifyArgs {
  int rank = 2;
  std::string word;
  std::optional<std::size_t> max_level;
  std::optional<std::size_t> orbit_cap;
  bool json = false;
};

int run_certify(const CertifyArgs& a) {
  const Word s = Word::parse(a.word, a.rank);
  CertifyOptions options;
  options.max_level = a.max_level.value_or(0);
  options.orbit_cap = resolve(a.orbit_cap, "HAMCIRC_ORBIT_CAP", kDefaultOrbitCap);
  const Certificate c = certify(a.rank, s, options);
  if (a.json) {
    json j = c;
    j["word"] = word_label(s);
    j["n"] = a.rank;
    std::cout << j.dump(2) << '\n';
  } else {
    switch (c.verdict) {
      case Verdict::Yes: std::cout << (c.unique ? "YES (unique)" : "YES") << '\n'; break;
      case Verdict::No: std::cout << "NO" << '\n'; break;
      case Verdict::Unknown: std::cout << "UNKNOWN" << '\n'; break;
    }
    std::cout << "reason: " << to_string(c.reason) << '\n';
    if (!c.witness.empty()) std::cout << "witness: " << chain_text(c.witness) << '\n';
    if (!c.checked_levels.empty()) {
      std::cout << "quotient cycles checked for levels:";
      for (std::size_t l : c.checked_levels) std::cout << ' ' << l;
      std::cout << '\n';
    }
    if (!c.diagnostic.empty()) std::cout << "note: " << c.diagnostic << '\n';
  }
  switch (c.verdict) {
    case Verdict::Yes: return kYes;
    case Verdict::No: return kNo;
    case Verdict::Unknown: return kUnknown;
  }
  return kUnknown;
}

struct QuotientArgs {
  int rank = 2;
  std::vector<std::string> words;
  bool with_tree = false;
  std::size_t level = 1;
  std::string dot;
  bool enumerate = false;
  std::optional<std::size_t> budget;
  bool json = false;
};

int run_quotient(const QuotientArgs& a) {
  std::vector<Word> gens;
  if (a.with_tree) {
    for (int g = 1; g <= a.rank; ++g) gens.push_back(Word::generator(g, a.rank));
  }
  std::set<std::string> highlighted;
  for (const std::string& text : a.words) {
    const Word s = Word::parse(text, a.rank);
    gens.push_back(s);
    if (!s.empty()) {
      highlighted.insert(s.str());
      highlighted.insert(s.inverse().str());
    }
  }
  if (gens.empty()) throw PreconditionError("no generators given");
  const QuotientGraph q = a.enumerate ? build_quotient_enum(a.rank, gens, a.level, resolve(a.budget, "HAMCIRC_ENUM_BUDGET", kDefaultEnumerationBudget))
                                      : build_quotient_local(a.rank, gens, a.level);
  const Multigraph& g = q.graph();
  if (!a.dot.empty()) {
    DotOptions options;
    if (a.with_tree) {
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (highlighted.contains(g.edge(e).tag)) options.highlight.insert(e);
      }
    }
    write_file(a.dot, export_dot(g, options));
  }
  const bool cycle = is_cycle(g);
  if (a.json) {
    json j{{"n", a.rank}, {"level", a.level}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"is_cycle", cycle}, {"connected", is_connected(g)}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "vertices: " << g.vertex_count() << '\n';
    std::cout << "edges: " << g.edge_count() << '\n';
    std::cout << "connected: " << (is_connected(g) ? "yes" : "no") << '\n';
    std::cout << "cycle: " << (cycle ? "yes" : "no") << '\n';
  }
  return kYes;
}

struct LeggeArgs {
  int m = 3;
  int n = 2;
  std::size_t r = 1;
  std::string dot;
  std::optional<std::size_t> budget;
  bool json = false;
};

int run_legge(const LeggeArgs& a) {
  const std::size_t budget = resolve(a.budget, "HAMCIRC_ENUM_BUDGET", kDefaultLeggeBudget);
  const LeggeReport report = verify_legge(a.m, a.n, a.r, budget);
  if (!a.dot.empty()) {
    const LeggeQuotient full = build_legge_quotient(a.m, a.n, true, true, a.r, budget);
    DotOptions options;
    for (EdgeId e = 0; e < full.graph.edge_count(); ++e) {
      if (full.graph.edge(e).tag == "ab") options.highlight.insert(e);
    }
    write_file(a.dot, export_dot(full.graph, options));
  }
  if (a.json) {
    std::cout << json(report).dump(2) << '\n';
  } else {
    auto verdict = [](bool ok) { return ok ? "PASS" : "FAIL"; };
    for (const LeggeLevel& l : report.levels) {
      std::cout << "r=" << l.r << ": cycle of length " << l.vertices << ": " << verdict(l.circle_is_cycle) << '\n';
      std::cout << "r=" << l.r << ": full quotient connected: " << verdict(l.full_connected) << '\n';
      std::cout << "r=" << l.r << ": circle spans full quotient: " << verdict(l.circle_spans_full) << '\n';
    }
    std::cout << "overall: " << verdict(report.pass()) << '\n';
  }
  return report.pass() ? kYes : kNo;
}

struct ClassifyArgs {
  int rank = 2;
  std::string word;
  std::optional<std::size_t> orbit_cap;
  bool json = false;
};

int run_classify(const ClassifyArgs& a) {
  const Word s = Word::parse(a.word, a.rank);
  const CanonicalForm f = classify(a.rank, s, resolve(a.orbit_cap, "HAMCIRC_ORBIT_CAP", kDefaultOrbitCap));
  if (a.json) {
    json j = f;
    j["word"] = word_label(s);
    j["n"] = a.rank;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << to_string(f.kind) << '\n';
    if (f.kind != CanonicalKind::None) {
      const Word target = f.kind == CanonicalKind::Squares ? squares_word(a.rank) : commutators_word(a.rank);
      std::cout << "witness: " << (f.witness.empty() ? "identity" : chain_text(f.witness)) << '\n';
      std::cout << "image: " << word_label(target) << '\n';
    }
  }
  return f.kind == CanonicalKind::None ? kNo : kYes;
}

struct FiniteArgs {
  std::string target;
  bool json = false;
};

int run_finite(const FiniteArgs& a) {
  Multigraph g;
  if (a.target.find(':') != std::string::npos) {
    g = build_finite_cayley(parse_finite_spec(a.target));
  } else {
    std::ifstream in(a.target);
    if (!in) throw PreconditionError("cannot read " + a.target);
    g = parse_edge_list(in);
  }
  const std::size_t count = count_hamiltonian_cycles(g);
  const UniquenessResult result{count, count == 1};
  if (a.json) {
    json j = result;
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "vertices: " << g.vertex_count() << ", edges: " << g.edge_count() << '\n';
    std::cout << "hamiltonian cycles: " << result.count << ", unique: " << (result.unique ? "yes" : "no") << '\n';
  }
  return result.unique ? kYes : kNo;
}

struct OuterplanarArgs {
  int rank = 2;
  std::string word;
  std::size_t level = 1;
  std::optional<std::size_t> orbit_cap;
  bool json = false;
};

int run_outerplanar(const OuterplanarArgs& a) {
  const Word s = Word::parse(a.word, a.rank);
  CertifyOptions options;
  options.orbit_cap = resolve(a.orbit_cap, "HAMCIRC_ORBIT_CAP", kDefaultOrbitCap);
  const OuterplanarReport report = verify_outerplanar_quotient(a.rank, s, a.level, options);
  if (a.json) {
    std::cout << json(report).dump(2) << '\n';
  } else {
    for (const OuterplanarLevel& l : report.levels) {
      std::cout << "l=" << l.l << ": vertices " << l.vertices << ", outerplanar: " << (l.outerplanar ? "yes" : "no")
                << ", circle is hamiltonian cycle: " << (l.circle_is_ham_cycle ? "yes" : "no") << '\n';
    }
    std::cout << "checked levels 1.." << a.level << ": " << (report.pass() ? "PASS" : "FAIL") << '\n';
  }
  return report.pass() ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian circles in Cayley graphs of free groups and free products"};
  app.require_subcommand(1);

  CertifyArgs certify_args;
  auto* certify_cmd = app.add_subcommand("certify", "Decide whether Cay(F_n; s) is a hamiltonian circle of Cay(F_n; A ∪ {s})");
  certify_cmd->add_option("-n,--rank", certify_args.rank, "Rank of the free group")->required()->check(CLI::Range(1, kMaxRank));
  certify_cmd->add_option("word", certify_args.word, "Word over a A b B ...")->required();
  certify_cmd->add_option("--max-level", certify_args.max_level, "Highest quotient level to verify")->check(CLI::PositiveNumber);
  certify_cmd->add_option("--orbit-cap", certify_args.orbit_cap, "Orbit search cap (env HAMCIRC_ORBIT_CAP)")->check(CLI::PositiveNumber);
  certify_cmd->add_flag("--json", certify_args.json, "Print JSON");

  QuotientArgs quotient_args;
  auto* quotient_cmd = app.add_subcommand("quotient", "Build Cay(F_n; S)/~l");
  quotient_cmd->add_option("-n,--rank", quotient_args.rank, "Rank of the free group")->required()->check(CLI::Range(1, kMaxRank));
  quotient_cmd->add_option("-s,--generator", quotient_args.words, "Generator word (repeatable)");
  quotient_cmd->add_flag("--with-tree", quotient_args.with_tree, "Add the free generators to S");
  quotient_cmd->add_option("-l,--level", quotient_args.level, "Quotient level")->required()->check(CLI::PositiveNumber);
  quotient_cmd->add_option("--dot", quotient_args.dot, "Write DOT to this path");
  quotient_cmd->add_flag("--enum", quotient_args.enumerate, "Build by brute-force enumeration");
  quotient_cmd->add_option("--budget", quotient_args.budget, "Enumeration budget (env HAMCIRC_ENUM_BUDGET)")->check(CLI::PositiveNumber);
  quotient_cmd->add_flag("--json", quotient_args.json, "Print JSON");

  LeggeArgs legge_args;
  auto* legge_cmd = app.add_subcommand("legge", "Check the (ab)-circle in Z_m * Z_n quotients");
  legge_cmd->add_option("-m", legge_args.m, "Order of a")->required()->check(CLI::Range(3, 1000));
  legge_cmd->add_option("-n", legge_args.n, "Order of b")->required()->check(CLI::Range(2, 1000));
  legge_cmd->add_option("-r,--depth", legge_args.r, "Highest class depth")->required()->check(CLI::PositiveNumber);
  legge_cmd->add_option("--dot", legge_args.dot, "Write the full quotient at depth r as DOT");
  legge_cmd->add_option("--budget", legge_args.budget, "Word enumeration budget (env HAMCIRC_ENUM_BUDGET)")->check(CLI::PositiveNumber);
  legge_cmd->add_flag("--json", legge_args.json, "Print JSON");

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "Find an automorphism onto a squares or commutators word");
  classify_cmd->add_option("-n,--rank", classify_args.rank, "Rank of the free group")->required()->check(CLI::Range(2, kMaxRank));
  classify_cmd->add_option("word", classify_args.word, "Word over a A b B ...")->required();
  classify_cmd->add_option("--orbit-cap", classify_args.orbit_cap, "Orbit search cap (env HAMCIRC_ORBIT_CAP)")->check(CLI::PositiveNumber);
  classify_cmd->add_flag("--json", classify_args.json, "Print JSON");

  FiniteArgs finite_args;
  auto* finite_cmd = app.add_subcommand("finite", "Count hamiltonian cycles of a finite Cayley graph or edge-list file");
  finite_cmd->add_option("target", finite_args.target, "cyclic:N:k,... | dihedral:ORDER:w,... | edge-list path")->required();
  finite_cmd->add_flag("--json", finite_args.json, "Print JSON");

  OuterplanarArgs outer_args;
  auto* outer_cmd = app.add_subcommand("outerplanar", "Check outerplanarity of Cay(F_n; A ∪ {s})/~l for l = 1..L");
  outer_cmd->add_option("-n,--rank", outer_args.rank, "Rank of the free group")->required()->check(CLI::Range(2, kMaxRank));
  outer_cmd->add_option("word", outer_args.word, "Word over a A b B ...")->required();
  outer_cmd->add_option("-l,--level", outer_args.level, "Highest level")->required()->check(CLI::PositiveNumber);
  outer_cmd->add_option("--orbit-cap", outer_args.orbit_cap, "Orbit search cap (env HAMCIRC_ORBIT_CAP)")->check(CLI::PositiveNumber);
  outer_cmd->add_flag("--json", outer_args.json, "Print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*certify_cmd) return run_certify(certify_args);
    if (*quotient_cmd) return run_quotient(quotient_args);
    if (*legge_cmd) return run_legge(legge_args);
    if (*classify_cmd) return run_classify(classify_args);
    if (*finite_cmd) return run_finite(finite_args);
    if (*outer_cmd) return run_outerplanar(outer_args);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const RankError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
