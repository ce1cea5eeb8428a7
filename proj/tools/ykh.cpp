// ykh: Markov traces on the Yokonuma-Hecke algebras and the derived link
// invariants, on the command line.

#include <iostream>
#include <map>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"
#include "yk/cache.hpp"
#include "yk/catalog.hpp"
#include "yk/invariants.hpp"

using namespace yk;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input_error = 1;
constexpr int exit_property_failure = 2;

std::vector<int> parse_subset(const std::string& csv, int d) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    out.push_back(std::stoi(token));
  }
  if (out.empty()) throw Error("empty D");
  for (int m : out)
    if (m < 0 || m >= d) throw Error("residue " + std::to_string(m) + " out of range for d");
  return out;
}

std::vector<std::vector<int>> all_subsets(int d) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << d); ++mask) {
    std::vector<int> D;
    for (int m = 0; m < d; ++m)
      if (mask & (1u << m)) D.push_back(m);
    out.push_back(std::move(D));
  }
  return out;
}

TraceStrategy parse_strategy(const std::string& s) {
  if (s == "naive") return TraceStrategy::naive;
  if (s == "power") return TraceStrategy::power_formula;
  if (s == "memo") return TraceStrategy::memoized;
  throw Error("unknown strategy " + s);
}

InvariantKind parse_kind(const std::string& s) {
  if (s == "phi") return InvariantKind::phi;
  if (s == "theta") return InvariantKind::theta;
  if (s == "homflypt") return InvariantKind::homflypt;
  if (s == "psi") return InvariantKind::psi;
  if (s == "m") return InvariantKind::transverse_m;
  throw Error("unknown kind " + s);
}

std::string canonical_text(const std::string& word_text) {
  switch (infer_kind(word_text)) {
    case WordKind::classical: return parse_braid(word_text).to_text();
    case WordKind::framed: return parse_framed(word_text).to_text();
    case WordKind::singular: return parse_singular(word_text).to_text();
  }
  throw Error("bad word kind");
}

InvariantValue compute(InvariantKind kind, int d, const std::vector<int>& D,
                       const std::string& word_text, TraceStrategy strategy) {
  switch (kind) {
    case InvariantKind::phi: {
      TraceEngine engine(d, solve_esystem(d, D));
      return phi(engine, parse_framed(word_text), strategy);
    }
    case InvariantKind::theta: {
      TraceEngine engine(d, solve_esystem(d, D));
      return theta(engine, parse_braid(word_text), strategy);
    }
    case InvariantKind::homflypt: {
      TraceEngine engine(1, solve_esystem(1, {0}));
      return homflypt(engine, parse_braid(word_text), strategy);
    }
    case InvariantKind::psi: {
      TraceEngine engine(d, solve_esystem(d, D));
      return psi(engine, parse_singular(word_text), strategy);
    }
    case InvariantKind::transverse_m: {
      TraceEngine engine(d);
      return transverse_m(engine, parse_braid(word_text), strategy);
    }
  }
  throw Error("bad kind");
}

struct CommonOpts {
  int d = 1;
  std::string D_csv;
  std::string kind = "theta";
  std::string vars = "qz";
  std::string strategy = "memo";
  std::string cache_dir;
  std::string out = "text";
};

int run_invariant(const CommonOpts& opts, const std::string& word_or_file,
                  const std::string& label, bool is_file) {
  const InvariantKind kind = parse_kind(opts.kind);
  std::vector<int> D;
  if (kind == InvariantKind::homflypt) {
    D = {0};
  } else if (kind != InvariantKind::transverse_m) {
    if (!opts.D_csv.empty())
      D = parse_subset(opts.D_csv, opts.d);
    else if (opts.d == 1)
      D = {0};
    else
      throw Error("--D is required for kind " + opts.kind + " when d > 1");
  }
  std::optional<CacheStore> cache;
  if (!opts.cache_dir.empty()) cache.emplace(opts.cache_dir);

  std::vector<std::pair<std::string, std::string>> inputs;  // (name, word text)
  if (is_file) {
    for (const auto& e : ingest(word_or_file)) inputs.emplace_back(e.name, e.word_text);
  } else {
    inputs.emplace_back(label.empty() ? word_or_file : label, word_or_file);
  }

  json array = json::array();
  for (const auto& [name, text] : inputs) {
    const std::string canonical = canonical_text(text);
    CacheKey key{canonical, opts.kind + (opts.vars == "qlambda" ? "~qlambda" : ""), opts.d, D};
    if (opts.vars == "qlambda" && kind == InvariantKind::transverse_m)
      throw Error("--vars qlambda is not defined for kind m");

    std::string value_str;
    bool hit = false;
    if (cache) {
      std::string warning;
      if (auto record = cache->lookup(key, &warning)) {
        value_str = *record;
        hit = true;
      }
      if (!warning.empty()) std::cerr << "warning: " << warning << " (recomputing)\n";
    }
    WordInfo info;
    int parity = -1;
    if (hit) {
      // metadata comes from the word alone; the engine is skipped entirely
      switch (infer_kind(text)) {
        case WordKind::classical: {
          BraidWord w = parse_braid(text);
          info = {w.strands(), exponent_sum(w), closure_components(w).count};
          break;
        }
        case WordKind::framed: {
          FramedBraidWord w = parse_framed(text);
          info = {w.strands(), exponent_sum(w), closure_components(w.word()).count};
          break;
        }
        case WordKind::singular: {
          SingularBraidWord w = parse_singular(text);
          info = {w.strands(), exponent_sum(w), closure_components(w).count};
          break;
        }
      }
      if (kind != InvariantKind::transverse_m)
        parity = static_cast<int>(((info.epsilon + info.strands - 1) % 2 + 2) % 2);
    } else {
      InvariantValue v = compute(kind, opts.d, D, text, parse_strategy(opts.strategy));
      value_str = opts.vars == "qlambda" ? to_lambda_form(v.factored()).str() : v.value_str();
      info = v.info;
      parity = v.parity();
      if (cache) cache->store(key, value_str);
    }

    if (opts.out == "json") {
      json j;
      j["name"] = name;
      j["kind"] = opts.kind;
      j["d"] = opts.d;
      j["D"] = kind == InvariantKind::transverse_m ? json(nullptr) : json(D);
      j["components"] = info.components;
      j["epsilon"] = info.epsilon;
      j["strands"] = info.strands;
      j["value"] = value_str;
      j["parity"] = parity >= 0 ? json(parity) : json(nullptr);
      array.push_back(std::move(j));
    } else {
      std::cout << name << ": " << value_str << "\n";
      std::cout << "  kind=" << opts.kind << " d=" << opts.d;
      if (kind != InvariantKind::transverse_m) {
        std::cout << " D={";
        for (std::size_t i = 0; i < D.size(); ++i) std::cout << (i ? "," : "") << D[i];
        std::cout << "}";
      }
      std::cout << " components=" << info.components << " epsilon=" << info.epsilon
                << " strands=" << info.strands;
      if (parity >= 0) std::cout << " parity=" << parity;
      std::cout << "\n";
    }
  }
  if (opts.out == "json")
    std::cout << (array.size() == 1 ? array[0].dump(2) : array.dump(2)) << "\n";
  return exit_ok;
}

int run_trace(const CommonOpts& opts, const std::string& word_text, bool show_stats) {
  std::optional<std::vector<int>> D;
  if (!opts.D_csv.empty()) D = parse_subset(opts.D_csv, opts.d);
  TraceEngine engine = D ? TraceEngine(opts.d, solve_esystem(opts.d, *D))
                         : TraceEngine(opts.d);
  TraceStats stats;
  TraceResult result;
  const WordKind kind = infer_kind(word_text);
  const TraceStrategy strategy = parse_strategy(opts.strategy);
  if (kind == WordKind::singular)
    result = engine.trace_word(parse_singular(word_text), strategy, &stats);
  else if (kind == WordKind::framed)
    result = engine.trace_word(parse_framed(word_text), strategy, &stats);
  else
    result = engine.trace_word(parse_braid(word_text), strategy, &stats);

  if (opts.out == "json") {
    json j;
    j["d"] = opts.d;
    j["D"] = D ? json(*D) : json(nullptr);
    j["value"] = result.value.str();
    if (show_stats)
      j["stats"] = {{"rule3", stats.rule3_applications},
                    {"rule4", stats.rule4_applications},
                    {"quadratic", stats.quadratic_firings},
                    {"cache_hits", stats.cache_hits},
                    {"cache_misses", stats.cache_misses},
                    {"wall_ms", stats.wall_ms}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << result.value.str() << "\n";
    if (show_stats)
      std::cerr << "rule3=" << stats.rule3_applications << " rule4=" << stats.rule4_applications
                << " quadratic=" << stats.quadratic_firings << " hits=" << stats.cache_hits
                << " misses=" << stats.cache_misses << " wall_ms=" << stats.wall_ms << "\n";
  }
  return exit_ok;
}

int run_compare(const CommonOpts& opts, std::vector<std::string> positionals) {
  const InvariantKind kind = parse_kind(opts.kind);
  std::vector<std::pair<std::string, std::string>> words;
  if (positionals.size() == 1) {
    auto entries = ingest(positionals[0]);
    if (entries.size() % 2 != 0)
      throw Error("compare: file must contain an even number of entries (pairs)");
    for (const auto& e : entries) words.emplace_back(e.name, e.word_text);
  } else if (positionals.size() == 2) {
    words.emplace_back("first", positionals[0]);
    words.emplace_back("second", positionals[1]);
  } else {
    throw Error("compare: expected a pair file or two words");
  }

  std::vector<std::vector<int>> Ds;
  if (kind == InvariantKind::transverse_m || kind == InvariantKind::homflypt)
    Ds = {{0}};
  else if (!opts.D_csv.empty())
    Ds = {parse_subset(opts.D_csv, opts.d)};
  else
    Ds = all_subsets(opts.d);

  for (std::size_t p = 0; p + 1 < words.size(); p += 2) {
    for (const auto& D : Ds) {
      InvariantValue a = compute(kind, opts.d, D, words[p].second, parse_strategy(opts.strategy));
      InvariantValue b =
          compute(kind, opts.d, D, words[p + 1].second, parse_strategy(opts.strategy));
      std::cout << words[p].first << " vs " << words[p + 1].first << " [" << opts.kind
                << " d=" << opts.d;
      if (kind != InvariantKind::transverse_m) {
        std::cout << " D={";
        for (std::size_t i = 0; i < D.size(); ++i) std::cout << (i ? "," : "") << D[i];
        std::cout << "}";
      }
      std::cout << "]: " << (a == b ? "EQUAL" : "DIFFER") << "\n";
    }
  }
  return exit_ok;
}

struct SuiteReport {
  int checks = 0;
  int failures = 0;
  void note(bool ok, const std::string& what) {
    ++checks;
    if (!ok) ++failures;
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
  }
};

BraidWord rand_word(std::mt19937& rng, int n, int max_letters) {
  std::uniform_int_distribution<int> len(0, max_letters), idx(1, n - 1), exp(-2, 2);
  std::vector<BraidLetter> letters;
  for (int i = 0, k = len(rng); i < k; ++i) {
    int e = exp(rng);
    if (e == 0) e = 1;
    letters.push_back({idx(rng), e});
  }
  return BraidWord(n, std::move(letters));
}

FramedBraidWord rand_framed(std::mt19937& rng, int n, int max_letters) {
  std::uniform_int_distribution<int> fr(-2, 2);
  std::vector<long> framings(static_cast<std::size_t>(n));
  for (auto& f : framings) f = fr(rng);
  return FramedBraidWord(std::move(framings), rand_word(rng, n, max_letters));
}

SingularBraidWord rand_singular(std::mt19937& rng, int n, int max_letters) {
  std::uniform_int_distribution<int> len(0, max_letters), idx(1, n - 1), exp(-2, 2), kind(0, 3);
  std::vector<SingularLetter> letters;
  for (int i = 0, k = len(rng); i < k; ++i) {
    if (kind(rng) == 0) {
      letters.push_back({idx(rng), 1, true});
    } else {
      int e = exp(rng);
      if (e == 0) e = 1;
      letters.push_back({idx(rng), e, false});
    }
  }
  return SingularBraidWord(n, std::move(letters));
}

int run_verify(const std::string& suite, int d, int count, unsigned seed) {
  SuiteReport report;
  std::mt19937 rng(seed);
  const bool all = suite == "all";

  if (all || suite == "esystem") {
    auto sols = all_esolutions(d);
    report.note(sols.size() == (1u << d) - 1,
                "esystem: 2^d - 1 solutions for d=" + std::to_string(d));
    bool verified = true, distinct = true;
    for (const auto& s : sols) verified = verified && verify_esystem(d, s.x).ok;
    for (std::size_t i = 0; i < sols.size(); ++i)
      for (std::size_t j = i + 1; j < sols.size(); ++j)
        if (d > 1) distinct = distinct && !(sols[i].x == sols[j].x);
    report.note(verified, "esystem: every solution satisfies the defining equations");
    report.note(distinct, "esystem: solutions pairwise distinct");
  }

  if (all || suite == "skein") {
    for (const auto& D : all_subsets(d)) {
      TraceEngine engine(d, solve_esystem(d, D));
      bool framed_zero = true, singular_zero = true;
      std::uniform_int_distribution<int> idx(1, 2);
      for (int t = 0; t < count; ++t) {
        FramedBraidWord beta = rand_framed(rng, 3, 5);
        framed_zero = framed_zero && skein_residual_framed(engine, beta, idx(rng)).is_zero();
        SingularBraidWord base = rand_singular(rng, 3, 4);
        std::uniform_int_distribution<std::size_t> pos(0, base.letters().size());
        singular_zero =
            singular_zero && skein_residual_singular(engine, base, pos(rng), idx(rng)).is_zero();
      }
      std::string tag = " d=" + std::to_string(d) + " |D|=" + std::to_string(D.size());
      report.note(framed_zero, "skein: framed residuals vanish" + tag);
      report.note(singular_zero, "skein: singular residuals vanish" + tag);
    }
  }

  if (all || suite == "markov") {
    for (const auto& D : all_subsets(d)) {
      TraceEngine engine(d, solve_esystem(d, D));
      TraceEngine generic(d);
      bool ok = true;
      for (int t = 0; t < count; ++t) {
        BraidWord w = rand_word(rng, 3, 6);
        BraidWord u = rand_word(rng, 3, 3);
        std::vector<BraidLetter> conj = u.letters();
        for (const auto& l : w.letters()) conj.push_back(l);
        for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it)
          conj.push_back({it->index, -it->exponent});
        BraidWord cw(3, std::move(conj));
        ok = ok && theta(engine, cw).factored() == theta(engine, w).factored();
        ok = ok && theta(engine, stabilize(w, 1)).factored() == theta(engine, w).factored();
        ok = ok && theta(engine, stabilize(w, -1)).factored() == theta(engine, w).factored();
        ok = ok &&
             transverse_m(generic, stabilize(w, 1)).laurent() == transverse_m(generic, w).laurent();
      }
      report.note(ok, "markov: conjugation and stabilization d=" + std::to_string(d) + " |D|=" +
                          std::to_string(D.size()));
    }
  }

  if (all || suite == "thm82") {
    const std::vector<std::string> knots = {"s1^3", "s1 s2^-1 s1 s2^-1"};
    for (const auto& D : all_subsets(d)) {
      for (const auto& text : knots) {
        ThetaComparison cmp = compare_theta_homflypt(parse_braid(text), d, D);
        report.note(cmp.knot && cmp.equal_qz && cmp.equal_qlambda,
                    "thm82: theta matches homflypt on " + text);
      }
    }
  }

  std::cout << report.checks << " checks, " << report.failures << " failures\n";
  return report.failures == 0 ? exit_ok : exit_property_failure;
}

int run_esystem_list(int d) {
  for (const auto& sol : all_esolutions(d)) std::cout << sol.str() << "\n";
  return exit_ok;
}

int run_catalog(const std::string& family, const std::vector<std::string>& params) {
  if (family.empty()) {
    for (const auto& e : builtin_catalog()) std::cout << e.name << "\t" << e.word_text << "\n";
    std::cout << "\n";
    for (const auto& f : builtin_families()) {
      std::cout << "# family " << f.name << "(";
      for (std::size_t i = 0; i < f.params.size(); ++i) std::cout << (i ? "," : "") << f.params[i];
      std::cout << "): " << f.description << "\n";
    }
    return exit_ok;
  }
  std::map<std::string, long> values;
  for (const auto& p : params) {
    auto eq = p.find('=');
    if (eq == std::string::npos) throw Error("catalog: parameters take the form name=value");
    values[p.substr(0, eq)] = std::stol(p.substr(eq + 1));
  }
  CatalogEntry e = find_family(family).instantiate(values);
  std::cout << e.name << "\t" << e.word_text << "\n";
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Markov traces and link invariants from the Yokonuma-Hecke algebras"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string word, label, file, suite = "all", family;
  std::vector<std::string> positionals, family_params;
  bool show_stats = false;
  int count = 10;
  unsigned seed = 20240901;
  int esys_d = 0;
  std::string esys_positional;

  auto add_common = [&](CLI::App* cmd, bool with_kind) {
    cmd->add_option("--d", opts.d, "modulus d of the algebra tower");
    cmd->add_option("--D", opts.D_csv, "comma list of residues describing the subset D");
    if (with_kind)
      cmd->add_option("--kind", opts.kind, "phi|theta|homflypt|psi|m")
          ->check(CLI::IsMember({"phi", "theta", "homflypt", "psi", "m"}));
    cmd->add_option("--strategy", opts.strategy, "naive|power|memo")
        ->check(CLI::IsMember({"naive", "power", "memo"}));
    cmd->add_option("--out", opts.out, "json|text")->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* trace_cmd = app.add_subcommand("trace", "evaluate the Markov trace of a braid word");
  add_common(trace_cmd, false);
  trace_cmd->add_option("word", word, "braid word")->required();
  trace_cmd->add_flag("--stats", show_stats, "report rule applications and cache statistics");

  CLI::App* inv_cmd = app.add_subcommand("invariant", "evaluate a link invariant");
  add_common(inv_cmd, true);
  inv_cmd->add_option("--vars", opts.vars, "qz|qlambda")
      ->check(CLI::IsMember({"qz", "qlambda"}));
  inv_cmd->add_option("--cache", opts.cache_dir, "result cache directory");
  inv_cmd->add_option("--name", label, "label used in the output");
  inv_cmd->add_option("--file", file, "batch over a name<TAB>word list");
  inv_cmd->add_option("word", word, "braid word (omit when using --file)");

  CLI::App* cmp_cmd = app.add_subcommand("compare", "compare invariants of word pairs");
  add_common(cmp_cmd, true);
  cmp_cmd->add_option("inputs", positionals, "pair file, or two words")->expected(1, 2);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a property suite");
  verify_cmd->add_option("--suite", suite, "skein|markov|esystem|thm82|all")
      ->check(CLI::IsMember({"skein", "markov", "esystem", "thm82", "all"}));
  verify_cmd->add_option("--d", opts.d, "modulus d");
  verify_cmd->add_option("--count", count, "random words per check");
  verify_cmd->add_option("--seed", seed, "random seed");

  CLI::App* esys_cmd = app.add_subcommand("esystem", "E-system solutions");
  CLI::App* esys_list = esys_cmd->add_subcommand("list", "list all solutions for a given d");
  esys_list->add_option("--d", esys_d, "modulus d");
  esys_list->add_option("dspec", esys_positional, "alternative d=<int> form");

  CLI::App* cat_cmd = app.add_subcommand("catalog", "builtin braid words and families");
  cat_cmd->add_option("--family", family, "family name to instantiate");
  cat_cmd->add_option("--param", family_params, "family parameter name=value (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input_error;
  }

  try {
    if (trace_cmd->parsed()) return run_trace(opts, word, show_stats);
    if (inv_cmd->parsed()) {
      if (!file.empty()) return run_invariant(opts, file, label, true);
      if (word.empty()) throw Error("invariant: a word or --file is required");
      return run_invariant(opts, word, label, false);
    }
    if (cmp_cmd->parsed()) return run_compare(opts, positionals);
    if (verify_cmd->parsed()) return run_verify(suite, opts.d, count, seed);
    if (esys_cmd->parsed()) {
      if (!esys_list->parsed()) throw Error("esystem: expected the 'list' subcommand");
      int d = esys_d;
      if (!esys_positional.empty()) {
        if (esys_positional.rfind("d=", 0) != 0)
          throw Error("esystem list: expected d=<int>");
        d = std::stoi(esys_positional.substr(2));
      }
      if (d < 1) throw Error("esystem list: d must be >= 1");
      return run_esystem_list(d);
    }
    if (cat_cmd->parsed()) return run_catalog(family, family_params);
  } catch (const PropertyError& e) {
    std::cerr << "property failure: " << e.what() << "\n";
    return exit_property_failure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  }
  return exit_ok;
}
