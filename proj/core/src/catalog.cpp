#include "yk/catalog.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace yk {

namespace {

long require_param(const std::map<std::string, long>& values, const std::string& name) {
  auto it = values.find(name);
  if (it == values.end()) throw Error("catalog: missing parameter " + name);
  return it->second;
}

std::string sigma(int i, long e) {
  std::string s = " s" + std::to_string(i);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

std::string repeat(const std::string& block, long times) {
  std::string out;
  for (long i = 0; i < times; ++i) out += block;
  return out;
}

}  // namespace

CatalogEntry CatalogFamily::instantiate(const std::map<std::string, long>& values) const {
  for (const auto& p : params) require_param(values, p);

  auto tag = [&](std::string base) {
    for (const auto& p : params) base += "-" + p + std::to_string(values.at(p));
    return base;
  };

  CatalogEntry e;
  e.kind = WordKind::classical;
  e.source = "builtin:" + name;
  if (name == "birman-menasco-a" || name == "birman-menasco-b") {
    const long a = values.at("a"), b = values.at("b"), c = values.at("c");
    if (a <= 1 || b <= 1 || c <= 1)
      throw Error("birman-menasco: parameters must satisfy a,b,c > 1");
    if (a + 1 == b || b == c)
      throw Error("birman-menasco: parameters must satisfy a+1 != b != c");
    e.name = tag(name);
    if (name == "birman-menasco-a")
      e.word_text = "n=3;" + sigma(1, 2 * a + 1) + sigma(2, 2 * b) + sigma(1, 2 * c) + sigma(2, -1);
    else
      e.word_text = "n=3;" + sigma(1, 2 * a + 1) + sigma(2, -1) + sigma(1, 2 * c) + sigma(2, 2 * b);
    return e;
  }
  if (name == "khandhawit-ng-a" || name == "khandhawit-ng-b") {
    const long a = values.at("a"), b = values.at("b");
    if (a < 0 || b < 0) throw Error("khandhawit-ng: parameters must satisfy a,b >= 0");
    e.name = tag(name);
    std::string prefix = "n=4;" + sigma(3, 1) + sigma(2, -2) + sigma(3, 2 * a + 2) +
                         sigma(2, 1) + sigma(3, -1);
    if (name == "khandhawit-ng-a")
      e.word_text = prefix + sigma(1, -1) + sigma(2, 2) + sigma(1, 2 * b + 1);
    else
      e.word_text = prefix + sigma(1, 2 * b + 1) + sigma(2, 2) + sigma(1, -1);
    return e;
  }

  const long p = values.at("p");
  e.name = tag(name);
  if (name == "torus-p") {
    if (p < 1) throw Error("torus-p: p must be >= 1");
    e.word_text = "n=2;" + sigma(1, p);
  } else if (name == "twist-neg-p") {
    if (p < 1) throw Error("twist-neg-p: p must be >= 1");
    e.word_text = "n=3;" + sigma(1, p) + sigma(2, -1) + sigma(1, -1) + sigma(2, -1);
  } else if (name == "twist-pos-p") {
    if (p < 1) throw Error("twist-pos-p: p must be >= 1");
    e.word_text = "n=3;" + sigma(1, p) + sigma(2, -1) + sigma(1, 1) + sigma(2, -1);
  } else if (name == "alternating-3p") {
    if (p < 1) throw Error("alternating-3p: p must be >= 1");
    e.word_text = "n=3;" + repeat(sigma(1, 1) + sigma(2, -1), 3 * p);
  } else if (name == "alternating-3p-cubed") {
    if (p < 1) throw Error("alternating-3p-cubed: p must be >= 1");
    e.word_text = "n=3;" + sigma(1, 3) + sigma(2, -1) + repeat(sigma(1, 1) + sigma(2, -1), 3 * p - 1);
  } else if (name == "even-conj-inverse") {
    if (p < 1) throw Error("even-conj-inverse: p must be >= 1");
    e.word_text = "n=3;" + sigma(1, 2 * p) + sigma(2, 1) + sigma(1, -1) + sigma(2, 1);
  } else if (name == "even-conj-square") {
    if (p < 1) throw Error("even-conj-square: p must be >= 1");
    e.word_text = "n=3;" + sigma(1, 2 * p) + sigma(2, 1) + sigma(1, 2) + sigma(2, 1);
  } else {
    throw Error("catalog: unknown family " + name);
  }
  if (knot_iff_p_odd.has_value())
    e.expected_components = (*knot_iff_p_odd && p % 2 == 1) ? std::optional<int>(1)
                                                            : std::nullopt;
  return e;
}

std::vector<CatalogFamily> builtin_families() {
  return {
      {"birman-menasco-a", {"a", "b", "c"},
       "s1^(2a+1) s2^(2b) s1^(2c) s2^-1 with a,b,c > 1, a+1 != b != c", std::nullopt},
      {"birman-menasco-b", {"a", "b", "c"},
       "s1^(2a+1) s2^-1 s1^(2c) s2^(2b) with a,b,c > 1, a+1 != b != c", std::nullopt},
      {"khandhawit-ng-a", {"a", "b"},
       "s3 s2^-2 s3^(2a+2) s2 s3^-1 s1^-1 s2^2 s1^(2b+1) with a,b >= 0", std::nullopt},
      {"khandhawit-ng-b", {"a", "b"},
       "s3 s2^-2 s3^(2a+2) s2 s3^-1 s1^(2b+1) s2^2 s1^-1 with a,b >= 0", std::nullopt},
      {"torus-p", {"p"}, "s1^p; knot iff p odd", true},
      {"twist-neg-p", {"p"}, "s1^p s2^-1 s1^-1 s2^-1; knot iff p odd", true},
      {"twist-pos-p", {"p"}, "s1^p s2^-1 s1 s2^-1; knot iff p odd", true},
      {"alternating-3p", {"p"}, "(s1 s2^-1)^(3p); link for every p", false},
      {"alternating-3p-cubed", {"p"}, "(s1^3 s2^-1)(s1 s2^-1)^(3p-1); link for every p", false},
      {"even-conj-inverse", {"p"}, "s1^(2p) s2 s1^-1 s2; link for every p", false},
      {"even-conj-square", {"p"}, "s1^(2p) s2 s1^2 s2; link for every p", false},
  };
}

const CatalogFamily& find_family(const std::string& name) {
  static const std::vector<CatalogFamily> families = builtin_families();
  for (const auto& f : families)
    if (f.name == name) return f;
  throw Error("catalog: unknown family " + name);
}

std::vector<CatalogEntry> builtin_catalog() {
  std::vector<CatalogEntry> out;
  auto fixed = [&](std::string name, std::string text, std::optional<long> sl) {
    CatalogEntry e;
    e.name = std::move(name);
    e.kind = WordKind::classical;
    e.word_text = std::move(text);
    e.source = "builtin:presentations";
    e.expected_components = 1;
    e.expected_self_linking = sl;
    out.push_back(std::move(e));
  };
  fixed("m9_45-a", "n=4; s3^-1 s2 s1 s3 s2^-1 s3 s1 s2^2", 1);
  fixed("m9_45-b", "n=4; s2^2 s1 s3 s2^-1 s3 s1 s2 s3^-1", 1);
  fixed("10_128-a", "n=4; s1 s2 s1 s2 s1 s2 s1 s3^2 s2 s3^-1", 5);
  fixed("10_128-b", "n=4; s3^-1 s2 s3^2 s1 s2 s1 s2 s1 s2 s1", 5);
  fixed("10_160-a", "n=4; s2^-1 s3 s2^-1 s1^-1 s3 s2 s3 s2 s3 s1^2", 1);
  fixed("10_160-b", "n=4; s1^2 s3 s2 s3 s2 s3 s1^-1 s2^-1 s3 s2^-1", 1);

  CatalogEntry sporadic;
  sporadic.name = "sporadic-link";
  sporadic.kind = WordKind::classical;
  sporadic.word_text = "n=3; s1^3 s2^-1 s1^3 s2^-1 s1 s2^-1";
  sporadic.source = "builtin:families";
  out.push_back(std::move(sporadic));
  return out;
}

WordKind infer_kind(const std::string& word_text) {
  std::istringstream in(word_text);
  std::string tok;
  bool framed = false;
  while (in >> tok) {
    if (tok.rfind("tau", 0) == 0) return WordKind::singular;
    if (tok == ";" || (tok.size() > 1 && tok[0] == 't' && std::isdigit(static_cast<unsigned char>(tok[1]))))
      framed = true;
  }
  return framed ? WordKind::framed : WordKind::classical;
}

std::vector<CatalogEntry> ingest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("ingest: cannot open " + path);
  std::vector<CatalogEntry> out;
  std::set<std::string> names;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError("ingest: " + path + ":" + std::to_string(lineno) +
                           ": expected name<TAB>word",
                       lineno);
    CatalogEntry e;
    e.name = line.substr(0, tab);
    e.word_text = line.substr(tab + 1);
    e.source = path + ":" + std::to_string(lineno);
    if (e.name.empty())
      throw ParseError("ingest: " + path + ":" + std::to_string(lineno) + ": empty name", lineno);
    if (!names.insert(e.name).second)
      throw ParseError("ingest: " + path + ":" + std::to_string(lineno) + ": duplicate name '" +
                           e.name + "'",
                       lineno);
    e.kind = infer_kind(e.word_text);
    try {
      parse_word(e.word_text, e.kind);  // validate
    } catch (const Error& err) {
      throw ParseError("ingest: " + path + ":" + std::to_string(lineno) + ": " + err.what(),
                       lineno);
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace yk
