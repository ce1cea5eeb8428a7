#ifndef YK_CATALOG_HPP
#define YK_CATALOG_HPP

#include <map>
#include <optional>

#include "yk/braid.hpp"

namespace yk {

struct CatalogEntry {
  std::string name;
  WordKind kind = WordKind::classical;
  std::string word_text;  // braid grammar
  std::string source;     // builtin family tag or file path
  std::optional<int> expected_components;
  std::optional<long> expected_self_linking;

  BraidWord braid() const { return parse_braid(word_text); }
};

/*
  Parameterized braid family. Instantiation validates the parameter
  constraints and renders a concrete catalog entry. knot_iff_p_odd
  distinguishes the families whose closure is a knot exactly for odd p
  from the always-link families.
*/
struct CatalogFamily {
  std::string name;
  std::vector<std::string> params;
  std::string description;
  std::optional<bool> knot_iff_p_odd;  // set only for single-parameter p families

  CatalogEntry instantiate(const std::map<std::string, long>& values) const;
};

// Fixed entries: the three pairs of 4-braid presentations of transversely
// interesting knots, plus the single sporadic family row.
std::vector<CatalogEntry> builtin_catalog();

std::vector<CatalogFamily> builtin_families();
const CatalogFamily& find_family(const std::string& name);

// One entry per line, "name<TAB>word", '#' comments. Duplicate names and
// malformed words are reported with their line number.
std::vector<CatalogEntry> ingest(const std::string& path);

WordKind infer_kind(const std::string& word_text);

}  // namespace yk

#endif
