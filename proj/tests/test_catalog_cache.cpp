#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "yk/cache.hpp"
#include "yk/catalog.hpp"
#include "yk/invariants.hpp"

using namespace yk;

TEST_CASE("builtin catalog entries parse and match expectations") {
  for (const auto& e : builtin_catalog()) {
    BraidWord w = e.braid();
    if (e.expected_components)
      CHECK(closure_components(w).count == *e.expected_components);
    if (e.expected_self_linking)
      CHECK(self_linking(w).total == *e.expected_self_linking);
  }
  auto entries = builtin_catalog();
  CHECK(entries.size() == 7);
}

TEST_CASE("families instantiate with their constraints") {
  const auto& bm = find_family("birman-menasco-a");
  CatalogEntry e = bm.instantiate({{"a", 2}, {"b", 2}, {"c", 3}});
  CHECK(e.braid() == parse_braid("s1^5 s2^4 s1^6 s2^-1"));
  CHECK_THROWS_AS(bm.instantiate({{"a", 1}, {"b", 2}, {"c", 3}}), Error);
  CHECK_THROWS_AS(bm.instantiate({{"a", 2}, {"b", 3}, {"c", 3}}), Error);
  CHECK_THROWS_AS(bm.instantiate({{"a", 2}, {"b", 2}}), Error);

  const auto& kn = find_family("khandhawit-ng-a");
  CatalogEntry k = kn.instantiate({{"a", 0}, {"b", 0}});
  CHECK(k.braid() == parse_braid("s3 s2^-2 s3^2 s2 s3^-1 s1^-1 s2^2 s1"));

  // Table rows: knot for odd p, link for even p
  for (const auto& fam : {"torus-p", "twist-neg-p", "twist-pos-p"}) {
    const auto& f = find_family(fam);
    CHECK(f.knot_iff_p_odd.has_value());
    for (long p = 1; p <= 4; ++p) {
      CatalogEntry inst = f.instantiate({{"p", p}});
      int comps = closure_components(inst.braid()).count;
      if (p % 2 == 1)
        CHECK(comps == 1);
      else
        CHECK(comps > 1);
    }
  }
  for (const auto& fam :
       {"alternating-3p", "alternating-3p-cubed", "even-conj-inverse", "even-conj-square"}) {
    const auto& f = find_family(fam);
    for (long p = 1; p <= 3; ++p)
      CHECK(closure_components(f.instantiate({{"p", p}}).braid()).count > 1);
  }
  CHECK(closure_components(parse_braid(builtin_catalog().back().word_text)).count > 1);
}

TEST_CASE("transverse pairs from the catalog are not distinguished by M_d") {
  struct Pair {
    const char* a;
    const char* b;
    std::map<std::string, long> params;
  };
  const std::vector<Pair> pairs = {
      {"birman-menasco-a", "birman-menasco-b", {{"a", 2}, {"b", 2}, {"c", 3}}},
      {"birman-menasco-a", "birman-menasco-b", {{"a", 3}, {"b", 2}, {"c", 4}}},
      {"khandhawit-ng-a", "khandhawit-ng-b", {{"a", 0}, {"b", 0}}},
      {"khandhawit-ng-a", "khandhawit-ng-b", {{"a", 1}, {"b", 0}}},
      {"khandhawit-ng-a", "khandhawit-ng-b", {{"a", 0}, {"b", 1}}},
  };
  for (int d = 2; d <= 3; ++d) {
    TraceEngine engine(d);
    for (const auto& p : pairs) {
      BraidWord wa = find_family(p.a).instantiate(p.params).braid();
      BraidWord wb = find_family(p.b).instantiate(p.params).braid();
      CHECK(transverse_m(engine, wa, TraceStrategy::power_formula).laurent() ==
            transverse_m(engine, wb, TraceStrategy::power_formula).laurent());
    }
  }
}

TEST_CASE("ingest parses word lists") {
  const auto dir = std::filesystem::temp_directory_path() / "yk_ingest_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "words.tsv").string();
  {
    std::ofstream out(path, std::ios::trunc);
    out << "# comment line\n";
    out << "trefoil\tn=2; s1^3\n";
    out << "hopf\ts1^2\n";
    out << "framed\tt1^2 ; s1\n";
    out << "singular\ts1 tau2 s1^-1\n";
  }
  auto entries = ingest(path);
  REQUIRE(entries.size() == 4);
  CHECK(entries[0].name == "trefoil");
  CHECK(entries[0].kind == WordKind::classical);
  CHECK(entries[2].kind == WordKind::framed);
  CHECK(entries[3].kind == WordKind::singular);

  // empty file -> empty list
  const auto empty_path = (dir / "empty.tsv").string();
  std::ofstream(empty_path).close();
  CHECK(ingest(empty_path).empty());

  // duplicates rejected
  {
    std::ofstream out(path, std::ios::trunc);
    out << "a\ts1\na\ts1^2\n";
  }
  CHECK_THROWS_AS(ingest(path), ParseError);

  // malformed exponent reported with the line
  {
    std::ofstream out(path, std::ios::trunc);
    out << "ok\ts1\nbad\ts1^x\n";
  }
  try {
    ingest(path);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(":2") != std::string::npos);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache round trip and corruption handling") {
  const auto dir = std::filesystem::temp_directory_path() / "yk_cache_test";
  std::filesystem::remove_all(dir);
  CacheStore store(dir);
  CacheKey key{parse_braid("s1^3").to_text(), "theta", 2, {0, 1}};
  CHECK(!store.lookup(key).has_value());

  InvariantValue v = theta(2, {0, 1}, parse_braid("s1^3"));
  store.store(key, v.value_str());
  auto hit = store.lookup(key);
  REQUIRE(hit.has_value());
  CHECK(*hit == v.value_str());

  // cold recompute matches the warm record byte for byte
  InvariantValue again = theta(2, {0, 1}, parse_braid("s1^3"));
  CHECK(*hit == again.value_str());

  // a different key misses
  CacheKey other{parse_braid("s1^3").to_text(), "theta", 2, {0}};
  CHECK(!store.lookup(other).has_value());

  // corrupt the record: lookup warns and misses
  std::string warning;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ofstream out(entry.path(), std::ios::trunc);
    out << "garbage\n";
  }
  CHECK(!store.lookup(key, &warning).has_value());
  CHECK(!warning.empty());
  std::filesystem::remove_all(dir);
}
