#include "yk/braid.hpp"

#include <algorithm>
#include <cctype>

namespace yk {

namespace {

std::vector<BraidLetter> canonical_letters(std::vector<BraidLetter> in) {
  std::vector<BraidLetter> out;
  for (const auto& l : in) {
    if (l.exponent == 0) continue;
    if (!out.empty() && out.back().index == l.index) {
      out.back().exponent += l.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

std::vector<SingularLetter> canonical_singular(std::vector<SingularLetter> in) {
  std::vector<SingularLetter> out;
  for (const auto& l : in) {
    if (l.exponent == 0 && !l.singular) continue;
    if (!out.empty() && out.back().index == l.index && out.back().singular == l.singular) {
      out.back().exponent += l.exponent;
      if (out.back().exponent == 0 && !out.back().singular) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

struct Token {
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    out.push_back({s.substr(i, j - i), i});
    i = j;
  }
  return out;
}

long parse_int(const std::string& s, std::size_t& k, const Token& tok) {
  bool neg = false;
  if (k < s.size() && (s[k] == '-' || s[k] == '+')) {
    neg = s[k] == '-';
    ++k;
  }
  if (k >= s.size() || !std::isdigit(static_cast<unsigned char>(s[k])))
    throw ParseError("expected integer in token '" + tok.text + "'", tok.pos);
  long v = 0;
  while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
    v = v * 10 + (s[k] - '0');
    ++k;
  }
  return neg ? -v : v;
}

struct RawLetter {
  char kind;  // 't', 's', 'u' (tau)
  int index;
  long exponent;
  Token tok;
};

// Parses "t<j>[^e]", "s<i>[^e]" or "tau<i>[^e]".
RawLetter parse_letter(const Token& tok) {
  const std::string& s = tok.text;
  std::size_t k = 0;
  char kind;
  if (s.rfind("tau", 0) == 0) {
    kind = 'u';
    k = 3;
  } else if (!s.empty() && s[0] == 't') {
    kind = 't';
    k = 1;
  } else if (!s.empty() && s[0] == 's') {
    kind = 's';
    k = 1;
  } else {
    throw ParseError("unrecognized token '" + s + "'", tok.pos);
  }
  if (k >= s.size() || !std::isdigit(static_cast<unsigned char>(s[k])))
    throw ParseError("missing index in token '" + s + "'", tok.pos);
  long idx = parse_int(s, k, tok);
  long exp = 1;
  if (k < s.size()) {
    if (s[k] != '^') throw ParseError("unexpected character in token '" + s + "'", tok.pos);
    ++k;
    exp = parse_int(s, k, tok);
    if (k != s.size()) throw ParseError("trailing characters in token '" + s + "'", tok.pos);
  }
  if (idx < 1) throw ParseError("index must be positive in '" + s + "'", tok.pos);
  return {kind, static_cast<int>(idx), exp, tok};
}

struct ParsedText {
  int declared_n = 0;  // 0 when absent
  std::vector<RawLetter> framings;
  std::vector<RawLetter> letters;  // 's' and 'u'
};

ParsedText parse_tokens(const std::string& text, WordKind kind) {
  auto toks = tokenize(text);
  ParsedText out;
  std::size_t i = 0;
  if (i < toks.size() && toks[i].text.rfind("n=", 0) == 0) {
    std::string body = toks[i].text.substr(2);
    if (!body.empty() && body.back() == ';') body.pop_back();
    std::size_t k = 0;
    Token t{body, toks[i].pos};
    long n = parse_int(body, k, t);
    if (k != body.size() || n < 1)
      throw ParseError("bad strand header '" + toks[i].text + "'", toks[i].pos);
    out.declared_n = static_cast<int>(n);
    ++i;
  }
  bool in_framings = kind == WordKind::framed;
  for (; i < toks.size(); ++i) {
    if (toks[i].text == ";") {
      if (!in_framings)
        throw ParseError("unexpected ';'", toks[i].pos);
      in_framings = false;
      continue;
    }
    RawLetter l = parse_letter(toks[i]);
    switch (l.kind) {
      case 't':
        if (kind != WordKind::framed)
          throw ParseError("framing token in a non-framed word", l.tok.pos);
        if (!in_framings)
          throw ParseError("framing token after the braid part", l.tok.pos);
        out.framings.push_back(l);
        break;
      case 'u':
        if (kind != WordKind::singular)
          throw ParseError("singular token in a non-singular word", l.tok.pos);
        if (l.exponent < 1)
          throw ParseError("singular letters require positive exponents", l.tok.pos);
        in_framings = false;
        out.letters.push_back(l);
        break;
      case 's':
        if (in_framings && !out.framings.empty())
          throw ParseError("expected ';' between framings and braid letters", l.tok.pos);
        in_framings = false;
        out.letters.push_back(l);
        break;
    }
  }
  return out;
}

int resolve_strands(const ParsedText& p) {
  int max_braid = 0, max_t = 0;
  for (const auto& l : p.letters) max_braid = std::max(max_braid, l.index);
  for (const auto& l : p.framings) max_t = std::max(max_t, l.index);
  int n = std::max({max_braid + 1, max_t, 1});
  if (p.declared_n) {
    for (const auto& l : p.letters)
      if (l.index > p.declared_n - 1)
        throw ParseError("index out of declared range in '" + l.tok.text + "'", l.tok.pos);
    for (const auto& l : p.framings)
      if (l.index > p.declared_n)
        throw ParseError("index out of declared range in '" + l.tok.text + "'", l.tok.pos);
    n = p.declared_n;
  }
  return n;
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(canonical_letters(std::move(letters))) {
  if (strands_ < 1) throw Error("BraidWord: strands must be >= 1");
  for (const auto& l : letters_)
    if (l.index < 1 || l.index > strands_ - 1)
      throw Error("BraidWord: letter index out of range");
}

FramedBraidWord::FramedBraidWord(std::vector<long> framings, BraidWord word)
    : framings_(std::move(framings)), word_(std::move(word)) {
  if (static_cast<int>(framings_.size()) != word_.strands())
    throw Error("FramedBraidWord: framing count must equal strand count");
}

SingularBraidWord::SingularBraidWord(int strands, std::vector<SingularLetter> letters)
    : strands_(strands), letters_(canonical_singular(std::move(letters))) {
  if (strands_ < 1) throw Error("SingularBraidWord: strands must be >= 1");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index > strands_ - 1)
      throw Error("SingularBraidWord: letter index out of range");
    if (l.singular && l.exponent < 1)
      throw Error("SingularBraidWord: singular letters are not invertible");
  }
}

long SingularBraidWord::singular_points() const {
  long k = 0;
  for (const auto& l : letters_)
    if (l.singular) k += l.exponent;
  return k;
}

BraidWord parse_braid(const std::string& text) {
  auto p = parse_tokens(text, WordKind::classical);
  int n = resolve_strands(p);
  std::vector<BraidLetter> letters;
  for (const auto& l : p.letters) letters.push_back({l.index, l.exponent});
  return BraidWord(n, std::move(letters));
}

FramedBraidWord parse_framed(const std::string& text) {
  auto p = parse_tokens(text, WordKind::framed);
  int n = resolve_strands(p);
  std::vector<long> framings(static_cast<std::size_t>(n), 0);
  for (const auto& l : p.framings) framings[static_cast<std::size_t>(l.index - 1)] += l.exponent;
  std::vector<BraidLetter> letters;
  for (const auto& l : p.letters) letters.push_back({l.index, l.exponent});
  return FramedBraidWord(std::move(framings), BraidWord(n, std::move(letters)));
}

SingularBraidWord parse_singular(const std::string& text) {
  auto p = parse_tokens(text, WordKind::singular);
  int n = resolve_strands(p);
  std::vector<SingularLetter> letters;
  for (const auto& l : p.letters) letters.push_back({l.index, l.exponent, l.kind == 'u'});
  return SingularBraidWord(n, std::move(letters));
}

AnyWord parse_word(const std::string& text, WordKind kind) {
  switch (kind) {
    case WordKind::classical: return parse_braid(text);
    case WordKind::framed: return parse_framed(text);
    case WordKind::singular: return parse_singular(text);
  }
  throw Error("parse_word: bad kind");
}

std::string BraidWord::to_text() const {
  std::string out = "n=" + std::to_string(strands_) + ";";
  for (const auto& l : letters_) {
    out += " s" + std::to_string(l.index);
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

std::string FramedBraidWord::to_text() const {
  std::string out = "n=" + std::to_string(strands()) + ";";
  for (std::size_t j = 0; j < framings_.size(); ++j) {
    if (framings_[j] == 0) continue;
    out += " t" + std::to_string(j + 1);
    if (framings_[j] != 1) out += "^" + std::to_string(framings_[j]);
  }
  out += " ;";
  for (const auto& l : word_.letters()) {
    out += " s" + std::to_string(l.index);
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

std::string SingularBraidWord::to_text() const {
  std::string out = "n=" + std::to_string(strands_) + ";";
  for (const auto& l : letters_) {
    out += l.singular ? " tau" : " s";
    out += std::to_string(l.index);
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

namespace {

template <typename Letters>
Permutation word_permutation(int n, const Letters& letters) {
  Permutation p(n);
  for (const auto& l : letters)
    if (l.exponent % 2 != 0) p = p.right_transposition(l.index);
  return p;
}

template <typename Letters>
ComponentStructure components_impl(int n, const Letters& letters, const Permutation& pi) {
  ComponentStructure cs;
  auto cycles = pi.cycles();
  cs.count = static_cast<int>(cycles.size());
  cs.strand_to_component.assign(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t c = 0; c < cycles.size(); ++c)
    for (int s : cycles[c]) cs.strand_to_component[static_cast<std::size_t>(s)] = static_cast<int>(c) + 1;
  for (int c = 1; c <= cs.count; ++c) cs.per_component_exponent[c] = 0;

  // Walk the braid, tracking which strand occupies each position, and
  // attribute each letter's exponent to the pair of strands it crosses.
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(i)] = i;
  for (const auto& l : letters) {
    int a = pos[static_cast<std::size_t>(l.index)];
    int b = pos[static_cast<std::size_t>(l.index + 1)];
    int ca = cs.strand_to_component[static_cast<std::size_t>(a)];
    int cb = cs.strand_to_component[static_cast<std::size_t>(b)];
    if (ca == cb) cs.per_component_exponent[ca] += l.exponent;
    if (l.exponent % 2 != 0)
      std::swap(pos[static_cast<std::size_t>(l.index)], pos[static_cast<std::size_t>(l.index + 1)]);
  }
  return cs;
}

}  // namespace

Permutation permutation(const BraidWord& w) { return word_permutation(w.strands(), w.letters()); }
Permutation permutation(const SingularBraidWord& w) {
  return word_permutation(w.strands(), w.letters());
}

ComponentStructure closure_components(const BraidWord& w) {
  return components_impl(w.strands(), w.letters(), permutation(w));
}

ComponentStructure closure_components(const SingularBraidWord& w) {
  return components_impl(w.strands(), w.letters(), permutation(w));
}

long exponent_sum(const BraidWord& w) {
  long e = 0;
  for (const auto& l : w.letters()) e += l.exponent;
  return e;
}

long exponent_sum(const FramedBraidWord& w) { return exponent_sum(w.word()); }

long exponent_sum(const SingularBraidWord& w) {
  long e = 0;
  for (const auto& l : w.letters()) e += l.exponent;
  return e;
}

SelfLinking self_linking(const BraidWord& w) {
  auto cs = closure_components(w);
  std::vector<long> strand_count(static_cast<std::size_t>(cs.count) + 1, 0);
  for (int s = 1; s <= w.strands(); ++s)
    ++strand_count[static_cast<std::size_t>(cs.strand_to_component[static_cast<std::size_t>(s)])];
  SelfLinking sl{0, {}};
  for (int c = 1; c <= cs.count; ++c) {
    long v = cs.per_component_exponent.at(c) - strand_count[static_cast<std::size_t>(c)];
    sl.per_component[c] = v;
    sl.total += v;
  }
  return sl;
}

FramedBraidWord to_transverse_framed(const BraidWord& w) {
  auto cs = closure_components(w);
  auto sl = self_linking(w);
  std::vector<long> framings(static_cast<std::size_t>(w.strands()), 0);
  std::vector<bool> done(static_cast<std::size_t>(cs.count) + 1, false);
  for (int s = 1; s <= w.strands(); ++s) {
    int c = cs.strand_to_component[static_cast<std::size_t>(s)];
    if (!done[static_cast<std::size_t>(c)]) {
      framings[static_cast<std::size_t>(s - 1)] = sl.per_component.at(c);
      done[static_cast<std::size_t>(c)] = true;
    }
  }
  return FramedBraidWord(std::move(framings), w);
}

BraidWord reverse(const BraidWord& w) {
  std::vector<BraidLetter> letters(w.letters().rbegin(), w.letters().rend());
  return BraidWord(w.strands(), std::move(letters));
}

FramedBraidWord reverse(const FramedBraidWord& w) {
  Permutation pi = permutation(w.word());
  std::vector<long> framings(w.framings().size());
  for (int i = 1; i <= w.strands(); ++i)
    framings[static_cast<std::size_t>(i - 1)] =
        w.framings()[static_cast<std::size_t>(pi.apply(i) - 1)];
  return FramedBraidWord(std::move(framings), reverse(w.word()));
}

SingularBraidWord reverse(const SingularBraidWord& w) {
  std::vector<SingularLetter> letters(w.letters().rbegin(), w.letters().rend());
  return SingularBraidWord(w.strands(), std::move(letters));
}

BraidWord mirror(const BraidWord& w) {
  std::vector<BraidLetter> letters = w.letters();
  for (auto& l : letters) l.exponent = -l.exponent;
  return BraidWord(w.strands(), std::move(letters));
}

FramedBraidWord connected_sum(const FramedBraidWord& a, const FramedBraidWord& b) {
  const int n = a.strands(), m = b.strands();
  std::vector<long> framings(static_cast<std::size_t>(n + m - 1), 0);
  for (int j = 1; j <= n; ++j)
    framings[static_cast<std::size_t>(j - 1)] = a.framings()[static_cast<std::size_t>(j - 1)];
  for (int j = 1; j <= m; ++j)
    framings[static_cast<std::size_t>(n + j - 2)] += b.framings()[static_cast<std::size_t>(j - 1)];
  std::vector<BraidLetter> letters = a.word().letters();
  for (const auto& l : b.word().letters()) letters.push_back({l.index + n - 1, l.exponent});
  return FramedBraidWord(std::move(framings), BraidWord(n + m - 1, std::move(letters)));
}

BraidWord stabilize(const BraidWord& w, int sign) {
  if (sign != 1 && sign != -1) throw Error("stabilize: sign must be +1 or -1");
  std::vector<BraidLetter> letters = w.letters();
  letters.push_back({w.strands(), sign});
  return BraidWord(w.strands() + 1, std::move(letters));
}

}  // namespace yk
