#ifndef YK_BRAID_HPP
#define YK_BRAID_HPP

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "yk/permutation.hpp"

namespace yk {

struct BraidLetter {
  int index;      // 1 <= index <= strands-1
  long exponent;  // nonzero
  bool operator==(const BraidLetter&) const = default;
};

/*
  A word in the braid group B_n, kept in canonical form: adjacent letters
  with equal index are merged and zero exponents dropped.
*/
class BraidWord {
public:
  BraidWord() : strands_(1) {}
  BraidWord(int strands, std::vector<BraidLetter> letters);

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  bool operator==(const BraidWord&) const = default;
  std::string to_text() const;

private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

/*
  Framed braid word in split form: the framing block (one integer per
  strand) is stored to the left of the braid part. Relation (f_2) is applied
  eagerly whenever words are combined, so the split form is canonical.
*/
class FramedBraidWord {
public:
  FramedBraidWord() : framings_(1, 0) {}
  FramedBraidWord(std::vector<long> framings, BraidWord word);
  explicit FramedBraidWord(BraidWord word)
      : framings_(static_cast<std::size_t>(word.strands()), 0), word_(std::move(word)) {}

  int strands() const { return word_.strands(); }
  const std::vector<long>& framings() const { return framings_; }
  const BraidWord& word() const { return word_; }

  bool operator==(const FramedBraidWord&) const = default;
  std::string to_text() const;

private:
  std::vector<long> framings_;
  BraidWord word_;
};

struct SingularLetter {
  int index;
  long exponent;  // braiding: nonzero; singular: >= 1
  bool singular;
  bool operator==(const SingularLetter&) const = default;
};

// Word in the singular braid monoid: braiding letters with their inverses
// plus non-invertible singular letters tau_i.
class SingularBraidWord {
public:
  SingularBraidWord() : strands_(1) {}
  SingularBraidWord(int strands, std::vector<SingularLetter> letters);

  int strands() const { return strands_; }
  const std::vector<SingularLetter>& letters() const { return letters_; }
  long singular_points() const;  // sum of singular exponents

  bool operator==(const SingularBraidWord&) const = default;
  std::string to_text() const;

private:
  int strands_;
  std::vector<SingularLetter> letters_;
};

struct ComponentStructure {
  int count = 0;
  std::vector<int> strand_to_component;       // 1-based strand -> component id (1-based)
  std::map<int, long> per_component_exponent; // signed sum over intra-component letters
};

enum class WordKind { classical, framed, singular };

using AnyWord = std::variant<BraidWord, FramedBraidWord, SingularBraidWord>;

// Parses the braid grammar: optional "n=<int>;" header, optional framing
// tokens "t<j>[^<int>]" terminated by ";", then letters "s<i>[^<int>]" /
// "tau<i>[^<posint>]". Whitespace-separated, UTF-8.
BraidWord parse_braid(const std::string& text);
FramedBraidWord parse_framed(const std::string& text);
SingularBraidWord parse_singular(const std::string& text);
AnyWord parse_word(const std::string& text, WordKind kind);

Permutation permutation(const BraidWord& w);
Permutation permutation(const SingularBraidWord& w);

ComponentStructure closure_components(const BraidWord& w);
ComponentStructure closure_components(const SingularBraidWord& w);

long exponent_sum(const BraidWord& w);
long exponent_sum(const FramedBraidWord& w);  // of the braid part
long exponent_sum(const SingularBraidWord& w);  // sigma and tau exponents both count

/*
  Bennequin self-linking data of the closure. The per-component value of a
  component c is (signed sum of exponents of letters whose two strands both
  lie in c) minus (number of strands of c); the total is the sum over
  components, which equals epsilon - n exactly when the closure is a knot.
*/
struct SelfLinking {
  long total;
  std::map<int, long> per_component;
};
SelfLinking self_linking(const BraidWord& w);

// The framed braid carrying each component's self-linking as the framing of
// the lowest-numbered strand of that component.
FramedBraidWord to_transverse_framed(const BraidWord& w);

BraidWord reverse(const BraidWord& w);
FramedBraidWord reverse(const FramedBraidWord& w);
SingularBraidWord reverse(const SingularBraidWord& w);

BraidWord mirror(const BraidWord& w);

FramedBraidWord connected_sum(const FramedBraidWord& a, const FramedBraidWord& b);

BraidWord stabilize(const BraidWord& w, int sign);

}  // namespace yk

#endif
