#ifndef YK_ALGEBRA_HPP
#define YK_ALGEBRA_HPP

#include <cstdint>
#include <map>

#include "yk/braid.hpp"
#include "yk/laurent.hpp"

namespace yk {

/*
  Basis monomial t_1^{k_1}...t_n^{k_n} g_w of Y_{d,n}(q): residue framings
  plus the permutation w. The braid part of the inductive basis word
  w = run_1 ... run_{n-1}, where run_l is either empty or the descending
  block g_l g_{l-1} ... g_i, is determined by the permutation, so only the
  permutation is stored; run_word() recovers the reduced word.
*/
class YMonomial {
public:
  YMonomial(std::vector<int> framings, Permutation perm);
  static YMonomial one(int n);

  int strands() const { return static_cast<int>(framings_.size()); }
  const std::vector<int>& framings() const { return framings_; }
  const Permutation& perm() const { return perm_; }

  // Generator indices of the inductive-basis word, leftmost first.
  std::vector<int> run_word() const;

  auto operator<=>(const YMonomial&) const = default;
  bool operator==(const YMonomial&) const = default;

  std::string str() const;  // canonical, used as the memo key

private:
  std::vector<int> framings_;
  Permutation perm_;
};

struct AlgebraStats {
  std::uint64_t quadratic_firings = 0;
};

/*
  Element of Y_{d,n}(q): a linear combination of basis monomials with
  Laurent-polynomial coefficients in q. All rewriting happens in the
  right-multiplication routines; elements are always in normal form.
*/
class YElement {
public:
  YElement(int d, int n) : d_(d), n_(n) {
    if (d < 1 || n < 1) throw Error("YElement: d and n must be >= 1");
  }
  static YElement identity(int d, int n);
  static YElement zero(int d, int n) { return YElement(d, n); }

  int d() const { return d_; }
  int strands() const { return n_; }
  const std::map<YMonomial, MultiLaurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const YMonomial& m, const MultiLaurent& coeff);
  YElement& operator+=(const YElement& o);
  YElement& operator-=(const YElement& o);
  friend YElement operator+(YElement a, const YElement& b) { return a += b; }
  friend YElement operator-(YElement a, const YElement& b) { return a -= b; }
  YElement& scale(const MultiLaurent& c);
  YElement& scale(const Rational& r) { return scale(MultiLaurent::constant(r)); }

  // Right multiplication by t_j^k.
  YElement right_mul_t(int j, long k) const;
  // Right multiplication by g_j (positive generator); fires the quadratic
  // relation on length-decreasing permutations.
  YElement right_mul_g(int j, AlgebraStats* stats = nullptr) const;

  bool operator==(const YElement& o) const;
  std::string str() const;

private:
  int d_, n_;
  std::map<YMonomial, MultiLaurent> terms_;
};

YElement multiply(const YElement& a, const YElement& b, AlgebraStats* stats = nullptr);

// Closed form of g_i^r from the power formula (inverse relation for r < 0).
YElement gen_g(int d, int n, int i, long r);

// e_i = (1/d) sum_s t_i^s t_{i+1}^{-s}.
YElement idempotent_e(int d, int n, int i);

enum class MapKind { gamma_framed, delta_classical, eta_singular };

struct EmbedOptions {
  bool use_power_formula = true;
};

YElement embed(const FramedBraidWord& w, int d, EmbedOptions opts = {},
               AlgebraStats* stats = nullptr);
YElement embed(const BraidWord& w, int d, EmbedOptions opts = {},
               AlgebraStats* stats = nullptr);
YElement embed(const SingularBraidWord& w, int d, EmbedOptions opts = {},
               AlgebraStats* stats = nullptr);

// All n! d^n basis monomials; guarded against blowup.
std::vector<YMonomial> enumerate_basis(int d, int n);

}  // namespace yk

#endif
