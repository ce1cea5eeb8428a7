#ifndef YK_LAURENT_HPP
#define YK_LAURENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "yk/cyclotomic.hpp"

namespace yk {

/*
  Variables of the polynomial ring. The numeric codes fix the canonical
  ordering used both for exponent tuples and for serialization:
  q < z < x_1 < x_2 < ... < lambda < h.
*/
struct Var {
  int code;

  static Var q() { return {0}; }
  static Var z() { return {1}; }
  static Var x(int k) { return {1 + k}; }  // k >= 1
  static Var lambda() { return {1000}; }
  static Var h() { return {1001}; }

  bool is_x() const { return code >= 2 && code < 1000; }
  int x_index() const { return code - 1; }
  std::string name() const;

  auto operator<=>(const Var&) const = default;
};

using Exponents = std::vector<int>;

// Graded lexicographic order on exponent tuples: total degree first, then
// entrywise comparison. This is the canonical monomial order everywhere.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/*
  Sparse multivariate Laurent polynomial over the cyclotomic/rational
  coefficient tower. A polynomial carries an ordered variable list; binary
  operations align the two variable lists to their union. No zero
  coefficients are stored; exponent tuples are unique by construction.
  Negative exponents are allowed (q and z use them); x_k and h never
  receive negative exponents from any operation in this project.
*/
class MultiLaurent {
public:
  MultiLaurent() = default;
  explicit MultiLaurent(std::vector<Var> vars);

  static MultiLaurent constant(const Cyclotomic& c);
  static MultiLaurent constant(const Rational& r) { return constant(Cyclotomic(r)); }
  static MultiLaurent variable(Var v, int exp = 1);
  static MultiLaurent monomial(std::vector<Var> vars, Exponents exps, Cyclotomic coeff);

  const std::vector<Var>& vars() const { return vars_; }
  const std::map<Exponents, Cyclotomic, GradedLex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Cyclotomic constant_value() const;  // the coefficient of the zero tuple
  std::size_t term_count() const { return terms_.size(); }

  bool has_var(Var v) const { return var_pos(v).has_value(); }
  int min_exponent(Var v) const;  // 0 when v absent or zero polynomial
  int max_exponent(Var v) const;

  MultiLaurent operator-() const;
  MultiLaurent& operator+=(const MultiLaurent& o);
  MultiLaurent& operator-=(const MultiLaurent& o);
  MultiLaurent& operator*=(const MultiLaurent& o);
  friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) { return a += b; }
  friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) { return a -= b; }
  friend MultiLaurent operator*(MultiLaurent a, const MultiLaurent& b) { return a *= b; }

  MultiLaurent& scale(const Cyclotomic& c);
  MultiLaurent& scale(const Rational& r) { return scale(Cyclotomic(r)); }
  // Multiply by v^delta.
  MultiLaurent& shift(Var v, int delta);
  MultiLaurent pow(long e) const;  // e < 0 requires a single invertible term

  // Replace every occurrence of v by the given polynomial. If v occurs with
  // a negative exponent the replacement must be a single-term monomial with
  // rational coefficient. Substituting a variable absent from the variable
  // list is an error.
  MultiLaurent substitute(Var v, const MultiLaurent& value) const;
  MultiLaurent substitute(Var v, const Cyclotomic& value) const;

  // Exact division, treating both sides as polynomials in `main` whose
  // leading coefficient in the divisor is a nonzero constant. Returns
  // nothing when the division leaves a remainder.
  std::optional<MultiLaurent> exact_divide(const MultiLaurent& divisor, Var main) const;

  // Coefficient of v^e, as a polynomial with v removed from the list.
  MultiLaurent coefficient_of(Var v, int e) const;

  bool operator==(const MultiLaurent& o) const;
  bool operator!=(const MultiLaurent& o) const { return !(*this == o); }

  // Canonical, byte-stable serialization. Terms in graded-lex order.
  std::string str() const;

  // Rewrites onto the union variable list (used before mixed-list ops).
  MultiLaurent with_vars(const std::vector<Var>& target) const;

private:
  std::optional<std::size_t> var_pos(Var v) const;
  void insert_term(const Exponents& e, const Cyclotomic& c);
  static std::vector<Var> var_union(const std::vector<Var>& a, const std::vector<Var>& b);

  std::vector<Var> vars_;  // strictly ascending
  std::map<Exponents, Cyclotomic, GradedLex> terms_;
};

// (q^N - (-1)^N q^-N) / (q + q^-1) expanded as a Laurent polynomial in q:
// the alternating sum q^{N-1} - q^{N-3} + ... with N terms. These are the
// coefficient blocks of the power formula for g_i^r.
MultiLaurent alternating_q_sum(int n);

// q - q^-1 over the rationals.
MultiLaurent q_minus_qinv();

}  // namespace yk

#endif
