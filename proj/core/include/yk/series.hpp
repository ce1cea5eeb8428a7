#ifndef YK_SERIES_HPP
#define YK_SERIES_HPP

#include "yk/laurent.hpp"

namespace yk {

/*
  Power series in h truncated at a fixed order N: coefficients c_0..c_N are
  polynomials in the remaining variables. All arithmetic drops terms of
  order > N.
*/
class TruncatedSeries {
public:
  explicit TruncatedSeries(int order)
      : c_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw Error("TruncatedSeries: order must be >= 0");
  }
  static TruncatedSeries constant(int order, const MultiLaurent& c);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const MultiLaurent& coeff(int j) const { return c_[static_cast<std::size_t>(j)]; }
  MultiLaurent& coeff(int j) { return c_[static_cast<std::size_t>(j)]; }
  // Smallest j with c_j != 0, or order()+1 for the zero series.
  int valuation() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
  TruncatedSeries& scale(const MultiLaurent& c);
  TruncatedSeries pow(long e) const;  // e >= 0

  bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }
  std::string str() const;

private:
  std::vector<MultiLaurent> c_;  // c_[j] multiplies h^j
};

// Substitutes q = e^h into a polynomial: q^k contributes (k h)^j / j! to
// order j. Remaining variables stay in the coefficients.
TruncatedSeries series_exp_substitution(const MultiLaurent& p, int order);

// (1 + u)^beta truncated, for a series u of valuation >= 1 and rational
// beta (binomial series; exact rational binomial coefficients).
TruncatedSeries binomial_series(const TruncatedSeries& u, const Rational& beta);

}  // namespace yk

#endif
