#include "yk/series.hpp"

namespace yk {

TruncatedSeries TruncatedSeries::constant(int order, const MultiLaurent& c) {
  TruncatedSeries s(order);
  s.c_[0] = c;
  return s;
}

int TruncatedSeries::valuation() const {
  for (std::size_t j = 0; j < c_.size(); ++j)
    if (!c_[j].is_zero()) return static_cast<int>(j);
  return order() + 1;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (order() != o.order()) throw Error("TruncatedSeries: order mismatch");
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  if (order() != o.order()) throw Error("TruncatedSeries: order mismatch");
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
  if (order() != o.order()) throw Error("TruncatedSeries: order mismatch");
  TruncatedSeries out(order());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      out.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  *this = std::move(out);
  return *this;
}

TruncatedSeries& TruncatedSeries::scale(const MultiLaurent& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

TruncatedSeries TruncatedSeries::pow(long e) const {
  if (e < 0) throw Error("TruncatedSeries: negative power");
  TruncatedSeries acc = constant(order(), MultiLaurent::constant(Rational(1)));
  TruncatedSeries b = *this;
  while (e > 0) {
    if (e & 1) acc *= b;
    if ((e >>= 1)) b *= b;
  }
  return acc;
}

std::string TruncatedSeries::str() const {
  std::string out;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (j) out += " + ";
    out += "(" + c_[j].str() + ") h^" + std::to_string(j);
  }
  return out;
}

TruncatedSeries series_exp_substitution(const MultiLaurent& p, int order) {
  if (!p.has_var(Var::q())) {
    TruncatedSeries s(order);
    s.coeff(0) = p;
    return s;
  }
  TruncatedSeries s(order);
  const int lo = p.min_exponent(Var::q());
  const int hi = p.max_exponent(Var::q());
  for (int k = lo; k <= hi; ++k) {
    MultiLaurent rest = p.coefficient_of(Var::q(), k);
    if (rest.is_zero()) continue;
    Rational power(1), factorial(1);
    for (int j = 0; j <= order; ++j) {
      if (j > 0) {
        power *= k;
        factorial *= j;
      }
      MultiLaurent c = rest;
      c.scale(power / factorial);
      s.coeff(j) += c;
    }
  }
  return s;
}

TruncatedSeries binomial_series(const TruncatedSeries& u, const Rational& beta) {
  if (u.valuation() < 1)
    throw Error("binomial_series: series must have zero constant term");
  const int n = u.order();
  TruncatedSeries out = TruncatedSeries::constant(n, MultiLaurent::constant(Rational(1)));
  TruncatedSeries upow = out;
  Rational binom(1);
  for (int t = 1; t <= n; ++t) {
    upow *= u;
    binom *= (beta - Rational(t - 1)) / Rational(t);
    TruncatedSeries term = upow;
    term.scale(MultiLaurent::constant(binom));
    out += term;
  }
  return out;
}

}  // namespace yk
