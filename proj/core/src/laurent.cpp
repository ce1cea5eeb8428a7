#include "yk/laurent.hpp"

#include <algorithm>
#include <numeric>

namespace yk {

std::string Var::name() const {
  if (code == 0) return "q";
  if (code == 1) return "z";
  if (code == 1000) return "lambda";
  if (code == 1001) return "h";
  return "x" + std::to_string(code - 1);
}

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  long sa = std::accumulate(a.begin(), a.end(), 0L);
  long sb = std::accumulate(b.begin(), b.end(), 0L);
  if (sa != sb) return sa < sb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiLaurent::MultiLaurent(std::vector<Var> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

MultiLaurent MultiLaurent::constant(const Cyclotomic& c) {
  MultiLaurent p;
  if (!c.is_zero()) p.terms_.emplace(Exponents{}, c);
  return p;
}

MultiLaurent MultiLaurent::variable(Var v, int exp) {
  MultiLaurent p(std::vector<Var>{v});
  if (exp == 0) return constant(Rational(1));
  p.terms_.emplace(Exponents{exp}, Cyclotomic(Rational(1)));
  return p;
}

MultiLaurent MultiLaurent::monomial(std::vector<Var> vars, Exponents exps, Cyclotomic coeff) {
  MultiLaurent p(std::move(vars));
  if (exps.size() != p.vars_.size()) throw Error("monomial: exponent arity mismatch");
  if (!coeff.is_zero()) p.terms_.emplace(std::move(exps), std::move(coeff));
  return p;
}

bool MultiLaurent::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Cyclotomic MultiLaurent::constant_value() const {
  Exponents zero(vars_.size(), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? Cyclotomic() : it->second;
}

std::optional<std::size_t> MultiLaurent::var_pos(Var v) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || !(*it == v)) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

int MultiLaurent::min_exponent(Var v) const {
  auto p = var_pos(v);
  if (!p || terms_.empty()) return 0;
  int m = terms_.begin()->first[*p];
  for (const auto& [e, c] : terms_) m = std::min(m, e[*p]);
  return m;
}

int MultiLaurent::max_exponent(Var v) const {
  auto p = var_pos(v);
  if (!p || terms_.empty()) return 0;
  int m = terms_.begin()->first[*p];
  for (const auto& [e, c] : terms_) m = std::max(m, e[*p]);
  return m;
}

std::vector<Var> MultiLaurent::var_union(const std::vector<Var>& a, const std::vector<Var>& b) {
  std::vector<Var> u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

MultiLaurent MultiLaurent::with_vars(const std::vector<Var>& target) const {
  if (target == vars_) return *this;
  MultiLaurent out(target);
  std::vector<int> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::lower_bound(out.vars_.begin(), out.vars_.end(), vars_[i]);
    if (it == out.vars_.end() || !(*it == vars_[i]))
      throw Error("with_vars: target list does not contain " + vars_[i].name());
    map[i] = static_cast<int>(it - out.vars_.begin());
  }
  for (const auto& [e, c] : terms_) {
    Exponents ne(out.vars_.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[static_cast<std::size_t>(map[i])] = e[i];
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

void MultiLaurent::insert_term(const Exponents& e, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiLaurent MultiLaurent::operator-() const {
  MultiLaurent out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& o) {
  if (vars_ != o.vars_) {
    auto u = var_union(vars_, o.vars_);
    *this = with_vars(u);
    MultiLaurent rhs = o.with_vars(u);
    for (const auto& [e, c] : rhs.terms_) insert_term(e, c);
    return *this;
  }
  for (const auto& [e, c] : o.terms_) insert_term(e, c);
  return *this;
}

MultiLaurent& MultiLaurent::operator-=(const MultiLaurent& o) { return *this += -o; }

MultiLaurent& MultiLaurent::operator*=(const MultiLaurent& o) {
  if (vars_ != o.vars_) {
    auto u = var_union(vars_, o.vars_);
    *this = with_vars(u);
    return *this *= o.with_vars(u);
  }
  MultiLaurent out(vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.insert_term(e, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

MultiLaurent& MultiLaurent::scale(const Cyclotomic& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MultiLaurent& MultiLaurent::shift(Var v, int delta) {
  if (delta == 0) return *this;
  if (!has_var(v)) {
    auto u = var_union(vars_, {v});
    *this = with_vars(u);
  }
  std::size_t p = *var_pos(v);
  std::map<Exponents, Cyclotomic, GradedLex> moved;
  for (auto& [e, c] : terms_) {
    Exponents ne = e;
    ne[p] += delta;
    moved.emplace(std::move(ne), std::move(c));
  }
  terms_ = std::move(moved);
  return *this;
}

MultiLaurent MultiLaurent::pow(long e) const {
  if (e < 0) {
    if (terms_.size() != 1) throw Error("pow: negative power of a non-monomial");
    const auto& [exps, c] = *terms_.begin();
    if (!c.is_rational()) throw Error("pow: negative power needs a rational coefficient");
    Exponents ne(exps.size());
    for (std::size_t i = 0; i < ne.size(); ++i) {
      long v = static_cast<long>(exps[i]) * e;
      ne[i] = static_cast<int>(v);
    }
    return monomial(vars_, ne, Cyclotomic(rational_pow(c.to_rational(), e)));
  }
  MultiLaurent acc = constant(Rational(1));
  MultiLaurent b = *this;
  while (e > 0) {
    if (e & 1) acc *= b;
    if ((e >>= 1)) b *= b;
  }
  return acc;
}

MultiLaurent MultiLaurent::substitute(Var v, const MultiLaurent& value) const {
  auto p = var_pos(v);
  if (!p) throw Error("substitute: variable " + v.name() + " not present");
  std::vector<Var> rest;
  for (const auto& w : vars_)
    if (!(w == v)) rest.push_back(w);

  const int lo = min_exponent(v);
  if (lo < 0 && (value.terms_.size() != 1 ||
                 !value.terms_.begin()->second.is_rational()))
    throw Error("substitute: negative exponents need an invertible monomial value");

  MultiLaurent out(rest);
  // Group by the exponent of v and accumulate coeff * value^k.
  std::map<int, MultiLaurent> groups;
  for (const auto& [e, c] : terms_) {
    Exponents re;
    re.reserve(rest.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != *p) re.push_back(e[i]);
    auto [it, fresh] = groups.emplace(e[*p], MultiLaurent(rest));
    it->second.insert_term(re, c);
  }
  for (auto& [k, g] : groups) out += g * value.pow(k);
  return out;
}

MultiLaurent MultiLaurent::substitute(Var v, const Cyclotomic& value) const {
  return substitute(v, MultiLaurent::constant(value));
}

MultiLaurent MultiLaurent::coefficient_of(Var v, int e) const {
  auto p = var_pos(v);
  if (!p) {
    if (e == 0) return *this;
    return MultiLaurent(vars_);
  }
  std::vector<Var> rest;
  for (const auto& w : vars_)
    if (!(w == v)) rest.push_back(w);
  MultiLaurent out(rest);
  for (const auto& [exps, c] : terms_) {
    if (exps[*p] != e) continue;
    Exponents re;
    re.reserve(rest.size());
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (i != *p) re.push_back(exps[i]);
    out.insert_term(re, c);
  }
  return out;
}

std::optional<MultiLaurent> MultiLaurent::exact_divide(const MultiLaurent& divisor,
                                                       Var main) const {
  if (divisor.is_zero()) throw Error("exact_divide: zero divisor");
  if (is_zero()) return MultiLaurent(vars_);

  auto u = var_union(vars_, divisor.vars_);
  if (std::find(u.begin(), u.end(), main) == u.end())
    throw Error("exact_divide: main variable absent");
  MultiLaurent num = with_vars(u);
  MultiLaurent den = divisor.with_vars(u);

  // Shift both to ordinary polynomials in `main`.
  const int num_lo = num.min_exponent(main);
  const int den_lo = den.min_exponent(main);
  num.shift(main, -num_lo);
  den.shift(main, -den_lo);

  const int dden = den.max_exponent(main);
  MultiLaurent lead = den.coefficient_of(main, dden);
  if (!lead.is_constant())
    throw Error("exact_divide: divisor leading coefficient is not constant");
  const Cyclotomic lc = lead.constant_value();
  if (!lc.is_rational()) throw Error("exact_divide: non-rational leading coefficient");
  const Rational inv_lc = Rational(1) / lc.to_rational();

  MultiLaurent quotient(u);
  int dn = num.max_exponent(main);
  while (!num.is_zero() && (dn = num.max_exponent(main)) >= dden) {
    MultiLaurent t = num.coefficient_of(main, dn);
    t.scale(inv_lc);
    MultiLaurent term = t.with_vars(u);
    term.shift(main, dn - dden);
    quotient += term;
    num -= term * den;
    if (!num.is_zero() && num.max_exponent(main) >= dn)
      throw Error("exact_divide: no progress");
  }
  if (!num.is_zero()) return std::nullopt;
  quotient.shift(main, num_lo - den_lo);
  return quotient;
}

bool MultiLaurent::operator==(const MultiLaurent& o) const {
  if (vars_ == o.vars_) return terms_ == o.terms_;
  auto u = var_union(vars_, o.vars_);
  return with_vars(u).terms_ == o.with_vars(u).terms_;
}

std::string MultiLaurent::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string varpart;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!varpart.empty()) varpart += " ";
      varpart += vars_[i].name();
      if (e[i] != 1) varpart += "^" + std::to_string(e[i]);
    }
    std::string cs = c.str();
    std::string term;
    if (varpart.empty()) {
      term = cs;
    } else if (cs == "1") {
      term = varpart;
    } else if (cs == "-1") {
      term = "-" + varpart;
    } else {
      term = cs + " " + varpart;
    }
    if (first) {
      out = term;
      first = false;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

MultiLaurent alternating_q_sum(int n) {
  MultiLaurent p(std::vector<Var>{Var::q()});
  for (int j = 0; j < n; ++j)
    p += MultiLaurent::monomial({Var::q()}, {n - 1 - 2 * j},
                                Cyclotomic(Rational(j % 2 ? -1 : 1)));
  return p;
}

MultiLaurent q_minus_qinv() {
  return MultiLaurent::variable(Var::q(), 1) - MultiLaurent::variable(Var::q(), -1);
}

}  // namespace yk
