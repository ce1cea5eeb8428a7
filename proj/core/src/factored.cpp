#include "yk/factored.hpp"

namespace yk {

MultiLaurent mu_polynomial(const Rational& E) {
  MultiLaurent qd = q_minus_qinv();
  qd.scale(E);
  return MultiLaurent::variable(Var::z()) - qd;
}

FactoredValue FactoredValue::one(TraceParams params) {
  FactoredValue v;
  v.core_ = MultiLaurent::constant(Rational(1));
  v.params_ = std::move(params);
  return v;
}

FactoredValue FactoredValue::factor(MultiLaurent raw, long z_shift, long mu_shift,
                                    int parity, TraceParams params) {
  for (const auto& v : raw.vars())
    if (!(v == Var::q()) && !(v == Var::z()) &&
        (raw.max_exponent(v) != 0 || raw.min_exponent(v) != 0))
      throw Error("FactoredValue: value must live in (q, z)");
  FactoredValue out;
  out.params_ = std::move(params);
  out.s_parity_ = ((parity % 2) + 2) % 2;
  if (raw.is_zero()) return out;

  long z_exp = z_shift, mu_exp = mu_shift;
  const int lo = raw.min_exponent(Var::z());
  if (lo != 0) {
    raw.shift(Var::z(), -lo);
    z_exp += lo;
  }
  const MultiLaurent mu = mu_polynomial(out.params_.E);
  while (true) {
    auto q = raw.exact_divide(mu, Var::z());
    if (!q) break;
    raw = std::move(*q);
    ++mu_exp;
  }
  out.core_ = std::move(raw);
  out.z_exp_ = z_exp;
  out.mu_exp_ = mu_exp;
  return out;
}

FactoredValue& FactoredValue::mul_monomial(long dz, long dmu, int dp) {
  if (is_zero()) return *this;
  z_exp_ += dz;
  mu_exp_ += dmu;
  s_parity_ += dp;
  while (s_parity_ >= 2) {  // s^2 = lambda = mu / z
    s_parity_ -= 2;
    ++mu_exp_;
    --z_exp_;
  }
  return *this;
}

FactoredValue& FactoredValue::scale(const MultiLaurent& c) {
  *this = factor(core_ * c, z_exp_, mu_exp_, s_parity_, params_);
  return *this;
}

FactoredValue operator+(const FactoredValue& a, const FactoredValue& b) {
  if (!(a.params_ == b.params_)) throw Error("FactoredValue: parameter mismatch in +");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.s_parity_ != b.s_parity_)
    throw Error("FactoredValue: cannot add values of different s-parity");
  const long z = std::min(a.z_exp_, b.z_exp_);
  const long m = std::min(a.mu_exp_, b.mu_exp_);
  const MultiLaurent mu = mu_polynomial(a.params_.E);
  MultiLaurent ea = a.core_ * mu.pow(a.mu_exp_ - m);
  ea.shift(Var::z(), static_cast<int>(a.z_exp_ - z));
  MultiLaurent eb = b.core_ * mu.pow(b.mu_exp_ - m);
  eb.shift(Var::z(), static_cast<int>(b.z_exp_ - z));
  return FactoredValue::factor(ea + eb, z, m, a.s_parity_, a.params_);
}

FactoredValue operator-(const FactoredValue& a, const FactoredValue& b) {
  FactoredValue nb = b;
  nb.scale(Rational(-1));
  return a + nb;
}

FactoredValue operator*(const FactoredValue& a, const FactoredValue& b) {
  if (!(a.params_ == b.params_)) throw Error("FactoredValue: parameter mismatch in *");
  FactoredValue out = FactoredValue::factor(a.core_ * b.core_, a.z_exp_ + b.z_exp_,
                                            a.mu_exp_ + b.mu_exp_, 0, a.params_);
  out.mul_monomial(0, 0, a.s_parity_ + b.s_parity_);
  return out;
}

MultiLaurent FactoredValue::expanded(long mu_lift, long z_lift) const {
  if (is_zero()) return MultiLaurent();
  const long mu_pow = mu_exp_ + mu_lift;
  if (mu_pow < 0) throw Error("FactoredValue::expanded: negative mu power");
  MultiLaurent out = core_ * mu_polynomial(params_.E).pow(mu_pow);
  out.shift(Var::z(), static_cast<int>(z_exp_ + z_lift));
  return out;
}

bool FactoredValue::operator==(const FactoredValue& o) const {
  if (!(params_ == o.params_)) return false;
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  return z_exp_ == o.z_exp_ && mu_exp_ == o.mu_exp_ && s_parity_ == o.s_parity_ &&
         core_ == o.core_;
}

std::string FactoredValue::str() const {
  std::string out = "(" + core_.str() + ")";
  if (z_exp_ != 0) out += " z" + (z_exp_ == 1 ? std::string() : "^" + std::to_string(z_exp_));
  if (mu_exp_ != 0) out += " mu" + (mu_exp_ == 1 ? std::string() : "^" + std::to_string(mu_exp_));
  if (s_parity_) out += " s";
  return out;
}

void LambdaForm::canonicalize() {
  if (num.is_zero()) {
    den_one_minus_lambda = 0;
    den_qdiff = 0;
    return;
  }
  const MultiLaurent oml =
      MultiLaurent::constant(Rational(1)) - MultiLaurent::variable(Var::lambda());
  while (den_one_minus_lambda > 0) {
    auto q = num.exact_divide(oml, Var::lambda());
    if (!q) break;
    num = std::move(*q);
    --den_one_minus_lambda;
  }
  const MultiLaurent qd = q_minus_qinv();
  while (den_qdiff > 0) {
    auto q = num.exact_divide(qd, Var::q());
    if (!q) break;
    num = std::move(*q);
    --den_qdiff;
  }
}

bool LambdaForm::same_function(const LambdaForm& o) const {
  LambdaForm a = *this, b = o;
  a.canonicalize();
  b.canonicalize();
  return a.s_parity == b.s_parity && a.den_one_minus_lambda == b.den_one_minus_lambda &&
         a.den_qdiff == b.den_qdiff && a.num == b.num;
}

std::string LambdaForm::str() const {
  std::string out = "(" + num.str() + ")";
  if (den_one_minus_lambda)
    out += " / (1-lambda)" + (den_one_minus_lambda == 1
                                  ? std::string()
                                  : "^" + std::to_string(den_one_minus_lambda));
  if (den_qdiff)
    out += " / (q-q^-1)" + (den_qdiff == 1 ? std::string() : "^" + std::to_string(den_qdiff));
  if (s_parity) out += " s";
  return out;
}

LambdaForm to_lambda_form(const FactoredValue& v) {
  LambdaForm out;
  out.params = v.params();
  out.s_parity = v.s_parity();
  if (v.is_zero()) {
    out.num = MultiLaurent();
    return out;
  }
  // z = c/(1-lambda) with c = (q-q^-1)E, mu = lambda c/(1-lambda).
  const MultiLaurent oml =
      MultiLaurent::constant(Rational(1)) - MultiLaurent::variable(Var::lambda());
  MultiLaurent c = q_minus_qinv();
  c.scale(v.params().E);

  const int top = v.core().is_zero() ? 0 : v.core().max_exponent(Var::z());
  MultiLaurent num;
  for (int k = 0; k <= top; ++k) {
    MultiLaurent ak = v.core().coefficient_of(Var::z(), k);
    if (ak.is_zero()) continue;
    num += ak * c.pow(k) * oml.pow(top - k);
  }
  const long m = v.z_exp() + v.mu_exp();
  if (m >= 0) {
    num *= c.pow(m);
  } else {
    out.den_qdiff += -m;
    num.scale(rational_pow(v.params().E, m));
  }
  num.shift(Var::lambda(), static_cast<int>(v.mu_exp()));
  long a = top + m;
  if (a < 0) {
    num *= oml.pow(-a);
    a = 0;
  }
  out.den_one_minus_lambda = a;
  out.num = std::move(num);
  out.canonicalize();
  return out;
}

FactoredValue from_lambda_form(const LambdaForm& f) {
  if (f.num.is_zero())
    return FactoredValue::factor(MultiLaurent(), 0, 0, f.s_parity, f.params);
  LambdaForm lf = f;
  lf.canonicalize();
  const int kmin = lf.num.has_var(Var::lambda()) ? lf.num.min_exponent(Var::lambda()) : 0;
  MultiLaurent shifted = lf.num;
  shifted.shift(Var::lambda(), -kmin);
  const MultiLaurent mu = mu_polynomial(lf.params.E);

  // lambda^k -> mu^k z^-k, then multiply by z^a and clear the denominators.
  MultiLaurent raw;
  const int top = shifted.max_exponent(Var::lambda());
  for (int k = 0; k <= top; ++k) {
    MultiLaurent bk = shifted.coefficient_of(Var::lambda(), k);
    if (bk.is_zero()) continue;
    MultiLaurent term = bk * mu.pow(k);
    term.shift(Var::z(), -k);
    raw += term;
  }
  raw.shift(Var::z(), static_cast<int>(lf.den_one_minus_lambda));
  const MultiLaurent qd = q_minus_qinv();
  for (long j = 0; j < lf.den_one_minus_lambda + lf.den_qdiff; ++j) {
    auto q = raw.exact_divide(qd, Var::q());
    if (!q) throw PropertyError("from_lambda_form: value is not in the polynomial image");
    raw = std::move(*q);
  }
  raw.scale(rational_pow(lf.params.E, -lf.den_one_minus_lambda));
  return FactoredValue::factor(std::move(raw), -kmin, kmin, lf.s_parity, lf.params);
}

LambdaForm mirror_lambda(const LambdaForm& f) {
  LambdaForm lf = f;
  lf.canonicalize();
  LambdaForm out;
  out.params = lf.params;
  out.s_parity = lf.s_parity;
  out.den_one_minus_lambda = lf.den_one_minus_lambda;
  out.den_qdiff = lf.den_qdiff;

  MultiLaurent num = lf.num;
  if (num.has_var(Var::q())) num = num.substitute(Var::q(), MultiLaurent::variable(Var::q(), -1));
  if (num.has_var(Var::lambda()))
    num = num.substitute(Var::lambda(), MultiLaurent::variable(Var::lambda(), -1));
  const long a = lf.den_one_minus_lambda, b = lf.den_qdiff;
  if ((a + b) % 2 != 0) num.scale(Rational(-1));
  num.shift(Var::lambda(), static_cast<int>(a - lf.s_parity));
  out.num = std::move(num);
  out.canonicalize();
  return out;
}

}  // namespace yk
