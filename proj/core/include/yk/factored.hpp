#ifndef YK_FACTORED_HPP
#define YK_FACTORED_HPP

#include "yk/esystem.hpp"
#include "yk/laurent.hpp"

namespace yk {

// Specialization parameters a factored value is relative to.
struct TraceParams {
  int d = 1;
  std::vector<int> D{0};
  Rational E{1};

  static TraceParams from(const ESolution& sol) { return {sol.d, sol.D, sol.E}; }
  bool operator==(const TraceParams& o) const { return d == o.d && D == o.D && E == o.E; }
};

// mu = z - (q - q^-1) E, the numerator of lambda = mu / z.
MultiLaurent mu_polynomial(const Rational& E);

/*
  Canonically factored invariant value

      core(q, z) * z^{z_exp} * mu^{mu_exp} * s^{s_parity},   s^2 = lambda = mu/z.

  The core is mu-free with minimal z-degree 0; s powers are normalized into
  {0,1} via s^-1 = s/lambda. Two values with equal parameters are equal iff
  all four fields agree.
*/
class FactoredValue {
public:
  FactoredValue() = default;

  static FactoredValue factor(MultiLaurent raw, long z_shift, long mu_shift, int parity,
                              TraceParams params);
  static FactoredValue one(TraceParams params);

  const MultiLaurent& core() const { return core_; }
  long z_exp() const { return z_exp_; }
  long mu_exp() const { return mu_exp_; }
  int s_parity() const { return s_parity_; }
  const TraceParams& params() const { return params_; }
  bool is_zero() const { return core_.is_zero(); }

  // Multiply by z^dz mu^dmu s^dp (dp >= 0), folding s^2 into lambda.
  FactoredValue& mul_monomial(long dz, long dmu, int dp);
  // Multiply the core by a polynomial in (q, z); the result is re-factored.
  FactoredValue& scale(const MultiLaurent& c);
  FactoredValue& scale(const Rational& r) { return scale(MultiLaurent::constant(r)); }

  friend FactoredValue operator+(const FactoredValue& a, const FactoredValue& b);
  friend FactoredValue operator-(const FactoredValue& a, const FactoredValue& b);
  friend FactoredValue operator*(const FactoredValue& a, const FactoredValue& b);

  // core * z^{z_exp + z_lift} * mu^{mu_exp + mu_lift}; the lifted mu power
  // must be nonnegative (z stays Laurent).
  MultiLaurent expanded(long mu_lift = 0, long z_lift = 0) const;

  bool operator==(const FactoredValue& o) const;
  bool operator!=(const FactoredValue& o) const { return !(*this == o); }

  std::string str() const;

private:
  MultiLaurent core_;
  long z_exp_ = 0, mu_exp_ = 0;
  int s_parity_ = 0;
  TraceParams params_;
};

/*
  The same value written in the variables (q, lambda):

      num(q, lambda) / ((1-lambda)^a (q-q^-1)^b) * s^{parity},

  canonical when num is divisible by neither denominator factor while the
  corresponding exponent is positive. Negative lambda powers stay in num.
*/
struct LambdaForm {
  MultiLaurent num;  // vars (q, lambda)
  long den_one_minus_lambda = 0;
  long den_qdiff = 0;
  int s_parity = 0;
  TraceParams params;

  void canonicalize();
  // Field equality in (q, lambda, s); parameters are not compared.
  bool same_function(const LambdaForm& o) const;
  std::string str() const;
};

LambdaForm to_lambda_form(const FactoredValue& v);
FactoredValue from_lambda_form(const LambdaForm& f);

// q -> q^-1, lambda -> lambda^-1 on a lambda-form value (sqrt(lambda)
// follows as s -> s/lambda).
LambdaForm mirror_lambda(const LambdaForm& f);

}  // namespace yk

#endif
