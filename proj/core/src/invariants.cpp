#include "yk/invariants.hpp"

namespace yk {

namespace {

TraceParams engine_params(const TraceEngine& engine) {
  if (!engine.specialization())
    throw Error("invariant: engine must be specialized at an E-system solution");
  return TraceParams::from(*engine.specialization());
}

// Lambda_D^{n-1} (sqrt(lambda))^epsilon tr, written into the factored form:
// with A = epsilon + n - 1 the prefactor is
// z^{-floor(A/2)} mu^{floor(A/2)-(n-1)} s^{A mod 2}.
FactoredValue normalized_value(const MultiLaurent& tr, int n, long eps, TraceParams params) {
  const long a = eps + n - 1;
  const long half = floor_div(a, 2);
  const int parity = static_cast<int>(((a % 2) + 2) % 2);
  return FactoredValue::factor(tr, -half, half - (n - 1), parity, std::move(params));
}

WordInfo info_of(const BraidWord& w) {
  return {w.strands(), exponent_sum(w), closure_components(w).count};
}
WordInfo info_of(const FramedBraidWord& w) {
  return {w.strands(), exponent_sum(w), closure_components(w.word()).count};
}
WordInfo info_of(const SingularBraidWord& w) {
  return {w.strands(), exponent_sum(w), closure_components(w).count};
}

}  // namespace

std::string kind_name(InvariantKind k) {
  switch (k) {
    case InvariantKind::phi: return "phi";
    case InvariantKind::theta: return "theta";
    case InvariantKind::homflypt: return "homflypt";
    case InvariantKind::psi: return "psi";
    case InvariantKind::transverse_m: return "m";
  }
  throw Error("kind_name: bad kind");
}

const FactoredValue& InvariantValue::factored() const {
  if (!std::holds_alternative<FactoredValue>(value))
    throw Error("InvariantValue: not a factored value");
  return std::get<FactoredValue>(value);
}

const MultiLaurent& InvariantValue::laurent() const {
  if (!std::holds_alternative<MultiLaurent>(value))
    throw Error("InvariantValue: not a plain Laurent value");
  return std::get<MultiLaurent>(value);
}

int InvariantValue::parity() const {
  if (std::holds_alternative<FactoredValue>(value))
    return std::get<FactoredValue>(value).s_parity();
  return -1;
}

std::string InvariantValue::value_str() const {
  if (std::holds_alternative<FactoredValue>(value))
    return std::get<FactoredValue>(value).str();
  return std::get<MultiLaurent>(value).str();
}

bool InvariantValue::operator==(const InvariantValue& o) const {
  if (kind != o.kind || d != o.d || !(D == o.D)) return false;
  if (std::holds_alternative<FactoredValue>(value))
    return std::holds_alternative<FactoredValue>(o.value) &&
           std::get<FactoredValue>(value) == std::get<FactoredValue>(o.value);
  return std::holds_alternative<MultiLaurent>(o.value) &&
         std::get<MultiLaurent>(value) == std::get<MultiLaurent>(o.value);
}

InvariantValue phi(TraceEngine& engine, const FramedBraidWord& w, TraceStrategy strategy) {
  TraceParams params = engine_params(engine);
  TraceResult tr = engine.trace_word(w, strategy);
  WordInfo info = info_of(w);
  InvariantValue out{InvariantKind::phi, engine.d(), engine.specialization()->D,
                     normalized_value(tr.value, info.strands, info.epsilon, params), info};
  return out;
}

InvariantValue theta(TraceEngine& engine, const BraidWord& w, TraceStrategy strategy) {
  TraceParams params = engine_params(engine);
  TraceResult tr = engine.trace_word(w, strategy);
  WordInfo info = info_of(w);
  InvariantValue out{InvariantKind::theta, engine.d(), engine.specialization()->D,
                     normalized_value(tr.value, info.strands, info.epsilon, params), info};
  return out;
}

InvariantValue homflypt(TraceEngine& engine, const BraidWord& w, TraceStrategy strategy) {
  if (engine.d() != 1) throw Error("homflypt: requires the d = 1 engine");
  InvariantValue out = theta(engine, w, strategy);
  out.kind = InvariantKind::homflypt;
  return out;
}

InvariantValue psi(TraceEngine& engine, const SingularBraidWord& w, TraceStrategy strategy) {
  TraceParams params = engine_params(engine);
  TraceResult tr = engine.trace_word(w, strategy);
  WordInfo info = info_of(w);
  InvariantValue out{InvariantKind::psi, engine.d(), engine.specialization()->D,
                     normalized_value(tr.value, info.strands, info.epsilon, params), info};
  return out;
}

InvariantValue transverse_m(TraceEngine& engine, const BraidWord& w, TraceStrategy strategy) {
  if (engine.specialization())
    throw Error("transverse_m: requires the generic-parameter engine");
  FramedBraidWord fw = to_transverse_framed(w);
  TraceResult tr = engine.trace_word(fw, strategy);
  MultiLaurent value = tr.value;
  value.shift(Var::z(), -(w.strands() - 1));
  InvariantValue out{InvariantKind::transverse_m, engine.d(), std::nullopt, std::move(value),
                     info_of(w)};
  return out;
}

InvariantValue phi(int d, const std::vector<int>& D, const FramedBraidWord& w) {
  TraceEngine engine(d, solve_esystem(d, D));
  return phi(engine, w);
}
InvariantValue theta(int d, const std::vector<int>& D, const BraidWord& w) {
  TraceEngine engine(d, solve_esystem(d, D));
  return theta(engine, w);
}
InvariantValue homflypt(const BraidWord& w) {
  TraceEngine engine(1, solve_esystem(1, {0}));
  return homflypt(engine, w);
}
InvariantValue psi(int d, const std::vector<int>& D, const SingularBraidWord& w) {
  TraceEngine engine(d, solve_esystem(d, D));
  return psi(engine, w);
}
InvariantValue transverse_m(int d, const BraidWord& w) {
  TraceEngine engine(d);
  return transverse_m(engine, w);
}

FactoredValue skein_residual_framed(TraceEngine& engine, const FramedBraidWord& beta, int i) {
  if (i < 1 || i > beta.strands() - 1) throw Error("skein_residual_framed: bad index");
  const int d = engine.d();
  const Permutation pi = permutation(beta.word());

  auto append_sigma = [&](long e) {
    auto letters = beta.word().letters();
    letters.push_back({i, e});
    return FramedBraidWord(beta.framings(), BraidWord(beta.strands(), std::move(letters)));
  };
  auto append_framings = [&](long s) {
    // beta t_i^s t_{i+1}^{d-s} in split form: the framings transport through
    // the braid part onto the strands pi(i), pi(i+1).
    auto framings = beta.framings();
    framings[static_cast<std::size_t>(pi.apply(i) - 1)] += s;
    framings[static_cast<std::size_t>(pi.apply(i + 1) - 1)] += d - s;
    return FramedBraidWord(std::move(framings), beta.word());
  };

  // (1/s) Phi(L+) - s Phi(L-) - ((q-q^-1)/d) sum_s Phi(L_s);  1/s = z mu^-1 s.
  FactoredValue lhs = phi(engine, append_sigma(1)).factored();
  lhs.mul_monomial(1, -1, 1);
  FactoredValue minus = phi(engine, append_sigma(-1)).factored();
  minus.mul_monomial(0, 0, 1);
  lhs = lhs - minus;

  FactoredValue sum;
  for (int s = 0; s < d; ++s) {
    FactoredValue term = phi(engine, append_framings(s)).factored();
    sum = s == 0 ? term : sum + term;
  }
  MultiLaurent weight = q_minus_qinv();
  weight.scale(Rational(1, d));
  sum.scale(weight);
  return lhs - sum;
}

FactoredValue skein_residual_singular(TraceEngine& engine, const SingularBraidWord& base,
                                      std::size_t pos, int i) {
  if (i < 1 || i > base.strands() - 1) throw Error("skein_residual_singular: bad index");
  if (pos > base.letters().size()) throw Error("skein_residual_singular: bad position");

  auto insert = [&](long e, bool singular) {
    auto letters = base.letters();
    letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(pos), {i, e, singular});
    return SingularBraidWord(base.strands(), std::move(letters));
  };

  // (1/s) Psi(L+) - s Psi(L-) - ((q-q^-1)/s) Psi(Lx).
  FactoredValue lhs = psi(engine, insert(1, false)).factored();
  lhs.mul_monomial(1, -1, 1);
  FactoredValue minus = psi(engine, insert(-1, false)).factored();
  minus.mul_monomial(0, 0, 1);
  lhs = lhs - minus;

  FactoredValue cross = psi(engine, insert(1, true)).factored();
  cross.mul_monomial(1, -1, 1);
  cross.scale(q_minus_qinv());
  return lhs - cross;
}

InvariantValue mirror_transform(const InvariantValue& v) {
  if (v.kind != InvariantKind::theta && v.kind != InvariantKind::homflypt)
    throw Error("mirror_transform: defined for theta and homflypt only");
  LambdaForm lf = to_lambda_form(v.factored());
  FactoredValue mirrored = from_lambda_form(mirror_lambda(lf));
  InvariantValue out = v;
  out.value = std::move(mirrored);
  out.info.epsilon = -v.info.epsilon;
  return out;
}

ThetaComparison compare_theta_homflypt(const BraidWord& w, int d, const std::vector<int>& D) {
  ThetaComparison out;
  out.components = closure_components(w).count;
  out.knot = out.components == 1;

  const FactoredValue th = theta(d, D, w).factored();
  const FactoredValue p = homflypt(w).factored();
  const Rational E = th.params().E;

  // (q, z) route: Theta(q,z) = P(q, z/E_D) iff
  // N1 mu_D^{a2} = N2(q, z/E) E^{a2} mu_D^{a1}, with a_i clearing the mu
  // denominators (mu_H(q, z/E) = mu_D / E collapses both sides onto mu_D).
  if (th.s_parity() != p.s_parity()) {
    out.equal_qz = false;
  } else {
    const long a1 = std::max(0L, -th.mu_exp());
    const long a2 = std::max(0L, -p.mu_exp());
    MultiLaurent n1 = th.expanded(a1);
    MultiLaurent n2 = p.expanded(a2);
    MultiLaurent zsub = MultiLaurent::variable(Var::z());
    zsub.scale(Rational(1) / E);
    if (n2.has_var(Var::z())) n2 = n2.substitute(Var::z(), zsub);
    n2.scale(rational_pow(E, a2));
    const MultiLaurent mu = mu_polynomial(E);
    out.equal_qz = n1 * mu.pow(a2) == n2 * mu.pow(a1);
  }

  out.equal_qlambda = to_lambda_form(th).same_function(to_lambda_form(p));
  return out;
}

FramedBraidWord juxtapose(const std::vector<FramedBraidWord>& parts) {
  if (parts.empty()) throw Error("juxtapose: no parts");
  int total = 0;
  for (const auto& p : parts) total += p.strands();
  std::vector<long> framings;
  std::vector<BraidLetter> letters;
  int base = 0;
  for (const auto& p : parts) {
    framings.insert(framings.end(), p.framings().begin(), p.framings().end());
    for (const auto& l : p.word().letters()) letters.push_back({l.index + base, l.exponent});
    base += p.strands();
  }
  return FramedBraidWord(std::move(framings), BraidWord(total, std::move(letters)));
}

bool split_product_check(TraceEngine& engine, const std::vector<FramedBraidWord>& parts) {
  return split_product_check(engine, juxtapose(parts), parts);
}

bool split_product_check(TraceEngine& engine, const FramedBraidWord& combined,
                         const std::vector<FramedBraidWord>& parts) {
  if (!(combined == juxtapose(parts)))
    throw Error("split_product_check: combined word is not the juxtaposition of the parts");
  FactoredValue left = phi(engine, combined).factored();
  FactoredValue right = FactoredValue::one(engine_params(engine));
  for (const auto& p : parts) right = right * phi(engine, p).factored();
  // Lambda^{m-1} = (mu^-1 s)^{m-1}
  right.mul_monomial(0, -(static_cast<long>(parts.size()) - 1),
                     static_cast<int>(parts.size()) - 1);
  return left == right;
}

TruncatedSeries h_series(const FactoredValue& v, int order) {
  TruncatedSeries s = series_exp_substitution(v.core(), order);
  const long zpow = v.z_exp() + v.mu_exp();
  for (int j = 0; j <= order; ++j)
    if (!s.coeff(j).is_zero()) s.coeff(j).shift(Var::z(), static_cast<int>(zpow));

  // mu^b s^p = z^b (1+u)^{b + p/2} with u = lambda - 1 = -(q-q^-1) E / z.
  TruncatedSeries u = series_exp_substitution(q_minus_qinv(), order);
  MultiLaurent scale = MultiLaurent::variable(Var::z(), -1);
  scale.scale(-v.params().E);
  u.scale(scale);
  const Rational beta = Rational(2 * v.mu_exp() + v.s_parity(), 2);
  s *= binomial_series(u, beta);
  return s;
}

TruncatedSeries vassiliev_coefficients(TraceEngine& engine, const SingularBraidWord& w,
                                       int order) {
  // One slot per double point; tau_i^m contributes m consecutive slots.
  std::vector<std::pair<std::size_t, int>> slots;  // (letter position, index)
  std::vector<SingularLetter> letters;
  for (const auto& l : w.letters()) {
    if (!l.singular) {
      letters.push_back(l);
      continue;
    }
    for (long m = 0; m < l.exponent; ++m) {
      slots.emplace_back(letters.size(), l.index);
      letters.push_back({l.index, 1, true});
    }
  }
  const std::size_t k = slots.size();
  if (k > 20) throw Error("vassiliev_coefficients: too many double points");

  TruncatedSeries total(order);
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<SingularLetter> resolved = letters;
    int negatives = 0;
    for (std::size_t s = 0; s < k; ++s) {
      const bool neg = mask & (std::size_t{1} << s);
      resolved[slots[s].first] = {slots[s].second, neg ? -1 : 1, false};
      if (neg) ++negatives;
    }
    FactoredValue value =
        psi(engine, SingularBraidWord(w.strands(), std::move(resolved))).factored();
    TruncatedSeries series = h_series(value, order);
    if (negatives % 2) {
      series.scale(MultiLaurent::constant(Rational(-1)));
    }
    total += series;
  }
  return total;
}

TruncatedSeries vassiliev_coefficients(int d, const std::vector<int>& D,
                                       const SingularBraidWord& w, int order) {
  TraceEngine engine(d, solve_esystem(d, D));
  return vassiliev_coefficients(engine, w, order);
}

}  // namespace yk
