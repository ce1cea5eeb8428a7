// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout (equality means identical canonical form).

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>

#include "yk/catalog.hpp"
#include "yk/invariants.hpp"

using namespace yk;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<bool()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (exception: ") + e.what() + ")";
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!ok) ++failures;
  std::printf("[%s] criterion %2d: %s%s (%.2f s)\n", ok ? "PASS" : "FAIL", number,
              title.c_str(), note.c_str(), secs);
  std::fflush(stdout);
}

std::vector<std::vector<int>> all_subsets(int d) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << d); ++mask) {
    std::vector<int> D;
    for (int m = 0; m < d; ++m)
      if (mask & (1u << m)) D.push_back(m);
    out.push_back(std::move(D));
  }
  return out;
}

BraidWord rand_word(std::mt19937& rng, int n, int max_letters) {
  std::uniform_int_distribution<int> len(0, max_letters), idx(1, n - 1), exp(-3, 3);
  std::vector<BraidLetter> letters;
  for (int i = 0, k = len(rng); i < k; ++i) {
    int e = exp(rng);
    if (e == 0) e = 1;
    letters.push_back({idx(rng), e});
  }
  return BraidWord(n, std::move(letters));
}

FramedBraidWord rand_framed(std::mt19937& rng, int n, int max_letters) {
  std::uniform_int_distribution<int> fr(-2, 2);
  std::vector<long> framings(static_cast<std::size_t>(n));
  for (auto& f : framings) f = fr(rng);
  return FramedBraidWord(std::move(framings), rand_word(rng, n, max_letters));
}

SingularBraidWord rand_singular(std::mt19937& rng, int n, int max_letters) {
  std::uniform_int_distribution<int> len(1, max_letters), idx(1, n - 1), exp(-2, 2), kind(0, 3);
  std::vector<SingularLetter> letters;
  for (int i = 0, k = len(rng); i < k; ++i) {
    if (kind(rng) == 0) {
      letters.push_back({idx(rng), 1, true});
    } else {
      int e = exp(rng);
      if (e == 0) e = 1;
      letters.push_back({idx(rng), e, false});
    }
  }
  return SingularBraidWord(n, std::move(letters));
}

BraidWord conjugate(const BraidWord& w, const BraidWord& u) {
  std::vector<BraidLetter> letters = u.letters();
  for (const auto& l : w.letters()) letters.push_back(l);
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it)
    letters.push_back({it->index, -it->exponent});
  return BraidWord(std::max(w.strands(), u.strands()), std::move(letters));
}

MultiLaurent zvar() { return MultiLaurent::variable(Var::z()); }

// The closed tr_{d,D}(sigma_1^{2k}) from the link-counterexample section.
MultiLaurent even_power_formula(int k, const Rational& E) {
  MultiLaurent out = MultiLaurent::constant(Rational(1) - E);
  out += alternating_q_sum(2 * k) * zvar();
  MultiLaurent last = alternating_q_sum(2 * k - 1);
  last.scale(E);
  return out + last;
}

bool crit1_closed_formula() {
  for (int d = 2; d <= 3; ++d) {
    for (const auto& D : all_subsets(d)) {
      TraceEngine engine(d, solve_esystem(d, D));
      const Rational E = engine.specialization()->E;
      for (int k = 1; k <= 5; ++k) {
        BraidWord w = parse_braid("s1^" + std::to_string(2 * k));
        if (!(engine.trace_word(w).value == even_power_formula(k, E))) return false;
      }
    }
  }
  return true;
}

bool crit2_power_lemma() {
  for (int d = 1; d <= 3; ++d) {
    for (int n = 2; n <= 3; ++n) {
      for (int i = 1; i <= n - 1; ++i) {
        const YElement g = gen_g(d, n, i, 1);
        YElement acc = YElement::identity(d, n);
        for (int r = 1; r <= 8; ++r) {
          acc = multiply(acc, g);
          if (!(gen_g(d, n, i, r) == acc)) return false;
        }
      }
    }
  }
  return true;
}

bool crit3_basis_dimension() {
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 4; ++n) {
      std::size_t expect = 1;
      for (int i = 2; i <= n; ++i) expect *= static_cast<std::size_t>(i);
      for (int i = 0; i < n; ++i) expect *= static_cast<std::size_t>(d);
      auto basis = enumerate_basis(d, n);
      if (basis.size() != expect) return false;
      std::set<YMonomial> unique(basis.begin(), basis.end());
      if (unique.size() != expect) return false;
    }
  }
  return true;
}

bool crit4_esystem() {
  for (int d = 1; d <= 6; ++d) {
    auto sols = all_esolutions(d);
    if (sols.size() != (1u << d) - 1) return false;
    for (const auto& s : sols) {
      if (!verify_esystem(d, s.x).ok) return false;
      if (s.E != Rational(1, static_cast<long>(s.D.size()))) return false;
      Cyclotomic e = esystem_e(d, s.x);
      if (!e.is_rational() || e.to_rational() != s.E) return false;
    }
    for (std::size_t i = 0; i < sols.size(); ++i)
      for (std::size_t j = i + 1; j < sols.size(); ++j)
        if (d > 1 && sols[i].x == sols[j].x) return false;
  }
  return true;
}

bool crit5_trace_properties() {
  std::mt19937 rng(501);
  for (int t = 0; t < 100; ++t) {
    const int d = t % 3 + 1;
    TraceEngine engine(d);
    const int n = t % 2 ? 4 : 3;
    FramedBraidWord w = rand_framed(rng, n, 10);

    // inversion
    if (!(engine.trace_word(w).value == engine.trace_word(reverse(w)).value)) return false;

    // conjugation rule on the algebra level
    YElement a = embed(w, d);
    YElement b = embed(rand_framed(rng, n, 5), d);
    if (!(engine.trace(multiply(a, b)) == engine.trace(multiply(b, a)))) return false;

    // Markov rule and framing rule one strand up
    FramedBraidWord stab(
        [&] {
          auto f = w.framings();
          f.push_back(0);
          return f;
        }(),
        stabilize(w.word(), 1));
    if (!(engine.trace_word(stab).value == zvar() * engine.trace_word(w).value)) return false;
    for (int s = 1; s <= d - 1; ++s) {
      auto f = w.framings();
      f.push_back(s);
      FramedBraidWord framed_up(f, BraidWord(n + 1, w.word().letters()));
      if (!(engine.trace_word(framed_up).value ==
            MultiLaurent::variable(Var::x(s)) * engine.trace_word(w).value))
        return false;
    }

    // split multiplicativity on a two-block word
    FramedBraidWord other = rand_framed(rng, 3, 6);
    std::vector<long> framings = w.framings();
    framings.insert(framings.end(), other.framings().begin(), other.framings().end());
    std::vector<BraidLetter> letters = w.word().letters();
    for (const auto& l : other.word().letters())
      letters.push_back({l.index + w.strands(), l.exponent});
    FramedBraidWord split(std::move(framings),
                          BraidWord(w.strands() + other.strands(), std::move(letters)));
    if (!(engine.trace_word(split).value ==
          engine.trace_word(w).value * engine.trace_word(other).value))
      return false;

    // specialized-trace properties: mirror and connected sum on classical words
    auto subsets = all_subsets(d);
    TraceEngine spec(d, solve_esystem(d, subsets[static_cast<std::size_t>(t) % subsets.size()]));
    const Rational E = spec.specialization()->E;
    BraidWord cw(n, w.word().letters());
    MultiLaurent lhs = spec.trace_word(mirror(cw)).value;
    MultiLaurent rhs = spec.trace_word(cw).value;
    if (rhs.has_var(Var::q()))
      rhs = rhs.substitute(Var::q(), MultiLaurent::variable(Var::q(), -1));
    if (rhs.has_var(Var::z())) {
      MultiLaurent shifted = zvar() - [&] {
        MultiLaurent c = q_minus_qinv();
        c.scale(E);
        return c;
      }();
      rhs = rhs.substitute(Var::z(), shifted);
    }
    if (!(lhs == rhs)) return false;

    BraidWord cv(3, other.word().letters());
    FramedBraidWord sum = connected_sum(FramedBraidWord(cw), FramedBraidWord(cv));
    if (!(spec.trace_word(sum).value == spec.trace_word(cw).value * spec.trace_word(cv).value))
      return false;
  }

  // framed connected-sum multiplicativity holds iff D is a singleton (d = 3)
  for (const auto& D : all_subsets(3)) {
    TraceEngine spec(3, solve_esystem(3, D));
    bool multiplicative = true;
    for (long k = 0; k <= 2; ++k) {
      for (long l = 0; l <= 2; ++l) {
        FramedBraidWord a{{k}, parse_braid("n=1;")};
        FramedBraidWord b{{l}, parse_braid("n=1;")};
        multiplicative = multiplicative &&
                         spec.trace_word(connected_sum(a, b)).value ==
                             spec.trace_word(a).value * spec.trace_word(b).value;
      }
    }
    if (multiplicative != (D.size() == 1)) return false;
  }
  return true;
}

bool crit6_skein_residuals() {
  std::mt19937 rng(601);
  for (int d = 1; d <= 3; ++d) {
    auto subsets = all_subsets(d);
    for (int t = 0; t < 20; ++t) {
      TraceEngine engine(d,
                         solve_esystem(d, subsets[static_cast<std::size_t>(t) % subsets.size()]));
      std::uniform_int_distribution<int> idx(1, 2);
      FramedBraidWord beta = rand_framed(rng, 3, 6);
      if (!skein_residual_framed(engine, beta, idx(rng)).is_zero()) return false;
      SingularBraidWord base = rand_singular(rng, 3, 5);
      std::uniform_int_distribution<std::size_t> pos(0, base.letters().size());
      if (!skein_residual_singular(engine, base, pos(rng), idx(rng)).is_zero()) return false;
    }
  }
  return true;
}

bool crit7_markov_contracts() {
  std::mt19937 rng(701);
  for (int t = 0; t < 50; ++t) {
    const int d = t % 3 + 1;
    auto subsets = all_subsets(d);
    TraceEngine engine(d, solve_esystem(d, subsets[static_cast<std::size_t>(t) % subsets.size()]));
    TraceEngine generic(d);
    BraidWord w = rand_word(rng, 3, 7);
    BraidWord u = rand_word(rng, 3, 3);
    BraidWord cw = conjugate(w, u);

    // theta
    FactoredValue tv = theta(engine, w).factored();
    if (!(theta(engine, cw).factored() == tv)) return false;
    if (!(theta(engine, stabilize(w, 1)).factored() == tv)) return false;
    if (!(theta(engine, stabilize(w, -1)).factored() == tv)) return false;

    // phi on framed words: stabilization and conjugation by classical words
    FramedBraidWord fw = rand_framed(rng, 3, 6);
    FactoredValue pv = phi(engine, fw).factored();
    for (int sign : {1, -1}) {
      FramedBraidWord stab(
          [&] {
            auto f = fw.framings();
            f.push_back(0);
            return f;
          }(),
          stabilize(fw.word(), sign));
      if (!(phi(engine, stab).factored() == pv)) return false;
    }
    {
      Permutation pu = permutation(u);
      std::vector<long> conj_framings(3);
      for (int i = 1; i <= 3; ++i)
        conj_framings[static_cast<std::size_t>(pu.apply(i) - 1)] =
            fw.framings()[static_cast<std::size_t>(i - 1)];
      std::vector<BraidLetter> letters = u.letters();
      for (const auto& l : fw.word().letters()) letters.push_back(l);
      for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it)
        letters.push_back({it->index, -it->exponent});
      FramedBraidWord conj_fw(std::move(conj_framings), BraidWord(3, std::move(letters)));
      if (!(phi(engine, conj_fw).factored() == pv)) return false;
    }

    // psi on singular words
    SingularBraidWord sw = rand_singular(rng, 3, 6);
    FactoredValue sv = psi(engine, sw).factored();
    for (int sign : {1, -1}) {
      auto letters = sw.letters();
      letters.push_back({3, sign, false});
      if (!(psi(engine, SingularBraidWord(4, std::move(letters))).factored() == sv)) return false;
    }
    {
      std::vector<SingularLetter> letters;
      for (const auto& l : u.letters()) letters.push_back({l.index, l.exponent, false});
      for (const auto& l : sw.letters()) letters.push_back(l);
      for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it)
        letters.push_back({it->index, -it->exponent, false});
      if (!(psi(engine, SingularBraidWord(3, std::move(letters))).factored() == sv)) return false;
    }

    // transverse invariant: conjugation and positive stabilization only
    MultiLaurent mv = transverse_m(generic, w).laurent();
    if (!(transverse_m(generic, cw).laurent() == mv)) return false;
    if (!(transverse_m(generic, stabilize(w, 1)).laurent() == mv)) return false;
  }
  return true;
}

bool crit8_theta_homflypt_knots() {
  const std::vector<std::string> words = {
      "s1^3", "s1^5", "s1 s2^-1 s1 s2^-1", "s1^3 s2^-1 s1 s2^-1", "s1^5 s2^-1 s1 s2^-1",
      "s3^-1 s2 s1 s3 s2^-1 s3 s1 s2^2"};
  for (int d = 2; d <= 3; ++d) {
    for (const auto& D : all_subsets(d)) {
      for (const auto& text : words) {
        BraidWord w = parse_braid(text);
        if (closure_components(w).count != 1) return false;
        ThetaComparison cmp = compare_theta_homflypt(w, d, D);
        if (!cmp.knot || !cmp.equal_qz || !cmp.equal_qlambda) return false;
      }
    }
  }
  return true;
}

bool crit9_link_counterexample() {
  for (int k = 1; k <= 2; ++k) {
    BraidWord w = parse_braid("s1^" + std::to_string(2 * k));
    ThetaComparison cmp = compare_theta_homflypt(w, 2, {0, 1});
    if (cmp.knot || cmp.equal_qz || cmp.equal_qlambda) return false;
  }
  return true;
}

bool crit10_transverse_pairs() {
  TraceEngine engine(2);
  const TraceStrategy strategy = TraceStrategy::power_formula;
  auto bm1 = find_family("birman-menasco-a").instantiate({{"a", 2}, {"b", 2}, {"c", 3}});
  auto bm2 = find_family("birman-menasco-b").instantiate({{"a", 2}, {"b", 2}, {"c", 3}});
  if (!(transverse_m(engine, bm1.braid(), strategy).laurent() ==
        transverse_m(engine, bm2.braid(), strategy).laurent()))
    return false;
  auto kn1 = find_family("khandhawit-ng-a").instantiate({{"a", 0}, {"b", 0}});
  auto kn2 = find_family("khandhawit-ng-b").instantiate({{"a", 0}, {"b", 0}});
  return transverse_m(engine, kn1.braid(), strategy).laurent() ==
         transverse_m(engine, kn2.braid(), strategy).laurent();
}

bool crit11_vassiliev() {
  TraceEngine engine(2, solve_esystem(2, {0, 1}));
  TraceEngine engine3(3, solve_esystem(3, {1}));
  const int order = 4;
  // k = 1 double point
  for (const auto& text : {"s1 tau1 s1", "s1 tau2", "n=3; tau1 s2^2"}) {
    for (TraceEngine* e : {&engine, &engine3}) {
      TruncatedSeries s = vassiliev_coefficients(*e, parse_singular(text), order);
      if (!s.coeff(0).is_zero()) return false;
    }
  }
  // k = 2 double points
  for (const auto& text : {"n=4; tau1 s2 tau3 s1^2", "s2 tau1^2", "tau1 s2 tau2"}) {
    for (TraceEngine* e : {&engine, &engine3}) {
      TruncatedSeries s = vassiliev_coefficients(*e, parse_singular(text), order);
      if (!s.coeff(0).is_zero() || !s.coeff(1).is_zero()) return false;
    }
  }
  return true;
}

bool crit12_strategies() {
  std::mt19937 rng(1201);
  TraceEngine engine(2);
  double naive_total = 0, memo_first = 0, memo_second = 0;
  for (int t = 0; t < 50; ++t) {
    FramedBraidWord w = rand_framed(rng, 3, 8);
    TraceStats sn, sp, sm1, sm2;
    MultiLaurent a = engine.trace_word(w, TraceStrategy::naive, &sn).value;
    MultiLaurent b = engine.trace_word(w, TraceStrategy::power_formula, &sp).value;
    MultiLaurent c = engine.trace_word(w, TraceStrategy::memoized, &sm1).value;
    MultiLaurent c2 = engine.trace_word(w, TraceStrategy::memoized, &sm2).value;
    if (!(a == b) || !(b == c) || !(c == c2)) return false;
    naive_total += sn.wall_ms;
    memo_first += sm1.wall_ms;
    memo_second += sm2.wall_ms;
  }
  std::printf(
      "       strategy timing report: naive %.1f ms, memo first pass %.1f ms, "
      "memo repeat %.1f ms\n",
      naive_total, memo_first, memo_second);
  return true;
}

}  // namespace

int main() {
  criterion(1, "closed trace formula for sigma_1^{2k}, d in {2,3}, all D, k <= 5",
            crit1_closed_formula);
  criterion(2, "power formula equals repeated multiplication, r <= 8, d <= 3, n <= 3",
            crit2_power_lemma);
  criterion(3, "basis enumeration has dimension n! d^n for d <= 3, n <= 4",
            crit3_basis_dimension);
  criterion(4, "E-system solutions verify, count 2^d - 1, E_D = 1/|D|, d <= 6", crit4_esystem);
  criterion(5, "trace rules, inversion, split, mirror, connected sums on 100 random words",
            crit5_trace_properties);
  criterion(6, "framed and singular skein residuals vanish on 20 random words per d",
            crit6_skein_residuals);
  criterion(7,
            "Markov contracts: theta/phi/psi under conjugation and +- stabilization, "
            "M under conjugation and + stabilization",
            crit7_markov_contracts);
  criterion(8, "theta equals homflypt at z/E_D on the knot sample, d in {2,3}, all D",
            crit8_theta_homflypt_knots);
  criterion(9, "theta differs from homflypt at z/E_D on sigma_1^{2k}, k = 1,2",
            crit9_link_counterexample);
  criterion(10, "M_d does not distinguish the Birman-Menasco and Khandhawit-Ng pairs",
            crit10_transverse_pairs);
  criterion(11, "Vassiliev series vanish below the double-point count (order 4)",
            crit11_vassiliev);
  criterion(12, "trace strategies agree on 50 random words", crit12_strategies);

  if (failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
