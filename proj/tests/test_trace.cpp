#include <random>
#include <thread>

#include "doctest.h"
#include "yk/trace.hpp"

using namespace yk;

namespace {

FramedBraidWord random_framed(std::mt19937& rng, int n, int max_letters) {
  std::uniform_int_distribution<int> len(0, max_letters), idx(1, n - 1), exp(-3, 3), fr(-2, 2);
  std::vector<BraidLetter> letters;
  const int k = len(rng);
  for (int i = 0; i < k; ++i) {
    int e = exp(rng);
    if (e == 0) e = 1;
    letters.push_back({idx(rng), e});
  }
  std::vector<long> framings(static_cast<std::size_t>(n));
  for (auto& f : framings) f = fr(rng);
  return FramedBraidWord(std::move(framings), BraidWord(n, std::move(letters)));
}

MultiLaurent zvar() { return MultiLaurent::variable(Var::z()); }

// The closed formula for tr_{d,D}(sigma_1^{2k}):
// 1 - E + ((q^{2k}-q^{-2k})/(q+q^-1)) z + ((q^{2k-1}+q^{-(2k-1)})/(q+q^-1)) E.
MultiLaurent even_power_trace_formula(int k, const Rational& E) {
  MultiLaurent out = MultiLaurent::constant(Rational(1) - E);
  out += alternating_q_sum(2 * k) * zvar();
  MultiLaurent last = alternating_q_sum(2 * k - 1);
  last.scale(E);
  out += last;
  return out;
}

}  // namespace

TEST_CASE("base trace rules") {
  TraceEngine engine(2);
  CHECK(engine.trace(YElement::identity(2, 3)) == MultiLaurent::constant(Rational(1)));
  CHECK(engine.trace_word(parse_braid("s1")).value == zvar());
  // tr_2(e_1) = (1 + x_1^2)/2
  MultiLaurent e1 = engine.trace(idempotent_e(2, 2, 1));
  MultiLaurent expect = MultiLaurent::constant(Rational(1)) + MultiLaurent::variable(Var::x(1), 2);
  expect.scale(Rational(1, 2));
  CHECK(e1 == expect);
  // tr_d(e_1 g_1) = z
  for (int d = 1; d <= 3; ++d) {
    TraceEngine eng(d);
    CHECK(eng.trace(multiply(idempotent_e(d, 2, 1), gen_g(d, 2, 1, 1))) == zvar());
  }
}

TEST_CASE("framing rule produces x variables") {
  TraceEngine engine(3);
  CHECK(engine.trace_word(parse_framed("t1^2 ;")).value == MultiLaurent::variable(Var::x(2)));
  CHECK(engine.trace_word(parse_framed("t1 t2 ;")).value ==
        MultiLaurent::variable(Var::x(1)) * MultiLaurent::variable(Var::x(1)));
  CHECK(engine.trace_word(parse_framed("t1^3 ;")).value == MultiLaurent::constant(Rational(1)));
}

TEST_CASE("closed formula for even powers, generic and specialized") {
  for (int d = 2; d <= 3; ++d) {
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
      std::vector<int> D;
      for (int m = 0; m < d; ++m)
        if (mask & (1u << m)) D.push_back(m);
      TraceEngine engine(d, solve_esystem(d, D));
      const Rational E = engine.specialization()->E;
      for (int k = 1; k <= 5; ++k) {
        BraidWord w = parse_braid("s1^" + std::to_string(2 * k));
        CHECK(engine.trace_word(w).value == even_power_trace_formula(k, E));
      }
    }
  }
}

TEST_CASE("specialized trace of the idempotents is 1/|D|") {
  for (int d = 1; d <= 4; ++d) {
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
      std::vector<int> D;
      for (int m = 0; m < d; ++m)
        if (mask & (1u << m)) D.push_back(m);
      TraceEngine engine(d, solve_esystem(d, D));
      for (int n = 2; n <= 3; ++n) {
        for (int i = 1; i <= n - 1; ++i) {
          CHECK(engine.trace(idempotent_e(d, n, i)) ==
                MultiLaurent::constant(Rational(1, static_cast<long>(D.size()))));
        }
      }
    }
  }
}

TEST_CASE("generic traces never carry negative x exponents") {
  std::mt19937 rng(991);
  for (int d = 2; d <= 3; ++d) {
    TraceEngine engine(d);
    for (int t = 0; t < 10; ++t) {
      MultiLaurent v = engine.trace_word(random_framed(rng, 4, 8)).value;
      for (int k = 1; k <= d - 1; ++k) CHECK(v.min_exponent(Var::x(k)) >= 0);
    }
  }
}

TEST_CASE("d=1 specialized trace is the Ocneanu trace") {
  TraceEngine engine(1, solve_esystem(1, {0}));
  for (int k = 1; k <= 5; ++k) {
    BraidWord w = parse_braid("s1^" + std::to_string(2 * k));
    // E_D = 1: the formula collapses to the Ocneanu values
    CHECK(engine.trace_word(w).value == even_power_trace_formula(k, Rational(1)));
  }
  // tr_1(sigma^3) = (q^2 - 1 + q^-2) z + (q - q^-1)
  MultiLaurent expect = alternating_q_sum(3) * zvar() + alternating_q_sum(2);
  CHECK(engine.trace_word(parse_braid("s1^3")).value == expect);
}

TEST_CASE("trace rules on random words") {
  std::mt19937 rng(67);
  for (int d = 1; d <= 3; ++d) {
    TraceEngine engine(d);
    for (int t = 0; t < 12; ++t) {
      const int n = 3;
      BraidWord u(n, random_framed(rng, n, 5).word().letters());
      BraidWord v(n, random_framed(rng, n, 5).word().letters());
      YElement eu = embed(u, d), ev = embed(v, d);
      // conjugation rule tr(ab) = tr(ba)
      CHECK(engine.trace(multiply(eu, ev)) == engine.trace(multiply(ev, eu)));
      // Markov rule tr(a g_n) = z tr(a) with a embedded in n+1 strands
      YElement wide = embed(BraidWord(n + 1, u.letters()), d);
      CHECK(engine.trace(multiply(wide, gen_g(d, n + 1, n, 1))) ==
            zvar() * engine.trace(eu));
      // framing rule tr(a t_{n+1}^s) = x_s tr(a)
      for (int s = 1; s <= d - 1; ++s) {
        CHECK(engine.trace(wide.right_mul_t(n + 1, s)) ==
              MultiLaurent::variable(Var::x(s)) * engine.trace(eu));
      }
      // the E-condition: tr(a e_n) = E tr(a) for the specialized trace
      for (unsigned mask = 1; mask < (1u << d); ++mask) {
        std::vector<int> D;
        for (int m = 0; m < d; ++m)
          if (mask & (1u << m)) D.push_back(m);
        TraceEngine spec(d, solve_esystem(d, D));
        MultiLaurent lhs = spec.trace(multiply(wide, idempotent_e(d, n + 1, n)));
        MultiLaurent rhs = spec.trace(embed(BraidWord(n + 1, u.letters()), d));
        rhs.scale(spec.specialization()->E);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("inversion invariance") {
  std::mt19937 rng(71);
  for (int d = 1; d <= 3; ++d) {
    TraceEngine engine(d);
    for (int t = 0; t < 10; ++t) {
      FramedBraidWord w = random_framed(rng, 4, 8);
      CHECK(engine.trace_word(w).value == engine.trace_word(reverse(w)).value);
    }
  }
}

TEST_CASE("split multiplicativity") {
  std::mt19937 rng(73);
  for (int d = 1; d <= 2; ++d) {
    TraceEngine engine(d);
    for (int t = 0; t < 8; ++t) {
      FramedBraidWord a = random_framed(rng, 2, 4);
      FramedBraidWord b = random_framed(rng, 3, 4);
      // juxtaposed on disjoint strand blocks
      std::vector<long> framings = a.framings();
      framings.insert(framings.end(), b.framings().begin(), b.framings().end());
      std::vector<BraidLetter> letters = a.word().letters();
      for (const auto& l : b.word().letters())
        letters.push_back({l.index + a.strands(), l.exponent});
      FramedBraidWord joined(std::move(framings),
                             BraidWord(a.strands() + b.strands(), std::move(letters)));
      CHECK(engine.trace_word(joined).value ==
            engine.trace_word(a).value * engine.trace_word(b).value);
    }
  }
}

TEST_CASE("specialization consistency") {
  std::mt19937 rng(79);
  for (int d = 2; d <= 3; ++d) {
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
      std::vector<int> D;
      for (int m = 0; m < d; ++m)
        if (mask & (1u << m)) D.push_back(m);
      ESolution sol = solve_esystem(d, D);
      TraceEngine generic(d);
      TraceEngine special(d, sol);
      for (int t = 0; t < 6; ++t) {
        FramedBraidWord w = random_framed(rng, 3, 6);
        MultiLaurent g = generic.trace_word(w).value;
        for (int k = d - 1; k >= 1; --k)
          if (g.has_var(Var::x(k))) g = g.substitute(Var::x(k), sol.x_value(k));
        CHECK(g == special.trace_word(w).value);
      }
    }
  }
}

TEST_CASE("mirror rule for the specialized trace") {
  std::mt19937 rng(83);
  for (int d = 1; d <= 3; ++d) {
    std::vector<int> D;
    for (int m = 0; m < d; ++m) D.push_back(m);  // full subset
    for (unsigned pick = 0; pick < 2; ++pick) {
      std::vector<int> subset = pick == 0 ? std::vector<int>{0} : D;
      ESolution sol = solve_esystem(d, subset);
      TraceEngine engine(d, sol);
      for (int t = 0; t < 6; ++t) {
        BraidWord w(4, random_framed(rng, 4, 6).word().letters());
        MultiLaurent lhs = engine.trace_word(mirror(w)).value;
        MultiLaurent rhs = engine.trace_word(w).value;
        if (rhs.has_var(Var::q()))
          rhs = rhs.substitute(Var::q(), MultiLaurent::variable(Var::q(), -1));
        if (rhs.has_var(Var::z())) {
          MultiLaurent shifted_z = MultiLaurent::variable(Var::z()) - [&] {
            MultiLaurent c = q_minus_qinv();
            c.scale(sol.E);
            return c;
          }();
          rhs = rhs.substitute(Var::z(), shifted_z);
        }
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("connected sum factorization") {
  std::mt19937 rng(89);
  // classical words: multiplicative for every D
  for (int d = 2; d <= 3; ++d) {
    std::vector<int> full;
    for (int m = 0; m < d; ++m) full.push_back(m);
    TraceEngine engine(d, solve_esystem(d, full));
    for (int t = 0; t < 6; ++t) {
      FramedBraidWord a{std::vector<long>(3, 0), BraidWord(3, random_framed(rng, 3, 5).word().letters())};
      FramedBraidWord b{std::vector<long>(3, 0), BraidWord(3, random_framed(rng, 3, 5).word().letters())};
      CHECK(engine.trace_word(connected_sum(a, b)).value ==
            engine.trace_word(a).value * engine.trace_word(b).value);
    }
  }
  // framed words: multiplicative iff D is a singleton, probed on t_1^k # t_1^l
  const int d = 3;
  for (unsigned mask = 1; mask < (1u << d); ++mask) {
    std::vector<int> D;
    for (int m = 0; m < d; ++m)
      if (mask & (1u << m)) D.push_back(m);
    TraceEngine engine(d, solve_esystem(d, D));
    bool multiplicative = true;
    for (long k = 0; k <= 2 && multiplicative; ++k) {
      for (long l = 0; l <= 2 && multiplicative; ++l) {
        FramedBraidWord a{{k}, parse_braid("n=1;")};
        FramedBraidWord b{{l}, parse_braid("n=1;")};
        multiplicative = engine.trace_word(connected_sum(a, b)).value ==
                         engine.trace_word(a).value * engine.trace_word(b).value;
      }
    }
    CHECK(multiplicative == (D.size() == 1));
  }
}

TEST_CASE("strategies agree and report statistics") {
  std::mt19937 rng(97);
  TraceEngine engine(2);
  for (int t = 0; t < 10; ++t) {
    FramedBraidWord w = random_framed(rng, 3, 6);
    TraceStats naive_stats, power_stats, memo_stats;
    MultiLaurent a = engine.trace_word(w, TraceStrategy::naive, &naive_stats).value;
    MultiLaurent b = engine.trace_word(w, TraceStrategy::power_formula, &power_stats).value;
    MultiLaurent c = engine.trace_word(w, TraceStrategy::memoized, &memo_stats).value;
    CHECK(a == b);
    CHECK(b == c);
  }
  // power formula avoids quadratic firings on high powers
  TraceEngine fresh(2);
  TraceStats naive_stats, power_stats;
  fresh.trace_word(parse_braid("s1^6"), TraceStrategy::naive, &naive_stats);
  fresh.trace_word(parse_braid("s1^6"), TraceStrategy::power_formula, &power_stats);
  CHECK(power_stats.quadratic_firings <= naive_stats.quadratic_firings);
  CHECK(naive_stats.quadratic_firings > 0);
  // memoized second run hits the cache
  TraceEngine memo(2);
  TraceStats first, second;
  memo.trace_word(parse_braid("s1^4 s2 s1^2"), TraceStrategy::memoized, &first);
  memo.trace_word(parse_braid("s1^4 s2 s1^2"), TraceStrategy::memoized, &second);
  CHECK(second.cache_hits > 0);
}

TEST_CASE("concurrent use yields sequential values") {
  TraceEngine engine(2, solve_esystem(2, {0, 1}));
  BraidWord w = parse_braid("s1^3 s2^-1 s1 s2");
  MultiLaurent expect = engine.trace_word(w).value;
  std::vector<MultiLaurent> results(4);
  std::vector<std::thread> threads;
  for (int i = 0; i < 4; ++i)
    threads.emplace_back([&, i] { results[static_cast<std::size_t>(i)] = engine.trace_word(w).value; });
  for (auto& t : threads) t.join();
  for (const auto& r : results) CHECK(r == expect);
}
