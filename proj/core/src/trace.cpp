#include "yk/trace.hpp"

#include <chrono>

namespace yk {

MultiLaurent TraceEngine::x_factor(int residue) const {
  if (residue == 0) return MultiLaurent::constant(Rational(1));
  if (spec_) return MultiLaurent::constant(spec_->x_value(residue));
  return MultiLaurent::variable(Var::x(residue));
}

MultiLaurent TraceEngine::trace(const YElement& e, bool memoize, TraceStats* stats) {
  if (e.d() != d_) throw Error("TraceEngine: element conductor mismatch");
  MultiLaurent out;
  for (const auto& [m, c] : e.terms()) out += c * trace_monomial(m, memoize, stats);
  return out;
}

MultiLaurent TraceEngine::trace_monomial(const YMonomial& m, bool memoize,
                                         TraceStats* stats) {
  std::string key;
  if (memoize) {
    key = m.str();
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      if (stats) ++stats->cache_hits;
      return it->second;
    }
    if (stats) ++stats->cache_misses;
  }

  const int n = m.strands();
  int top_framed = 0;  // J
  for (int j = n; j >= 1; --j) {
    if (m.framings()[static_cast<std::size_t>(j - 1)] != 0) {
      top_framed = j;
      break;
    }
  }
  const int top_moved = m.perm().max_moved();  // I + 1

  MultiLaurent result;
  if (top_moved == 0) {
    // Pure framing monomial: rules (2) and (4) only.
    result = MultiLaurent::constant(Rational(1));
    for (int j = 1; j <= n; ++j) {
      int r = m.framings()[static_cast<std::size_t>(j - 1)];
      if (r == 0) continue;
      result *= x_factor(r);
      if (stats) ++stats->rule4_applications;
    }
  } else if (top_framed > top_moved) {
    // J > I+1: strip the top framing with rule (4).
    if (stats) ++stats->rule4_applications;
    std::vector<int> f = m.framings();
    int r = f[static_cast<std::size_t>(top_framed - 1)];
    f[static_cast<std::size_t>(top_framed - 1)] = 0;
    result = x_factor(r) * trace_monomial(YMonomial(std::move(f), m.perm()), memoize, stats);
  } else {
    // Peel the unique top generator g_{I} with rule (3). The basis word is
    // A g_I B with A the word of u and B the tail of the top run; a framing
    // on strand I+1 first moves through g_I onto strand I.
    const int i = m.perm().preimage(top_moved);
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) {
      if (x >= i && x < top_moved)
        img[static_cast<std::size_t>(x - 1)] = m.perm().apply(x + 1);
      else if (x == top_moved)
        img[static_cast<std::size_t>(x - 1)] = top_moved;
      else
        img[static_cast<std::size_t>(x - 1)] = m.perm().apply(x);
    }
    Permutation u = Permutation::from_images(std::move(img));

    std::vector<int> f = m.framings();
    YElement rest(d_, n);
    if (top_framed == top_moved) {
      int k = f[static_cast<std::size_t>(top_moved - 1)];
      f[static_cast<std::size_t>(top_moved - 1)] = 0;
      rest.add_term(YMonomial(std::move(f), u), MultiLaurent::constant(Rational(1)));
      rest = rest.right_mul_t(top_moved - 1, k);
    } else {
      rest.add_term(YMonomial(std::move(f), u), MultiLaurent::constant(Rational(1)));
    }
    AlgebraStats alg;
    for (int l = top_moved - 2; l >= i; --l) rest = rest.right_mul_g(l, &alg);
    if (stats) {
      ++stats->rule3_applications;
      stats->quadratic_firings += alg.quadratic_firings;
    }
    result = MultiLaurent::variable(Var::z()) * trace(rest, memoize, stats);
  }

  if (memoize) {
    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(std::move(key), result);
  }
  return result;
}

template <typename Word>
TraceResult TraceEngine::trace_word_impl(const Word& w, TraceStrategy strategy,
                                         TraceStats* stats) {
  const auto t0 = std::chrono::steady_clock::now();
  AlgebraStats alg;
  EmbedOptions opts{strategy != TraceStrategy::naive};
  YElement e = embed(w, d_, opts, &alg);
  if (stats) stats->quadratic_firings += alg.quadratic_firings;
  TraceResult out;
  out.value = trace(e, strategy == TraceStrategy::memoized, stats);
  out.d = d_;
  if (spec_) out.D = spec_->D;
  if (stats)
    stats->wall_ms += std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  return out;
}

TraceResult TraceEngine::trace_word(const FramedBraidWord& w, TraceStrategy strategy,
                                    TraceStats* stats) {
  return trace_word_impl(w, strategy, stats);
}
TraceResult TraceEngine::trace_word(const BraidWord& w, TraceStrategy strategy,
                                    TraceStats* stats) {
  return trace_word_impl(w, strategy, stats);
}
TraceResult TraceEngine::trace_word(const SingularBraidWord& w, TraceStrategy strategy,
                                    TraceStats* stats) {
  return trace_word_impl(w, strategy, stats);
}

void TraceEngine::clear_cache() {
  std::lock_guard<std::mutex> lock(mutex_);
  memo_.clear();
}

std::size_t TraceEngine::cache_size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.size();
}

TraceResult trace_generic(int d, const FramedBraidWord& w, TraceStrategy strategy,
                          TraceStats* stats) {
  TraceEngine engine(d);
  return engine.trace_word(w, strategy, stats);
}

TraceResult trace_specialized(int d, const std::vector<int>& D, const FramedBraidWord& w,
                              TraceStrategy strategy, TraceStats* stats) {
  TraceEngine engine(d, solve_esystem(d, D));
  return engine.trace_word(w, strategy, stats);
}

TraceResult trace_specialized(int d, const std::vector<int>& D, const BraidWord& w,
                              TraceStrategy strategy, TraceStats* stats) {
  TraceEngine engine(d, solve_esystem(d, D));
  return engine.trace_word(w, strategy, stats);
}

}  // namespace yk
