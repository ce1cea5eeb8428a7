#ifndef YK_TRACE_HPP
#define YK_TRACE_HPP

#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "yk/algebra.hpp"
#include "yk/esystem.hpp"

namespace yk {

enum class TraceStrategy { naive, power_formula, memoized };

struct TraceStats {
  std::uint64_t rule3_applications = 0;  // g_max removals
  std::uint64_t rule4_applications = 0;  // framing strips
  std::uint64_t quadratic_firings = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t cache_misses = 0;
  double wall_ms = 0;
};

struct TraceResult {
  MultiLaurent value;  // generic: (q, z, x_1..x_{d-1}); specialized: (q, z)
  int d = 1;
  std::optional<std::vector<int>> D;
};

/*
  Markov trace evaluator. Works by linear extension over normal-form
  monomials; a monomial is peeled by the three-case analysis on
  I = top braid generator index and J = top strand with nonzero framing:
  framings above the braid part strip to x-factors, the single top
  generator strips to a z-factor (re-normalizing the broken run), and a
  framing on strand I+1 is pushed through g_I before that strip.

  An engine is generic (x_s stays a variable) or specialized at an
  E-system solution (x_s becomes the solution value). The monomial memo
  is internally synchronized; concurrent calls return the same values as
  sequential ones.
*/
class TraceEngine {
public:
  explicit TraceEngine(int d) : d_(d) {}
  TraceEngine(int d, ESolution sol) : d_(d), spec_(std::move(sol)) {
    if (spec_->d != d) throw Error("TraceEngine: solution conductor mismatch");
  }

  int d() const { return d_; }
  const std::optional<ESolution>& specialization() const { return spec_; }

  MultiLaurent trace(const YElement& e, bool memoize = true, TraceStats* stats = nullptr);

  TraceResult trace_word(const FramedBraidWord& w,
                         TraceStrategy strategy = TraceStrategy::memoized,
                         TraceStats* stats = nullptr);
  TraceResult trace_word(const BraidWord& w,
                         TraceStrategy strategy = TraceStrategy::memoized,
                         TraceStats* stats = nullptr);
  TraceResult trace_word(const SingularBraidWord& w,
                         TraceStrategy strategy = TraceStrategy::memoized,
                         TraceStats* stats = nullptr);

  void clear_cache();
  std::size_t cache_size() const;

private:
  MultiLaurent trace_monomial(const YMonomial& m, bool memoize, TraceStats* stats);
  MultiLaurent x_factor(int residue) const;
  template <typename Word>
  TraceResult trace_word_impl(const Word& w, TraceStrategy strategy, TraceStats* stats);

  int d_;
  std::optional<ESolution> spec_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, MultiLaurent> memo_;
};

// Convenience wrappers matching the per-word operations.
TraceResult trace_generic(int d, const FramedBraidWord& w,
                          TraceStrategy strategy = TraceStrategy::memoized,
                          TraceStats* stats = nullptr);
TraceResult trace_specialized(int d, const std::vector<int>& D, const FramedBraidWord& w,
                              TraceStrategy strategy = TraceStrategy::memoized,
                              TraceStats* stats = nullptr);
TraceResult trace_specialized(int d, const std::vector<int>& D, const BraidWord& w,
                              TraceStrategy strategy = TraceStrategy::memoized,
                              TraceStats* stats = nullptr);

}  // namespace yk

#endif
