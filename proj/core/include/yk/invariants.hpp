#ifndef YK_INVARIANTS_HPP
#define YK_INVARIANTS_HPP

#include <variant>

#include "yk/factored.hpp"
#include "yk/series.hpp"
#include "yk/trace.hpp"

namespace yk {

enum class InvariantKind { phi, theta, homflypt, psi, transverse_m };

std::string kind_name(InvariantKind k);

struct WordInfo {
  int strands = 1;
  long epsilon = 0;
  int components = 1;
};

/*
  Computed invariant of a closed braid. Phi/Theta/P/Psi carry a factored
  (q, z) value relative to an E-system solution; the transverse invariant
  M_d is a plain Laurent polynomial in (q, z, x_1..x_{d-1}).
*/
struct InvariantValue {
  InvariantKind kind = InvariantKind::theta;
  int d = 1;
  std::optional<std::vector<int>> D;
  std::variant<FactoredValue, MultiLaurent> value;
  WordInfo info;

  const FactoredValue& factored() const;
  const MultiLaurent& laurent() const;
  int parity() const;  // -1 for transverse_m
  std::string value_str() const;
  bool operator==(const InvariantValue& o) const;
};

// The five invariants. The engine must be specialized for phi/theta/psi
// (and have d = 1, D = {0} for homflypt), generic for transverse_m.
InvariantValue phi(TraceEngine& engine, const FramedBraidWord& w,
                   TraceStrategy strategy = TraceStrategy::memoized);
InvariantValue theta(TraceEngine& engine, const BraidWord& w,
                     TraceStrategy strategy = TraceStrategy::memoized);
InvariantValue homflypt(TraceEngine& engine, const BraidWord& w,
                        TraceStrategy strategy = TraceStrategy::memoized);
InvariantValue psi(TraceEngine& engine, const SingularBraidWord& w,
                   TraceStrategy strategy = TraceStrategy::memoized);
InvariantValue transverse_m(TraceEngine& engine, const BraidWord& w,
                            TraceStrategy strategy = TraceStrategy::memoized);

// One-shot conveniences (fresh engine per call).
InvariantValue phi(int d, const std::vector<int>& D, const FramedBraidWord& w);
InvariantValue theta(int d, const std::vector<int>& D, const BraidWord& w);
InvariantValue homflypt(const BraidWord& w);
InvariantValue psi(int d, const std::vector<int>& D, const SingularBraidWord& w);
InvariantValue transverse_m(int d, const BraidWord& w);

// Left side minus right side of the framed skein relation on the closures
// of beta sigma_i^{+1}, beta sigma_i^{-1} and beta t_i^s t_{i+1}^{d-s};
// identically zero by the skein proposition.
FactoredValue skein_residual_framed(TraceEngine& engine, const FramedBraidWord& beta, int i);

// Same for the singular skein relation, with the crossing inserted at
// `pos` (0..letters) in the base word.
FactoredValue skein_residual_singular(TraceEngine& engine, const SingularBraidWord& base,
                                      std::size_t pos, int i);

// q -> q^-1, lambda -> lambda^-1 in the (q, lambda) form, re-factored.
// Defined for theta and homflypt only; the trace carries no mirror rule
// for the generic parameters, so transverse_m (and phi/psi) are rejected.
InvariantValue mirror_transform(const InvariantValue& v);

struct ThetaComparison {
  int components = 1;
  bool knot = false;
  bool equal_qz = false;       // Theta_{d,D}(q,z) vs P(q, z/E_D)
  bool equal_qlambda = false;  // Theta_{d,D}(q,lambda) vs P(q,lambda)
};

// Exact comparison of Theta_{d,D} with the Homflypt polynomial under
// z -> z/E_D, along both variable routes. Equality is asserted by callers
// for knots only; for links the report is data.
ThetaComparison compare_theta_homflypt(const BraidWord& w, int d, const std::vector<int>& D);

// Checks Phi(L) = Lambda^{m-1} Phi(L_1) ... Phi(L_m) for the split link
// assembled from the given parts on consecutive strand blocks.
bool split_product_check(TraceEngine& engine, const std::vector<FramedBraidWord>& parts);
// Same, validating that `combined` really is the juxtaposition of the parts.
bool split_product_check(TraceEngine& engine, const FramedBraidWord& combined,
                         const std::vector<FramedBraidWord>& parts);

FramedBraidWord juxtapose(const std::vector<FramedBraidWord>& parts);

// h-series of a factored value under q = e^h; sqrt(lambda) expands on the
// branch with constant term +1.
TruncatedSeries h_series(const FactoredValue& v, int order);

// Vassiliev extension series: each double point of w is resolved into the
// difference of its positive and negative resolutions, the resulting
// 2^k signed Psi values are expanded at q = e^h and summed. A word with k
// double points yields a series vanishing below order k.
TruncatedSeries vassiliev_coefficients(TraceEngine& engine, const SingularBraidWord& w,
                                       int order);
TruncatedSeries vassiliev_coefficients(int d, const std::vector<int>& D,
                                       const SingularBraidWord& w, int order);

}  // namespace yk

#endif
