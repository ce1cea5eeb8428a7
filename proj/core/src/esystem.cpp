#include "yk/esystem.hpp"

#include <algorithm>

namespace yk {

namespace {

// x_k with x_0 = 1 and indices mod d.
const Cyclotomic& x_at(int d, const std::vector<Cyclotomic>& values, long k,
                       const Cyclotomic& one) {
  long r = k % d;
  if (r < 0) r += d;
  if (r == 0) return one;
  return values[static_cast<std::size_t>(r - 1)];
}

}  // namespace

const Cyclotomic& ESolution::x_value(int k) const {
  if (k < 1 || k > d - 1) throw Error("ESolution: x index out of range");
  return x[static_cast<std::size_t>(k - 1)];
}

std::string ESolution::str() const {
  std::string s = "d=" + std::to_string(d) + " D={";
  for (std::size_t i = 0; i < D.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(D[i]);
  }
  s += "} E=" + rational_str(E);
  for (int k = 1; k <= d - 1; ++k) s += " x" + std::to_string(k) + "=" + x_value(k).str();
  return s;
}

Cyclotomic esystem_e(int d, const std::vector<Cyclotomic>& values) {
  const Cyclotomic one(Rational(1));
  Cyclotomic e;
  for (int s = 0; s < d; ++s) e += x_at(d, values, s, one) * x_at(d, values, d - s, one);
  e.scale(Rational(1, d));
  return e;
}

EVerifyResult verify_esystem(int d, const std::vector<Cyclotomic>& values) {
  if (static_cast<int>(values.size()) != d - 1)
    throw Error("verify_esystem: expected d-1 values");
  const Cyclotomic one(Rational(1));
  const Cyclotomic e = esystem_e(d, values);
  if (e.is_zero()) return {false, 0};
  for (int m = 1; m <= d - 1; ++m) {
    Cyclotomic em;
    for (int s = 0; s < d; ++s)
      em += x_at(d, values, m + s, one) * x_at(d, values, d - s, one);
    em.scale(Rational(1, d));
    Cyclotomic rhs = x_at(d, values, m, one) * e;
    if (em != rhs) return {false, m};
  }
  return {true, 0};
}

ESolution solve_esystem(int d, std::vector<int> D) {
  if (d < 1) throw Error("solve_esystem: d must be >= 1");
  if (D.empty()) throw Error("solve_esystem: D must be nonempty");
  std::sort(D.begin(), D.end());
  D.erase(std::unique(D.begin(), D.end()), D.end());
  for (int m : D)
    if (m < 0 || m >= d) throw Error("solve_esystem: residue out of range");

  ESolution sol;
  sol.d = d;
  sol.D = std::move(D);
  sol.E = Rational(1, static_cast<long>(sol.D.size()));
  // x_k = (1/|D|) sum_{m in D} zeta_d^{mk}; imported formula, so gate it
  // through the defining equations before returning.
  for (int k = 1; k <= d - 1; ++k) {
    Cyclotomic v;
    for (int m : sol.D) v += Cyclotomic::zeta_power(d, static_cast<long>(m) * k);
    v.scale(Rational(1, static_cast<long>(sol.D.size())));
    sol.x.push_back(std::move(v));
  }
  auto check = verify_esystem(d, sol.x);
  if (!check.ok)
    throw PropertyError("solve_esystem: constructed values fail equation m=" +
                        std::to_string(check.failing_m));
  Cyclotomic e = esystem_e(d, sol.x);
  if (!e.is_rational() || e.to_rational() != sol.E)
    throw PropertyError("solve_esystem: E_D != 1/|D|");
  return sol;
}

std::vector<ESolution> all_esolutions(int d) {
  std::vector<ESolution> out;
  for (unsigned mask = 1; mask < (1u << d); ++mask) {
    std::vector<int> D;
    for (int m = 0; m < d; ++m)
      if (mask & (1u << m)) D.push_back(m);
    out.push_back(solve_esystem(d, std::move(D)));
  }
  return out;
}

}  // namespace yk
