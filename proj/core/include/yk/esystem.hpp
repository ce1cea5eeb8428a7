#ifndef YK_ESYSTEM_HPP
#define YK_ESYSTEM_HPP

#include <optional>
#include <vector>

#include "yk/cyclotomic.hpp"

namespace yk {

/*
  Solution of the E-system for a nonempty subset D of Z/dZ: the specialized
  framing parameters x_1..x_{d-1} together with E_D = 1/|D|. Constructed
  values are always checked against the defining equations; a construction
  that fails verification aborts, since it would mean the closed formula
  used to build the values is wrong.
*/
struct ESolution {
  int d = 1;
  std::vector<int> D;           // sorted residues in [0, d)
  std::vector<Cyclotomic> x;    // x_1..x_{d-1}
  Rational E;                   // 1/|D|

  const Cyclotomic& x_value(int k) const;  // 1 <= k <= d-1
  std::string str() const;
  bool operator==(const ESolution& o) const { return d == o.d && D == o.D; }
};

struct EVerifyResult {
  bool ok = true;
  int failing_m = 0;  // first failing equation index when !ok, 0 otherwise
};

// Exact check of E^{(m)} = x_m E for m = 1..d-1 plus E != 0, for candidate
// values x_1..x_{d-1} (x_0 = 1 implicit, indices mod d).
EVerifyResult verify_esystem(int d, const std::vector<Cyclotomic>& values);

// E of a candidate tuple: (1/d) sum_s x_s x_{d-s}.
Cyclotomic esystem_e(int d, const std::vector<Cyclotomic>& values);

ESolution solve_esystem(int d, std::vector<int> D);

std::vector<ESolution> all_esolutions(int d);

}  // namespace yk

#endif
