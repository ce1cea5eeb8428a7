#ifndef YK_CYCLOTOMIC_HPP
#define YK_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "yk/rational.hpp"

namespace yk {

// The d-th cyclotomic polynomial, coefficients low degree first, monic,
// integer valued. Computed by exact division of x^d - 1 by the cyclotomic
// polynomials of the proper divisors of d.
std::vector<Rational> cyclotomic_polynomial(int d);

int euler_phi(int d);

/*
  An element of the d-th cyclotomic field Q(zeta_d), stored as its unique
  representative modulo the d-th cyclotomic polynomial: phi(d) rational
  coordinates in the power basis 1, zeta, ..., zeta^{phi(d)-1}.

  Elements whose coordinates beyond the constant one vanish are demoted to
  conductor 1, so rational values compare equal regardless of the conductor
  they were produced in. Arithmetic between two non-rational elements of
  different conductors is rejected; it never occurs in trace computations,
  which stay inside a single Q(zeta_d).
*/
class Cyclotomic {
public:
  Cyclotomic() : d_(1), c_(1, Rational(0)) {}
  explicit Cyclotomic(const Rational& r) : d_(1), c_(1, r) {}
  explicit Cyclotomic(long n) : d_(1), c_(1, Rational(n)) {}

  // Canonical representative of zeta_d^k (k may be any integer).
  static Cyclotomic zeta_power(int d, long k);

  // From arbitrary-degree coordinates in powers of zeta_d; reduced mod Phi_d.
  static Cyclotomic from_poly(int d, std::vector<Rational> coords);

  int conductor() const { return d_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const { return d_ == 1; }
  const Rational& to_rational() const;  // requires is_rational()

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

  Cyclotomic& scale(const Rational& r);
  Cyclotomic pow(long e) const;  // e < 0 only for rational values

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Rational form when conductor 1, otherwise "[c0,c1,...]ζ<d>".
  std::string str() const;

private:
  void demote();
  static void promote_pair(Cyclotomic& a, Cyclotomic& b);

  int d_;
  std::vector<Rational> c_;  // size euler_phi(d_)
};

}  // namespace yk

#endif
