#include "yk/cyclotomic.hpp"

#include <map>

namespace yk {

namespace {

// Quotient of exact polynomial division a / b, b monic-leading, remainder
// required to vanish. Coefficients low degree first.
std::vector<Rational> exact_poly_div(std::vector<Rational> a,
                                     const std::vector<Rational>& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw Error("exact_poly_div: degree underflow");
  std::vector<Rational> q(a.size() - db, Rational(0));
  for (std::size_t i = a.size(); i-- > db;) {
    Rational c = a[i] / b[db];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (const auto& r : a)
    if (r != 0) throw Error("exact_poly_div: nonzero remainder");
  return q;
}

}  // namespace

int euler_phi(int d) {
  int result = d, n = d;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Rational> cyclotomic_polynomial(int d) {
  if (d < 1) throw Error("cyclotomic_polynomial: d must be >= 1");
  static std::map<int, std::vector<Rational>> memo;
  auto it = memo.find(d);
  if (it != memo.end()) return it->second;

  std::vector<Rational> result;
  if (d == 1) {
    result = {Rational(-1), Rational(1)};  // x - 1
  } else {
    std::vector<Rational> num(d + 1, Rational(0));
    num[0] = -1;
    num[d] = 1;  // x^d - 1
    for (int e = 1; e < d; ++e)
      if (d % e == 0) num = exact_poly_div(std::move(num), cyclotomic_polynomial(e));
    result = std::move(num);
  }
  memo[d] = result;
  return result;
}

Cyclotomic Cyclotomic::from_poly(int d, std::vector<Rational> coords) {
  if (d < 1) throw Error("Cyclotomic: conductor must be >= 1");
  const auto phi_poly = cyclotomic_polynomial(d);
  const std::size_t phi = phi_poly.size() - 1;
  // reduce modulo the monic Phi_d
  for (std::size_t i = coords.size(); i-- > phi;) {
    Rational c = coords[i];
    if (c == 0) continue;
    coords[i] = 0;
    for (std::size_t j = 0; j < phi; ++j) coords[i - phi + j] -= c * phi_poly[j];
  }
  coords.resize(phi, Rational(0));
  Cyclotomic out;
  out.d_ = d;
  out.c_ = std::move(coords);
  out.demote();
  return out;
}

Cyclotomic Cyclotomic::zeta_power(int d, long k) {
  long r = k % d;
  if (r < 0) r += d;
  std::vector<Rational> coords(static_cast<std::size_t>(r) + 1, Rational(0));
  coords.back() = 1;
  return from_poly(d, std::move(coords));
}

void Cyclotomic::demote() {
  if (d_ == 1) return;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return;
  Rational v = c_.empty() ? Rational(0) : c_[0];
  d_ = 1;
  c_.assign(1, v);
}

void Cyclotomic::promote_pair(Cyclotomic& a, Cyclotomic& b) {
  if (a.d_ == b.d_) return;
  if (a.d_ == 1) {
    Rational v = a.c_[0];
    a.d_ = b.d_;
    a.c_.assign(static_cast<std::size_t>(euler_phi(b.d_)), Rational(0));
    a.c_[0] = v;
    return;
  }
  if (b.d_ == 1) {
    promote_pair(b, a);
    return;
  }
  throw Error("Cyclotomic: mixed conductors " + std::to_string(a.d_) + " and " +
              std::to_string(b.d_));
}

bool Cyclotomic::is_zero() const {
  for (const auto& r : c_)
    if (r != 0) return false;
  return true;
}

const Rational& Cyclotomic::to_rational() const {
  if (d_ != 1) throw Error("Cyclotomic::to_rational: value is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& r : out.c_) r = -r;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  Cyclotomic rhs = o;
  promote_pair(*this, rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  demote();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  Cyclotomic rhs = o;
  promote_pair(*this, rhs);
  if (d_ == 1) {
    c_[0] *= rhs.c_[0];
    return *this;
  }
  std::vector<Rational> conv(c_.size() + rhs.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j)
      if (rhs.c_[j] != 0) conv[i + j] += c_[i] * rhs.c_[j];
  }
  *this = from_poly(d_, std::move(conv));
  return *this;
}

Cyclotomic& Cyclotomic::scale(const Rational& r) {
  for (auto& c : c_) c *= r;
  demote();
  return *this;
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) {
    if (d_ != 1) throw Error("Cyclotomic::pow: negative power of a non-rational value");
    return Cyclotomic(rational_pow(c_[0], e));
  }
  Cyclotomic acc(Rational(1)), b = *this;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  return d_ == o.d_ && c_ == o.c_;
}

std::string Cyclotomic::str() const {
  if (d_ == 1) return rational_str(c_[0]);
  std::string out = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ",";
    out += rational_str(c_[i]);
  }
  out += "]ζ" + std::to_string(d_);
  return out;
}

}  // namespace yk
