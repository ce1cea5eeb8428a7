#include "yk/algebra.hpp"

#include <algorithm>

namespace yk {

namespace {

int mod_d(long k, int d) {
  long r = k % d;
  if (r < 0) r += d;
  return static_cast<int>(r);
}

}  // namespace

YMonomial::YMonomial(std::vector<int> framings, Permutation perm)
    : framings_(std::move(framings)), perm_(std::move(perm)) {
  if (static_cast<int>(framings_.size()) != perm_.size())
    throw Error("YMonomial: framings/permutation size mismatch");
}

YMonomial YMonomial::one(int n) {
  return YMonomial(std::vector<int>(static_cast<std::size_t>(n), 0), Permutation(n));
}

std::vector<int> YMonomial::run_word() const {
  // Peel the top run repeatedly: if pi moves m with preimage i of m, the
  // word ends with the block g_{m-1} ... g_i and the remainder fixes m.
  std::vector<std::vector<int>> runs;
  Permutation pi = perm_;
  int m;
  while ((m = pi.max_moved()) > 0) {
    int i = pi.preimage(m);
    std::vector<int> run;
    for (int l = m - 1; l >= i; --l) run.push_back(l);
    runs.push_back(std::move(run));
    std::vector<int> img(static_cast<std::size_t>(pi.size()));
    for (int x = 1; x <= pi.size(); ++x) {
      if (x >= i && x < m)
        img[static_cast<std::size_t>(x - 1)] = pi.apply(x + 1);
      else if (x == m)
        img[static_cast<std::size_t>(x - 1)] = m;
      else
        img[static_cast<std::size_t>(x - 1)] = pi.apply(x);
    }
    pi = Permutation::from_images(std::move(img));
  }
  std::vector<int> word;
  for (auto it = runs.rbegin(); it != runs.rend(); ++it)
    word.insert(word.end(), it->begin(), it->end());
  return word;
}

std::string YMonomial::str() const {
  std::string s = "t";
  for (std::size_t i = 0; i < framings_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(framings_[i]);
  }
  s += "|g";
  for (int l : run_word()) s += std::to_string(l) + ".";
  return s;
}

YElement YElement::identity(int d, int n) {
  YElement e(d, n);
  e.add_term(YMonomial::one(n), MultiLaurent::constant(Rational(1)));
  return e;
}

void YElement::add_term(const YMonomial& m, const MultiLaurent& coeff) {
  if (coeff.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

YElement& YElement::operator+=(const YElement& o) {
  if (d_ != o.d_ || n_ != o.n_) throw Error("YElement: (d,n) mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

YElement& YElement::operator-=(const YElement& o) {
  if (d_ != o.d_ || n_ != o.n_) throw Error("YElement: (d,n) mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

YElement& YElement::scale(const MultiLaurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  std::map<YMonomial, MultiLaurent> out;
  for (auto& [m, coeff] : terms_) {
    MultiLaurent nc = coeff * c;
    if (!nc.is_zero()) out.emplace(m, std::move(nc));
  }
  terms_ = std::move(out);
  return *this;
}

YElement YElement::right_mul_t(int j, long k) const {
  if (j < 1 || j > n_) throw Error("right_mul_t: strand out of range");
  YElement out(d_, n_);
  for (const auto& [m, c] : terms_) {
    std::vector<int> f = m.framings();
    int target = m.perm().apply(j);
    f[static_cast<std::size_t>(target - 1)] =
        mod_d(f[static_cast<std::size_t>(target - 1)] + k, d_);
    out.add_term(YMonomial(std::move(f), m.perm()), c);
  }
  return out;
}

YElement YElement::right_mul_g(int j, AlgebraStats* stats) const {
  if (j < 1 || j > n_ - 1) throw Error("right_mul_g: index out of range");
  YElement out(d_, n_);
  const MultiLaurent qdiff = q_minus_qinv();
  for (const auto& [m, c] : terms_) {
    const Permutation& u = m.perm();
    if (u.right_lengthens(j)) {
      out.add_term(YMonomial(m.framings(), u.right_transposition(j)), c);
      continue;
    }
    // u = v s_j with l(v) < l(u): g_u g_j = g_v + (q - q^-1) e-block g_u,
    // the e-block framings landing on strands v(j) = u(j+1), v(j+1) = u(j).
    if (stats) ++stats->quadratic_firings;
    Permutation v = u.right_transposition(j);
    out.add_term(YMonomial(m.framings(), v), c);
    const int a = u.apply(j + 1);  // v(j)
    const int b = u.apply(j);      // v(j+1)
    MultiLaurent spread = c * qdiff;
    spread.scale(Rational(1, d_));
    for (int s = 1; s <= d_; ++s) {
      std::vector<int> f = m.framings();
      f[static_cast<std::size_t>(a - 1)] = mod_d(f[static_cast<std::size_t>(a - 1)] + s, d_);
      f[static_cast<std::size_t>(b - 1)] = mod_d(f[static_cast<std::size_t>(b - 1)] - s, d_);
      out.add_term(YMonomial(std::move(f), u), spread);
    }
  }
  return out;
}

bool YElement::operator==(const YElement& o) const {
  return d_ == o.d_ && n_ == o.n_ && terms_ == o.terms_;
}

std::string YElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*" + m.str();
  }
  return s;
}

YElement multiply(const YElement& a, const YElement& b, AlgebraStats* stats) {
  if (a.d() != b.d() || a.strands() != b.strands())
    throw Error("multiply: (d,n) mismatch");
  YElement out(a.d(), a.strands());
  for (const auto& [m, c] : b.terms()) {
    YElement acc = a;
    for (int j = 1; j <= m.strands(); ++j) {
      int k = m.framings()[static_cast<std::size_t>(j - 1)];
      if (k != 0) acc = acc.right_mul_t(j, k);
    }
    for (int l : m.run_word()) acc = acc.right_mul_g(l, stats);
    acc.scale(c);
    out += acc;
  }
  return out;
}

YElement idempotent_e(int d, int n, int i) {
  if (i < 1 || i > n - 1) throw Error("idempotent_e: index out of range");
  YElement e(d, n);
  MultiLaurent w = MultiLaurent::constant(Rational(1, d));
  for (int s = 1; s <= d; ++s) {
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    f[static_cast<std::size_t>(i - 1)] = mod_d(s, d);
    f[static_cast<std::size_t>(i)] = mod_d(-s, d);
    e.add_term(YMonomial(std::move(f), Permutation(n)), w);
  }
  return e;
}

YElement gen_g(int d, int n, int i, long r) {
  if (i < 1 || i > n - 1) throw Error("gen_g: index out of range");
  if (r == 0) return YElement::identity(d, n);

  const YElement one = YElement::identity(d, n);
  const YElement e = idempotent_e(d, n, i);
  YElement g(d, n);
  g.add_term(YMonomial(std::vector<int>(static_cast<std::size_t>(n), 0),
                       Permutation(n).right_transposition(i)),
             MultiLaurent::constant(Rational(1)));
  YElement eg = multiply(e, g);

  const long m = r > 0 ? r : -r;
  const MultiLaurent A = alternating_q_sum(static_cast<int>(m));
  const MultiLaurent B = alternating_q_sum(static_cast<int>(m) - 1);
  const bool odd = (m % 2) != 0;

  // r > 0: g^r = (1-e) * (g or 1) + A eg + B e.
  // r < 0: obtained from the same formula for the inverse presentation
  //        (q -> q^-1) followed by g^-1 = g - (q-q^-1) e.
  YElement out(d, n);
  YElement head = odd ? (g - multiply(e, g)) : (one - e);
  out += head;
  if (r > 0) {
    YElement t1 = eg;
    t1.scale(A);
    YElement t2 = e;
    t2.scale(B);
    out += t1;
    out += t2;
  } else {
    const MultiLaurent qd = q_minus_qinv();
    if (odd) {
      YElement t1 = eg;
      t1.scale(A);
      YElement t2 = e;
      t2.scale(A * qd + B);
      out += t1;
      out -= t2;
    } else {
      YElement t1 = eg;
      t1.scale(A);
      YElement t2 = e;
      t2.scale(A * qd + B);
      out -= t1;
      out += t2;
    }
  }
  return out;
}

namespace {

YElement embed_braid_letters(YElement acc, const std::vector<BraidLetter>& letters,
                             const EmbedOptions& opts, AlgebraStats* stats) {
  const int d = acc.d(), n = acc.strands();
  for (const auto& l : letters) {
    if (opts.use_power_formula || l.exponent == 1 || l.exponent == -1) {
      acc = multiply(acc, gen_g(d, n, l.index, l.exponent), stats);
    } else {
      const long sign = l.exponent > 0 ? 1 : -1;
      YElement step = gen_g(d, n, l.index, sign);
      for (long k = 0; k < std::labs(l.exponent); ++k) acc = multiply(acc, step, stats);
    }
  }
  return acc;
}

}  // namespace

YElement embed(const FramedBraidWord& w, int d, EmbedOptions opts, AlgebraStats* stats) {
  YElement acc = YElement::identity(d, w.strands());
  for (int j = 1; j <= w.strands(); ++j) {
    long k = w.framings()[static_cast<std::size_t>(j - 1)];
    if (k % d != 0) acc = acc.right_mul_t(j, k);
  }
  return embed_braid_letters(std::move(acc), w.word().letters(), opts, stats);
}

YElement embed(const BraidWord& w, int d, EmbedOptions opts, AlgebraStats* stats) {
  return embed_braid_letters(YElement::identity(d, w.strands()), w.letters(), opts, stats);
}

YElement embed(const SingularBraidWord& w, int d, EmbedOptions opts, AlgebraStats* stats) {
  const int n = w.strands();
  YElement acc = YElement::identity(d, n);
  for (const auto& l : w.letters()) {
    if (l.singular) {
      const YElement e = idempotent_e(d, n, l.index);
      const long reps = opts.use_power_formula ? 1 : l.exponent;  // e_i is idempotent
      for (long k = 0; k < reps; ++k) acc = multiply(acc, e, stats);
    } else {
      acc = embed_braid_letters(std::move(acc), {{l.index, l.exponent}}, opts, stats);
    }
  }
  return acc;
}

std::vector<YMonomial> enumerate_basis(int d, int n) {
  double size = 1;
  for (int i = 2; i <= n; ++i) size *= i;
  for (int i = 0; i < n; ++i) size *= d;
  if (size > 1e6) throw Error("enumerate_basis: n! d^n exceeds the guard");

  std::vector<Permutation> perms;
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  do {
    perms.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));

  std::vector<YMonomial> out;
  std::vector<int> f(static_cast<std::size_t>(n), 0);
  while (true) {
    for (const auto& p : perms) out.emplace_back(f, p);
    int j = 0;
    while (j < n && ++f[static_cast<std::size_t>(j)] == d) {
      f[static_cast<std::size_t>(j)] = 0;
      ++j;
    }
    if (j == n) break;
  }
  return out;
}

}  // namespace yk
