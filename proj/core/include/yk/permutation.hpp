#ifndef YK_PERMUTATION_HPP
#define YK_PERMUTATION_HPP

#include <compare>
#include <string>
#include <vector>

#include "yk/error.hpp"

namespace yk {

/*
  Permutation of {1..n}, stored as the image vector. Words act with the
  rightmost letter applied first: perm(sigma_{i_1} ... sigma_{i_r}) =
  s_{i_1} o ... o s_{i_r}, so that the framing transport identity
  sigma_w t_k = t_{pi(k)} sigma_w holds with pi = perm(w).
*/
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int n) : img_(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) img_[static_cast<std::size_t>(i)] = i + 1;
  }
  static Permutation from_images(std::vector<int> images);

  int size() const { return static_cast<int>(img_.size()); }
  int apply(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }
  int preimage(int i) const;

  bool is_identity() const;
  // Largest strand moved by the permutation, 0 for the identity.
  int max_moved() const;

  // (a o b)(x) = a(b(x)).
  static Permutation compose(const Permutation& a, const Permutation& b);
  Permutation inverse() const;
  // *this o s_j (swap the images at positions j, j+1; 1 <= j <= n-1).
  Permutation right_transposition(int j) const;
  bool right_lengthens(int j) const {
    return apply(j) < apply(j + 1);
  }

  long inversions() const;
  std::vector<std::vector<int>> cycles() const;  // includes fixed points

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  std::string str() const;

private:
  std::vector<int> img_;
};

}  // namespace yk

#endif
