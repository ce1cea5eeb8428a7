#include "yk/permutation.hpp"

#include <algorithm>

namespace yk {

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v - 1)])
      throw Error("Permutation: invalid image vector");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  Permutation p;
  p.img_ = std::move(images);
  return p;
}

int Permutation::preimage(int i) const {
  for (int j = 1; j <= size(); ++j)
    if (apply(j) == i) return j;
  throw Error("Permutation: preimage out of range");
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (apply(i) != i) return false;
  return true;
}

int Permutation::max_moved() const {
  for (int i = size(); i >= 1; --i)
    if (apply(i) != i) return i;
  return 0;
}

Permutation Permutation::compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error("Permutation: size mismatch");
  Permutation out(a.size());
  for (int i = 1; i <= a.size(); ++i)
    out.img_[static_cast<std::size_t>(i - 1)] = a.apply(b.apply(i));
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(size());
  for (int i = 1; i <= size(); ++i) out.img_[static_cast<std::size_t>(apply(i) - 1)] = i;
  return out;
}

Permutation Permutation::right_transposition(int j) const {
  if (j < 1 || j >= size()) throw Error("Permutation: transposition index out of range");
  Permutation out = *this;
  std::swap(out.img_[static_cast<std::size_t>(j - 1)], out.img_[static_cast<std::size_t>(j)]);
  return out;
}

long Permutation::inversions() const {
  long c = 0;
  for (int i = 1; i <= size(); ++i)
    for (int j = i + 1; j <= size(); ++j)
      if (apply(i) > apply(j)) ++c;
  return c;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<bool> seen(img_.size(), false);
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= size(); ++i) {
    if (seen[static_cast<std::size_t>(i - 1)]) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[static_cast<std::size_t>(j - 1)]) {
      seen[static_cast<std::size_t>(j - 1)] = true;
      cyc.push_back(j);
      j = apply(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::str() const {
  std::string s = "[";
  for (int i = 1; i <= size(); ++i) {
    if (i > 1) s += ",";
    s += std::to_string(apply(i));
  }
  return s + "]";
}

}  // namespace yk
