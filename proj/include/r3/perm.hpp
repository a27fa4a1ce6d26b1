#pragma once

#include <cstdint>
#include <vector>

#include "r3/bigint.hpp"

namespace r3 {

// Permutation of {0,...,n-1} stored as an image list.
// Composition is left-to-right: (a * b)[x] == b[a[x]], so points are acted
// on from the right and x^(ab) = (x^a)^b.
class Perm {
public:
  Perm() = default;

  explicit Perm(unsigned n) : img_(n)
  {
    for (unsigned i = 0; i < n; ++i)
      img_[i] = i;
  }

  explicit Perm(std::vector<uint32_t> images) : img_(std::move(images)) {}

  static Perm identity(unsigned n) { return Perm(n); }

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }

  uint32_t operator[](uint32_t x) const { return img_[x]; }

  const std::vector<uint32_t>& images() const { return img_; }

  bool is_identity() const
  {
    for (uint32_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i)
        return false;
    return true;
  }

  bool is_valid() const;

  Perm inverse() const
  {
    std::vector<uint32_t> inv(img_.size());
    for (uint32_t i = 0; i < img_.size(); ++i)
      inv[img_[i]] = i;
    return Perm(std::move(inv));
  }

  Perm operator*(const Perm& o) const
  {
    std::vector<uint32_t> r(img_.size());
    for (uint32_t i = 0; i < img_.size(); ++i)
      r[i] = o.img_[img_[i]];
    return Perm(std::move(r));
  }

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  // degree() when identity
  uint32_t smallest_moved() const
  {
    for (uint32_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i)
        return i;
    return degree();
  }

private:
  std::vector<uint32_t> img_;
};

// t^-1 * g * t
Perm conjugate(const Perm& g, const Perm& t);

// a^-1 b^-1 a b
Perm commutator(const Perm& a, const Perm& b);

std::vector<std::vector<uint32_t>> cycle_decomposition(const Perm& g);

Bigint element_order(const Perm& g);

} // namespace r3
