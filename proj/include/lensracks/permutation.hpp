#pragma once

#include <vector>

#include "lensracks/errors.hpp"

namespace lensracks {

// Permutation of {1..size}; images_[i-1] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int size);

  int size() const { return static_cast<int>(images_.size()); }
  int apply(int i) const;
  bool is_identity() const;
  std::vector<std::vector<int>> cycles() const;  // all cycles, fixed points included
  long long order() const;                       // lcm of cycle lengths

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

long long lcm_ll(long long a, long long b);

}  // namespace lensracks
