#include "lensracks/permutation.hpp"

#include <numeric>

namespace lensracks {

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<char> seen(n, 0);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v - 1])
      fail(Err::ValidationError, "images do not form a bijection on 1.." + std::to_string(n));
    seen[v - 1] = 1;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<int> im(size);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

int Permutation::apply(int i) const {
  if (i < 1 || i > size()) fail(Err::IndexOutOfRange, "permutation point " + std::to_string(i));
  return images_[i - 1];
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (images_[i - 1] != i) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(size(), 0);
  for (int i = 1; i <= size(); ++i) {
    if (seen[i - 1]) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[j - 1]) {
      seen[j - 1] = 1;
      cyc.push_back(j);
      j = images_[j - 1];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

long long Permutation::order() const {
  long long ord = 1;
  for (const auto& cyc : cycles()) ord = lcm_ll(ord, static_cast<long long>(cyc.size()));
  return ord;
}

}  // namespace lensracks
