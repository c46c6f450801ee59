#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace lensracks {

// Exponent vectors ordered with the first variable varying fastest, which
// matches the usual display order 1, q1, q2, q1*q2.
struct ColexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  }
};

// Sparse polynomial with nonnegative integer coefficients over named
// variables; zero coefficients are never stored.
struct Poly {
  std::vector<std::string> vars;
  std::map<std::vector<int>, long long, ColexLess> terms;

  void add(const std::vector<int>& exps, long long coeff);
  std::string text() const;
  std::string machine_text(const std::string& name) const;
  Poly specialize_to_one(const std::string& var) const;
  long long value_at_one() const;

  bool operator==(const Poly& o) const { return vars == o.vars && terms == o.terms; }
};

}  // namespace lensracks
