#pragma once

#include <string>
#include <vector>

#include "lensracks/permutation.hpp"

namespace lensracks {

// One letter of an operator word: a fixed rack element or a symbolic arc
// reference that an environment resolves at evaluation time.
struct OpLetter {
  enum class Kind { Element, ArcRef };
  Kind kind = Kind::Element;
  int value = 0;     // element in 1..n, or an arc id
  int exponent = 1;  // +1 or -1
};
using OpWord = std::vector<OpLetter>;

// Finite rack given by its operation table. table(i,j) = i |> j with rows
// the acted-on element; every column is a permutation and the operation is
// right self-distributive. Immutable after construction.
class RackTable {
 public:
  // Checks both rack-matrix conditions, reporting the first violation in
  // row-major scan order, and precomputes the inverse table and the rank.
  static RackTable validate(const std::vector<std::vector<int>>& matrix);

  // Text format: "rack <n>" then n rows of n integers. '#' comments and
  // blank lines are ignored. With transposed=true the file is read as
  // table(i,j) = j |> i.
  static RackTable parse(const std::string& text, bool transposed = false);
  std::string serialize() const;

  int order() const { return n_; }
  int rank() const { return rank_; }
  bool is_quandle() const { return rank_ == 1; }

  int op(int i, int j) const;      // i |> j
  int inv_op(int i, int j) const;  // the unique z with z |> j == i
  int op_signed(int i, int j, int exponent) const;

  bool operator_equivalent(int i, int j) const;
  std::vector<std::vector<int>> operator_classes() const;  // sorted blocks
  Permutation diagonal() const;

  const std::vector<int>& raw_table() const { return table_; }  // row-major

  bool operator==(const RackTable&) const = default;

 private:
  RackTable() = default;
  void check_range(int i, int j) const;

  int n_ = 0;
  int rank_ = 1;
  std::vector<int> table_;
  std::vector<int> inv_table_;
};

// Left-associative evaluation of an operator word starting from `start`.
// arc_env (1-based arcs, values = elements) resolves ArcRef letters.
int eval_word(const RackTable& t, int start, const OpWord& word,
              const std::vector<int>* arc_env = nullptr);

// All rack tables of order n found by column-wise backtracking with
// self-distributivity propagation; n <= 6 enforced. With up_to_iso, one
// representative per simultaneous relabeling class (the lexicographically
// least flattened table). Output sorted by flattened table.
std::vector<RackTable> enumerate_racks(int n, bool up_to_iso);

}  // namespace lensracks
