#include "lensracks/rack.hpp"

#include <sstream>

namespace lensracks {

RackTable RackTable::validate(const std::vector<std::vector<int>>& matrix) {
  const int n = static_cast<int>(matrix.size());
  if (n == 0) fail(Err::NotSquare, "empty matrix");
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(matrix[i].size()) != n)
      fail(Err::NotSquare, "row " + std::to_string(i + 1) + " has " +
                               std::to_string(matrix[i].size()) + " entries, expected " +
                               std::to_string(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (matrix[i][j] < 1 || matrix[i][j] > n)
        fail(Err::EntryOutOfRange, "entry (" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) + ") = " +
                                       std::to_string(matrix[i][j]) + " outside 1.." +
                                       std::to_string(n));

  // Condition a): each column is a permutation of 1..n.
  for (int j = 0; j < n; ++j) {
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
      int v = matrix[i][j];
      if (seen[v - 1])
        fail(Err::ColumnNotPermutation, "column " + std::to_string(j + 1) +
                                            " repeats entry " + std::to_string(v));
      seen[v - 1] = 1;
    }
  }

  // Condition b): (i|>j)|>k == (i|>k)|>(j|>k), first witness row-major.
  auto at = [&](int i, int j) { return matrix[i - 1][j - 1]; };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (at(at(i, j), k) != at(at(i, k), at(j, k)))
          fail(Err::SelfDistributivityFailure,
               "self-distributivity fails at (i,j,k) = (" + std::to_string(i) + "," +
                   std::to_string(j) + "," + std::to_string(k) + ")");

  RackTable t;
  t.n_ = n;
  t.table_.resize(n * n);
  t.inv_table_.resize(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.table_[i * n + j] = matrix[i][j];
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i) {
      int k = at(i, j);  // i |> j = k, so inv(k, j) = i
      t.inv_table_[(k - 1) * n + (j - 1)] = i;
    }

  std::vector<int> diag(n);
  for (int i = 1; i <= n; ++i) diag[i - 1] = at(i, i);
  t.rank_ = static_cast<int>(Permutation(diag).order());
  return t;
}

RackTable RackTable::parse(const std::string& text, bool transposed) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<std::vector<int>> rows;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank
    if (n < 0) {
      if (first != "rack")
        fail(Err::SyntaxError, "line " + std::to_string(lineno) + ": expected 'rack <n>'");
      if (!(ls >> n) || n < 1)
        fail(Err::SyntaxError, "line " + std::to_string(lineno) + ": bad order");
      std::string extra;
      if (ls >> extra)
        fail(Err::SyntaxError, "line " + std::to_string(lineno) + ": trailing tokens");
      continue;
    }
    std::vector<int> row;
    try {
      row.push_back(std::stoi(first));
    } catch (...) {
      fail(Err::SyntaxError, "line " + std::to_string(lineno) + ": expected integer row");
    }
    int v;
    while (ls >> v) row.push_back(v);
    if (!ls.eof())
      fail(Err::SyntaxError, "line " + std::to_string(lineno) + ": expected integer row");
    rows.push_back(std::move(row));
  }
  if (n < 0) fail(Err::SyntaxError, "missing 'rack <n>' header");
  if (static_cast<int>(rows.size()) != n)
    fail(Err::SyntaxError, "expected " + std::to_string(n) + " rows, found " +
                               std::to_string(rows.size()));
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n) fail(Err::NotSquare, "row width differs from order");
  if (transposed) {
    std::vector<std::vector<int>> tr(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) tr[i][j] = rows[j][i];
    rows = std::move(tr);
  }
  return validate(rows);
}

std::string RackTable::serialize() const {
  std::ostringstream out;
  out << "rack " << n_ << "\n";
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (j) out << ' ';
      out << table_[i * n_ + j];
    }
    out << "\n";
  }
  return out.str();
}

void RackTable::check_range(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    fail(Err::IndexOutOfRange,
         "element pair (" + std::to_string(i) + "," + std::to_string(j) + ") outside 1.." +
             std::to_string(n_));
}

int RackTable::op(int i, int j) const {
  check_range(i, j);
  return table_[(i - 1) * n_ + (j - 1)];
}

int RackTable::inv_op(int i, int j) const {
  check_range(i, j);
  return inv_table_[(i - 1) * n_ + (j - 1)];
}

int RackTable::op_signed(int i, int j, int exponent) const {
  return exponent >= 0 ? op(i, j) : inv_op(i, j);
}

bool RackTable::operator_equivalent(int i, int j) const {
  check_range(i, j);
  for (int z = 1; z <= n_; ++z)
    if (op(z, i) != op(z, j)) return false;
  return true;
}

std::vector<std::vector<int>> RackTable::operator_classes() const {
  std::vector<std::vector<int>> classes;
  std::vector<char> placed(n_, 0);
  for (int i = 1; i <= n_; ++i) {
    if (placed[i - 1]) continue;
    std::vector<int> cls{i};
    placed[i - 1] = 1;
    for (int j = i + 1; j <= n_; ++j)
      if (!placed[j - 1] && operator_equivalent(i, j)) {
        cls.push_back(j);
        placed[j - 1] = 1;
      }
    classes.push_back(std::move(cls));
  }
  return classes;
}

Permutation RackTable::diagonal() const {
  std::vector<int> im(n_);
  for (int i = 1; i <= n_; ++i) im[i - 1] = table_[(i - 1) * n_ + (i - 1)];
  return Permutation(std::move(im));
}

int eval_word(const RackTable& t, int start, const OpWord& word, const std::vector<int>* arc_env) {
  int u = start;
  for (const auto& letter : word) {
    int y;
    if (letter.kind == OpLetter::Kind::Element) {
      y = letter.value;
    } else {
      if (!arc_env || letter.value < 1 || letter.value > static_cast<int>(arc_env->size()))
        fail(Err::UnresolvedReference, "arc reference " + std::to_string(letter.value) +
                                           " not resolved by environment");
      y = (*arc_env)[letter.value - 1];
    }
    u = t.op_signed(u, y, letter.exponent);
  }
  return u;
}

}  // namespace lensracks
