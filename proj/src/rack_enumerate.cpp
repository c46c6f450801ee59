#include <algorithm>
#include <numeric>

#include "lensracks/rack.hpp"

namespace lensracks {

namespace {

// M is row-major with 0 meaning "column not placed yet".
// Checks every self-distributivity triple whose three lookups became
// available when column c was placed.
bool triples_ok_after(const std::vector<int>& m, int n, int c) {
  auto at = [&](int i, int j) { return m[(i - 1) * n + (j - 1)]; };
  for (int j = 1; j <= c; ++j)
    for (int k = 1; k <= c; ++k) {
      int jk = at(j, k);
      if (jk > c) continue;
      if (j != c && k != c && jk != c) continue;  // already checked earlier
      for (int i = 1; i <= n; ++i)
        if (at(at(i, j), k) != at(at(i, k), jk)) return false;
    }
  return true;
}

void relabeled(const std::vector<int>& m, int n, const std::vector<int>& perm,
               std::vector<int>& out) {
  // perm maps old labels to new labels (1-based); out[(a-1)*n+(b-1)] for new labels a,b.
  std::vector<int> inv(n + 1);
  for (int x = 1; x <= n; ++x) inv[perm[x - 1]] = x;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      out[(a - 1) * n + (b - 1)] = perm[m[(inv[a] - 1) * n + (inv[b] - 1)] - 1];
}

bool is_canonical(const std::vector<int>& m, int n) {
  std::vector<int> perm(n), cand(n * n);
  std::iota(perm.begin(), perm.end(), 1);
  while (std::next_permutation(perm.begin(), perm.end())) {
    relabeled(m, n, perm, cand);
    if (std::lexicographical_compare(cand.begin(), cand.end(), m.begin(), m.end())) return false;
  }
  return true;
}

}  // namespace

std::vector<RackTable> enumerate_racks(int n, bool up_to_iso) {
  if (n < 1) fail(Err::BadArgument, "order must be positive");
  if (n > 6) fail(Err::OrderTooLarge, "order " + std::to_string(n) + " exceeds search budget 6");

  std::vector<std::vector<int>> perms;
  {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  std::vector<int> m(n * n, 0);
  std::vector<std::vector<int>> found;

  // Columns are permutations of 1..n; place them left to right and prune on
  // every self-distributivity triple that becomes fully determined.
  auto place = [&](auto&& self, int col) -> void {
    if (col > n) {
      found.push_back(m);
      return;
    }
    for (const auto& p : perms) {
      for (int i = 1; i <= n; ++i) m[(i - 1) * n + (col - 1)] = p[i - 1];
      if (triples_ok_after(m, n, col)) self(self, col + 1);
    }
    for (int i = 1; i <= n; ++i) m[(i - 1) * n + (col - 1)] = 0;
  };
  place(place, 1);

  std::vector<RackTable> out;
  for (const auto& tab : found) {
    if (up_to_iso && !is_canonical(tab, n)) continue;
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rows[i][j] = tab[i * n + j];
    out.push_back(RackTable::validate(rows));
  }
  std::sort(out.begin(), out.end(),
            [](const RackTable& a, const RackTable& b) { return a.raw_table() < b.raw_table(); });
  return out;
}

}  // namespace lensracks
