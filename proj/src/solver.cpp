#include "lensracks/solver.hpp"

#include <algorithm>

namespace lensracks {

std::vector<int> Homomorphism::flattened() const {
  std::vector<int> flat;
  for (const auto& lvl : levels) flat.insert(flat.end(), lvl.begin(), lvl.end());
  return flat;
}

std::vector<int> kernel_partition(const std::vector<int>& values) {
  std::vector<int> block(values.size());
  std::map<int, int> first;
  int next = 0;
  for (size_t i = 0; i < values.size(); ++i) {
    auto [it, inserted] = first.emplace(values[i], next);
    if (inserted) ++next;
    block[i] = it->second;
  }
  return block;
}

std::vector<LevelColoring> enumerate_level_colorings(const LensDiagram& d, const RackTable& t) {
  const int A = d.arc_count();
  const int n = t.order();
  const auto& crossings = d.crossings();

  // Crossings become checkable once their highest-numbered arc is colored;
  // an arc whose originator crossing is already fully determined is forced.
  std::vector<std::vector<int>> check_at(A + 1);
  std::vector<int> forcing(A + 1, -1);
  for (int i = 0; i < static_cast<int>(crossings.size()); ++i) {
    const Crossing& c = crossings[i];
    int hi = std::max({c.over, c.under_in, c.under_out});
    check_at[hi].push_back(i);
    if (c.under_out > c.under_in && c.under_out > c.over) forcing[c.under_out] = i;
  }

  std::vector<LevelColoring> out;
  LevelColoring colors(A, 0);
  auto consistent = [&](int arc) {
    for (int ci : check_at[arc]) {
      const Crossing& c = crossings[ci];
      int expect = t.op_signed(colors[c.under_in - 1], colors[c.over - 1], c.sign);
      if (colors[c.under_out - 1] != expect) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, int arc) -> void {
    if (arc > A) {
      out.push_back(colors);
      return;
    }
    if (forcing[arc] >= 0) {
      const Crossing& c = crossings[forcing[arc]];
      colors[arc - 1] = t.op_signed(colors[c.under_in - 1], colors[c.over - 1], c.sign);
      if (consistent(arc)) self(self, arc + 1);
      colors[arc - 1] = 0;
      return;
    }
    for (int v = 1; v <= n; ++v) {
      colors[arc - 1] = v;
      if (consistent(arc)) self(self, arc + 1);
    }
    colors[arc - 1] = 0;
  };
  dfs(dfs, 1);
  return out;  // DFS in ascending arc/value order emits lexicographically
}

// The disk word x_d^{eps_d} ... x_1^{eps_1} as arc references.
static OpWord disk_word(const LensDiagram& d) {
  OpWord w;
  const auto& strands = d.strands();
  for (int s = static_cast<int>(strands.size()) - 1; s >= 0; --s)
    w.push_back({OpLetter::Kind::ArcRef, strands[s].in_arc, strands[s].eps});
  return w;
}

int apply_A_power(const LensDiagram& d, const RackTable& t, const Homomorphism& f, int k, int arc,
                  int level) {
  // One wrap through the disk word at most, so k may reach p (the seed
  // pairs need k = 1 even when p = 1).
  const int p = d.p();
  if (k < 0 || k > p || level < 0 || level > p - 1)
    fail(Err::IndexOutOfRange, "A-power arguments outside range");
  if (arc < 1 || arc > d.arc_count()) fail(Err::IndexOutOfRange, "arc out of range");
  int j = level + k;
  if (j <= p - 1) return f.levels[j][arc - 1];
  int r = j % p;
  return eval_word(t, f.levels[r][arc - 1], disk_word(d), &f.levels[r]);
}

namespace {

// Pair store for the induced map: fwd and rev arrays over 1..n, 0 = unset.
struct SigmaBuilder {
  std::vector<int> fwd, rev;
  std::vector<std::pair<int, int>> pairs, todo;
  explicit SigmaBuilder(int n) : fwd(n + 1, 0), rev(n + 1, 0) {}

  bool add(int u, int v) {
    if (fwd[u]) return fwd[u] == v;
    if (rev[v]) return false;  // v would gain a second preimage
    fwd[u] = v;
    rev[v] = u;
    pairs.emplace_back(u, v);
    todo.emplace_back(u, v);
    return true;
  }

  bool close(const RackTable& t) {
    while (!todo.empty()) {
      auto [u, u2] = todo.back();
      todo.pop_back();
      // combine with every known pair in both orders, op and inv_op
      for (size_t i = 0; i < pairs.size(); ++i) {
        auto [v, v2] = pairs[i];
        if (!add(t.op(u, v), t.op(u2, v2))) return false;
        if (!add(t.inv_op(u, v), t.inv_op(u2, v2))) return false;
        if (!add(t.op(v, u), t.op(v2, u2))) return false;
        if (!add(t.inv_op(v, u), t.inv_op(v2, u2))) return false;
      }
    }
    return true;
  }
};

bool chain_and_wrap_ok(const LensDiagram& d, const RackTable& t, const Homomorphism& f) {
  const int p = d.p();
  for (const Strand& s : d.strands()) {
    for (int k = 0; k + 1 <= p - 1; ++k)
      if (f.levels[k][s.out_arc - 1] != f.levels[k + 1][s.in_arc - 1]) return false;
    if (f.levels[p - 1][s.out_arc - 1] != apply_A_power(d, t, f, 1, s.in_arc, p - 1))
      return false;
  }
  return true;
}

bool kernel_ok(const LensDiagram& d, const RackTable& t, const Homomorphism& f, KernelMode mode) {
  const int p = d.p();
  const int A = d.arc_count();
  if (mode == KernelMode::Closure) {
    SigmaBuilder sb(t.order());
    for (int j = 0; j < p; ++j)
      for (int a = 1; a <= A; ++a)
        if (!sb.add(f.levels[j][a - 1], apply_A_power(d, t, f, 1, a, j))) return false;
    return sb.close(t);
  }
  // GeneratorPairs: the kernel partition of s -> f(A^k s) must equal that of f
  // for every k in 1..p-1.
  std::vector<int> base = f.flattened();
  auto base_part = kernel_partition(base);
  for (int k = 1; k <= p - 1; ++k) {
    std::vector<int> shifted(base.size());
    size_t idx = 0;
    for (int j = 0; j < p; ++j)
      for (int a = 1; a <= A; ++a) shifted[idx++] = apply_A_power(d, t, f, k, a, j);
    if (kernel_partition(shifted) != base_part) return false;
  }
  return true;
}

}  // namespace

std::optional<std::map<int, int>> sigma_closure(const LensDiagram& d, const RackTable& t,
                                                const Homomorphism& f) {
  SigmaBuilder sb(t.order());
  const int p = d.p();
  for (int j = 0; j < p; ++j)
    for (int a = 1; a <= d.arc_count(); ++a)
      if (!sb.add(f.levels[j][a - 1], apply_A_power(d, t, f, 1, a, j))) return std::nullopt;
  if (!sb.close(t)) return std::nullopt;
  std::map<int, int> out;
  for (auto [u, v] : sb.pairs) out[u] = v;
  return out;
}

bool check_conditions(const LensDiagram& d, const RackTable& t, const Homomorphism& f,
                      KernelMode mode) {
  if (static_cast<int>(f.levels.size()) != d.p())
    fail(Err::BadArgument, "homomorphism level count differs from p");
  return chain_and_wrap_ok(d, t, f) && kernel_ok(d, t, f, mode);
}

std::vector<Homomorphism> enumerate_homomorphisms(const LensDiagram& d, const RackTable& t,
                                                  KernelMode mode) {
  const int p = d.p();
  const int dn = d.disk_degree();
  auto colorings = enumerate_level_colorings(d, t);
  std::vector<Homomorphism> out;
  if (colorings.empty()) return out;

  // Chain pruning: colorings grouped by the tuple of their strand in-arc
  // colors; level k must pick from the group keyed by level k-1's out-arc
  // colors.
  std::map<std::vector<int>, std::vector<int>> by_in;
  if (dn > 0) {
    for (int i = 0; i < static_cast<int>(colorings.size()); ++i) {
      std::vector<int> key(dn);
      for (int s = 0; s < dn; ++s) key[s] = colorings[i][d.strands()[s].in_arc - 1];
      by_in[key].push_back(i);
    }
  }

  Homomorphism f;
  f.levels.resize(p);
  auto dfs = [&](auto&& self, int level) -> void {
    if (level == p) {
      if (chain_and_wrap_ok(d, t, f) && kernel_ok(d, t, f, mode)) out.push_back(f);
      return;
    }
    if (level == 0 || dn == 0) {
      for (const auto& c : colorings) {
        f.levels[level] = c;
        self(self, level + 1);
      }
      return;
    }
    std::vector<int> key(dn);
    for (int s = 0; s < dn; ++s) key[s] = f.levels[level - 1][d.strands()[s].out_arc - 1];
    auto it = by_in.find(key);
    if (it == by_in.end()) return;
    for (int idx : it->second) {
      f.levels[level] = colorings[idx];
      self(self, level + 1);
    }
  };
  dfs(dfs, 0);
  return out;  // generated in lexicographic flattened order
}

std::vector<Homomorphism> oracle_enumerate_homomorphisms(const LensDiagram& d, const RackTable& t,
                                                         KernelMode mode) {
  const int p = d.p();
  const int A = d.arc_count();
  const int n = t.order();
  const long long digits = static_cast<long long>(A) * p;
  long long space = 1;
  for (long long i = 0; i < digits; ++i) {
    space *= n;
    if (space > 10'000'000LL)
      fail(Err::SearchSpaceTooLarge, "oracle space |X|^(A*p) exceeds 10^7");
  }

  // Everything below re-derives the conditions from the presentation,
  // independent of the main enumerator's machinery.
  auto crossing_ok = [&](const std::vector<int>& lvl) {
    for (const Crossing& c : d.crossings()) {
      int expect = c.sign > 0 ? t.op(lvl[c.under_in - 1], lvl[c.over - 1])
                              : t.inv_op(lvl[c.under_in - 1], lvl[c.over - 1]);
      if (lvl[c.under_out - 1] != expect) return false;
    }
    return true;
  };
  auto a_image = [&](const Homomorphism& f, int k, int arc, int level) {
    // f(A^k (arc, level)) straight from the two-case formula
    if (level + k <= p - 1) return f.levels[level + k][arc - 1];
    int r = (level + k) % p;
    int u = f.levels[r][arc - 1];
    const auto& ss = d.strands();
    for (int s = static_cast<int>(ss.size()) - 1; s >= 0; --s) {
      int y = f.levels[r][ss[s].in_arc - 1];
      u = ss[s].eps > 0 ? t.op(u, y) : t.inv_op(u, y);
    }
    return u;
  };
  auto conditions_ok = [&](const Homomorphism& f) {
    for (const Strand& s : d.strands()) {
      for (int k = 0; k <= p - 2; ++k)
        if (f.levels[k][s.out_arc - 1] != f.levels[k + 1][s.in_arc - 1]) return false;
      if (f.levels[p - 1][s.out_arc - 1] != a_image(f, 1, s.in_arc, p - 1)) return false;
    }
    if (mode == KernelMode::GeneratorPairs) {
      std::vector<int> base;
      for (int j = 0; j < p; ++j)
        for (int a = 1; a <= A; ++a) base.push_back(f.levels[j][a - 1]);
      for (int k = 1; k <= p - 1; ++k) {
        std::vector<int> shifted;
        for (int j = 0; j < p; ++j)
          for (int a = 1; a <= A; ++a) shifted.push_back(a_image(f, k, a, j));
        for (size_t x = 0; x < base.size(); ++x)
          for (size_t y = x + 1; y < base.size(); ++y)
            if ((base[x] == base[y]) != (shifted[x] == shifted[y])) return false;
      }
      return true;
    }
    // Closure mode: grow the pair set with a plain worklist over the pair
    // list; reject on a duplicate image or preimage.
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> fwd(n + 1, 0), rev(n + 1, 0);
    size_t scanned = 0;
    auto push = [&](int u, int v) {
      if (fwd[u]) return fwd[u] == v;
      if (rev[v]) return false;
      fwd[u] = v;
      rev[v] = u;
      pairs.emplace_back(u, v);
      return true;
    };
    for (int j = 0; j < p; ++j)
      for (int a = 1; a <= A; ++a)
        if (!push(f.levels[j][a - 1], a_image(f, 1, a, j))) return false;
    while (scanned < pairs.size()) {
      auto [u, u2] = pairs[scanned++];
      for (size_t i = 0; i < pairs.size(); ++i) {
        auto [v, v2] = pairs[i];
        if (!push(t.op(u, v), t.op(u2, v2))) return false;
        if (!push(t.inv_op(u, v), t.inv_op(u2, v2))) return false;
        if (!push(t.op(v, u), t.op(v2, u2))) return false;
        if (!push(t.inv_op(v, u), t.inv_op(v2, u2))) return false;
      }
    }
    return true;
  };

  std::vector<Homomorphism> out;
  std::vector<int> flat(digits, 1);
  for (;;) {
    Homomorphism f;
    f.levels.assign(p, std::vector<int>(A));
    for (int j = 0; j < p; ++j)
      for (int a = 0; a < A; ++a) f.levels[j][a] = flat[j * A + a];
    bool ok = true;
    for (int j = 0; j < p && ok; ++j) ok = crossing_ok(f.levels[j]);
    if (ok && conditions_ok(f)) out.push_back(std::move(f));
    int i = static_cast<int>(digits) - 1;
    while (i >= 0 && flat[i] == n) flat[i--] = 1;
    if (i < 0) break;
    ++flat[i];
  }
  return out;
}

long long count_homomorphisms(const LensDiagram& d, const RackTable& t, KernelMode mode) {
  return static_cast<long long>(enumerate_homomorphisms(d, t, mode).size());
}

}  // namespace lensracks
