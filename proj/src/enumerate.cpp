#include "coopkit/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>

namespace coopkit {

namespace {

using LeqMatrix = std::vector<std::vector<bool>>;

// All partial orders on {0..n-1} with 0 as least element. Pairs of distinct
// nonzero elements get one of three states (incomparable, <, >), so
// antisymmetry is structural; transitivity is filtered.
std::vector<LeqMatrix> orders_with_least(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<LeqMatrix> out;
  std::vector<int> state(pairs.size(), 0);
  for (;;) {
    LeqMatrix leq(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a) {
      leq[a][a] = true;
      leq[0][a] = true;
    }
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (state[p] == 1) leq[pairs[p].first][pairs[p].second] = true;
      if (state[p] == 2) leq[pairs[p].second][pairs[p].first] = true;
    }
    bool transitive = true;
    for (int a = 0; a < n && transitive; ++a)
      for (int b = 0; b < n && transitive; ++b)
        for (int c = 0; c < n && transitive; ++c)
          if (leq[a][b] && leq[b][c] && !leq[a][c]) transitive = false;
    if (transitive) out.push_back(std::move(leq));

    std::size_t p = 0;
    while (p < pairs.size() && state[p] == 2) state[p++] = 0;
    if (p == pairs.size()) break;
    ++state[p];
  }
  return out;
}

// Least y with plus[x][y] >= z, for every (x, z); nullopt when some residual
// set has no least element.
std::optional<std::vector<std::vector<int>>> residuals(const LeqMatrix& leq,
                                                       const std::vector<std::vector<int>>& plus) {
  const int n = static_cast<int>(plus.size());
  std::vector<std::vector<int>> imp(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      std::vector<int> candidates;
      for (int y = 0; y < n; ++y)
        if (leq[z][plus[x][y]]) candidates.push_back(y);
      int least = -1;
      for (int y0 : candidates) {
        bool ok = true;
        for (int y : candidates)
          if (!leq[y0][y]) {
            ok = false;
            break;
          }
        if (ok) {
          least = y0;
          break;
        }
      }
      if (least < 0) return std::nullopt;
      imp[x][z] = least;
    }
  return imp;
}

void complete_plus_tables(const LeqMatrix& leq, int n,
                          const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < n; ++i)
    for (int j = i; j < n; ++j) cells.emplace_back(i, j);

  std::vector<std::vector<int>> plus(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x) plus[0][x] = plus[x][0] = x;

  auto filled = [&](int a, int b) { return plus[a][b] >= 0; };

  auto monotone_against_filled = [&](int i, int j, int v) {
    // candidate plus[i][j] = v against every determined cell sharing a row
    for (int a : {i, j}) {
      int o = (a == i) ? j : i;
      for (int y = 0; y < n; ++y) {
        if (!filled(a, y)) continue;
        if (leq[y][o] && !leq[plus[a][y]][v]) return false;
        if (leq[o][y] && !leq[v][plus[a][y]]) return false;
      }
    }
    return true;
  };

  auto dfs = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if (plus[plus[a][b]][c] != plus[a][plus[b][c]]) return;
      emit(plus);
      return;
    }
    auto [i, j] = cells[k];
    for (int v = 0; v < n; ++v) {
      if (!leq[i][v] || !leq[j][v]) continue;  // a + b >= a, b
      if (!monotone_against_filled(i, j, v)) continue;
      plus[i][j] = plus[j][i] = v;
      self(self, k + 1);
      plus[i][j] = plus[j][i] = -1;
    }
  };
  dfs(dfs, 0);
}

// Some y with y -> x = y, for every x; the unique halving of a finite coop.
std::optional<std::vector<int>> build_half_table(const FiniteAlgebra& a) {
  std::vector<int> half(a.size, -1);
  for (int x = 0; x < a.size; ++x) {
    for (int y = 0; y < a.size; ++y)
      if (a.imp_table[y][x] == y) {
        half[x] = y;
        break;
      }
    if (half[x] < 0) return std::nullopt;
  }
  return half;
}

bool needs_half(AlgebraClass cls) {
  return cls == AlgebraClass::Coop || cls == AlgebraClass::BoundedCoop ||
         cls == AlgebraClass::InvolutiveCoop;
}

}  // namespace

std::vector<int> canonical_key(const FiniteAlgebra& a) {
  const int n = a.size;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> arranged(2 * n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        arranged[perm[x] * n + perm[y]] = perm[a.plus[x][y]];
        arranged[n * n + perm[x] * n + perm[y]] = perm[a.imp_table[x][y]];
      }
    if (best.empty() || arranged < best) best = arranged;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

std::vector<FiniteAlgebra> enumerate_algebras(int max_size, AlgebraClass cls) {
  std::vector<FiniteAlgebra> out;
  const auto& laws = laws_for_class(cls);

  for (int n = 1; n <= max_size; ++n) {
    if (n == 1) {
      FiniteAlgebra t = make_trivial();
      if (!needs_half(cls)) t.half_table.reset();
      if (check_laws(t, LawMode::exhaustive(), laws).all_pass()) out.push_back(t);
      continue;
    }
    std::set<std::vector<int>> seen;
    for (const auto& leq : orders_with_least(n)) {
      complete_plus_tables(leq, n, [&](const std::vector<std::vector<int>>& plus) {
        auto imp = residuals(leq, plus);
        if (!imp) return;
        FiniteAlgebra a;
        a.size = n;
        a.zero = 0;
        a.plus = plus;
        a.imp_table = *imp;
        if (auto one = find_annihilator(a)) a.one = one;
        if (needs_half(cls)) {
          auto half = build_half_table(a);
          if (!half) return;
          a.half_table = std::move(half);
        }
        if (!check_laws(a, LawMode::exhaustive(), laws).all_pass()) return;
        if (seen.insert(canonical_key(a)).second) out.push_back(std::move(a));
      });
    }
  }
  return out;
}

long long count_small_coops(int max_n) {
  long long found = 0;
  for (int n = 2; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i < n; ++i)
      for (int j = i; j < n; ++j) cells.emplace_back(i, j);

    std::vector<int> choice(cells.size(), 0);
    for (;;) {
      std::vector<std::vector<int>> plus(n, std::vector<int>(n));
      for (int x = 0; x < n; ++x) plus[0][x] = plus[x][0] = x;
      for (std::size_t c = 0; c < cells.size(); ++c)
        plus[cells[c].first][cells[c].second] = plus[cells[c].second][cells[c].first] =
            choice[c];

      bool assoc = true;
      for (int a = 0; a < n && assoc; ++a)
        for (int b = 0; b < n && assoc; ++b)
          for (int c = 0; c < n && assoc; ++c)
            if (plus[plus[a][b]][c] != plus[a][plus[b][c]]) assoc = false;

      if (assoc) {
        // every implication table against this monoid
        const long long total = [&] {
          long long t = 1;
          for (int i = 0; i < n * n; ++i) t *= n;
          return t;
        }();
        for (long long code = 0; code < total; ++code) {
          FiniteAlgebra a;
          a.size = n;
          a.zero = 0;
          a.plus = plus;
          a.imp_table.assign(n, std::vector<int>(n));
          long long rest = code;
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
              a.imp_table[x][y] = static_cast<int>(rest % n);
              rest /= n;
            }
          if (!check_laws(a, LawMode::exhaustive(), laws_for_class(AlgebraClass::Hoop))
                   .all_pass())
            continue;
          if (build_half_table(a)) ++found;
        }
      }

      std::size_t p = 0;
      while (p < cells.size() && choice[p] == n - 1) choice[p++] = 0;
      if (p == cells.size()) break;
      ++choice[p];
    }
  }
  return found;
}

}  // namespace coopkit
