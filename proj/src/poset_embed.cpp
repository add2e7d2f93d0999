#include "coopkit/poset_embed.hpp"

#include <stdexcept>

namespace coopkit {

Poset Poset::antichain(int n) {
  Poset p;
  p.size = n;
  p.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) p.leq[i][i] = true;
  return p;
}

Poset Poset::chain(int n) {
  Poset p = antichain(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) p.leq[i][j] = true;
  return p;
}

bool Poset::valid() const {
  if (static_cast<int>(leq.size()) != size) return false;
  for (const auto& row : leq)
    if (static_cast<int>(row.size()) != size) return false;
  for (int i = 0; i < size; ++i) {
    if (!leq[i][i]) return false;
    for (int j = 0; j < size; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) return false;
      for (int k = 0; k < size; ++k)
        if (leq[i][j] && leq[j][k] && !leq[i][k]) return false;
    }
  }
  return true;
}

FiniteAlgebra embed_poset(const Poset& p) {
  if (!p.valid()) throw std::invalid_argument("embed_poset: not a partial order");
  const int k = p.size;
  const int n = 2 * k + 4;
  const int bot = 0, r = 1, s = n - 2, top = n - 1;
  auto x_of = [&](int i) { return 2 + i; };
  auto xp_of = [&](int i) { return 2 + k + i; };

  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) {
    leq[a][a] = true;
    leq[bot][a] = true;
    leq[a][top] = true;
  }
  for (int a = 1; a < n; ++a) leq[r][a] = true;
  for (int a = 0; a < n - 1; ++a) leq[a][s] = a != top;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (p.leq[i][j]) leq[x_of(i)][x_of(j)] = true;
      if (p.leq[j][i]) leq[xp_of(i)][xp_of(j)] = true;  // mirror order
      leq[x_of(i)][xp_of(j)] = true;                    // X < X^perp
    }

  std::vector<int> perp(n);
  perp[bot] = top;
  perp[top] = bot;
  perp[r] = s;
  perp[s] = r;
  for (int i = 0; i < k; ++i) {
    perp[x_of(i)] = xp_of(i);
    perp[xp_of(i)] = x_of(i);
  }

  FiniteAlgebra a;
  a.size = n;
  a.zero = bot;
  a.one = top;
  a.plus.assign(n, std::vector<int>(n));
  a.imp_table.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == bot)
        a.plus[x][y] = y;
      else if (y == bot)
        a.plus[x][y] = x;
      else
        a.plus[x][y] = leq[perp[y]][x] ? top : s;
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) a.imp_table[x][y] = perp[a.plus[x][perp[y]]];
  return a;
}

Poset random_poset(Rng& rng, int size) {
  Poset p = Poset::antichain(size);
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      if (rng.below(3) == 0) p.leq[i][j] = true;
  // transitive closure; edges only go up in index order, so antisymmetry holds
  for (int m = 0; m < size; ++m)
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j)
        if (p.leq[i][m] && p.leq[m][j]) p.leq[i][j] = true;
  return p;
}

}  // namespace coopkit
