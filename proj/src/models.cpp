#include "coopkit/models.hpp"

#include <fstream>

#include <json.hpp>

#include "coopkit/json_io.hpp"

namespace coopkit {

FiniteAlgebra make_lukasiewicz_chain(int n) {
  if (n < 2) throw std::invalid_argument("chain needs n >= 2");
  FiniteAlgebra a;
  a.size = n;
  a.zero = 0;
  a.plus.assign(n, std::vector<int>(n));
  a.imp_table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a.plus[i][j] = std::min(n - 1, i + j);
      a.imp_table[i][j] = std::max(0, j - i);
    }
  a.one = n - 1;
  return a;
}

FiniteAlgebra make_goedel_chain(int n) {
  if (n < 2) throw std::invalid_argument("chain needs n >= 2");
  FiniteAlgebra a;
  a.size = n;
  a.zero = 0;
  a.plus.assign(n, std::vector<int>(n));
  a.imp_table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a.plus[i][j] = std::max(i, j);
      a.imp_table[i][j] = i >= j ? 0 : j;
    }
  a.one = n - 1;
  return a;
}

FiniteAlgebra make_trivial() {
  FiniteAlgebra a;
  a.size = 1;
  a.zero = 0;
  a.plus = {{0}};
  a.imp_table = {{0}};
  a.one = 0;
  a.half_table = std::vector<int>{0};
  return a;
}

FiniteAlgebra product_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  FiniteAlgebra p;
  p.size = a.size * b.size;
  auto idx = [&](int x, int y) { return x * b.size + y; };
  p.zero = idx(a.zero, b.zero);
  p.plus.assign(p.size, std::vector<int>(p.size));
  p.imp_table.assign(p.size, std::vector<int>(p.size));
  for (int x1 = 0; x1 < a.size; ++x1)
    for (int y1 = 0; y1 < b.size; ++y1)
      for (int x2 = 0; x2 < a.size; ++x2)
        for (int y2 = 0; y2 < b.size; ++y2) {
          p.plus[idx(x1, y1)][idx(x2, y2)] = idx(a.plus[x1][x2], b.plus[y1][y2]);
          p.imp_table[idx(x1, y1)][idx(x2, y2)] =
              idx(a.imp_table[x1][x2], b.imp_table[y1][y2]);
        }
  if (a.one && b.one) p.one = idx(*a.one, *b.one);
  if (a.half_table && b.half_table) {
    std::vector<int> h(p.size);
    for (int x = 0; x < a.size; ++x)
      for (int y = 0; y < b.size; ++y)
        h[idx(x, y)] = idx((*a.half_table)[x], (*b.half_table)[y]);
    p.half_table = std::move(h);
  }
  return p;
}

FiniteAlgebra ordinal_sum(const FiniteAlgebra& first, const FiniteAlgebra& second) {
  const int n1 = first.size, n2 = second.size;
  FiniteAlgebra e;
  e.size = n1 + n2 - 1;
  e.zero = 0;

  // New index 0 is the shared zero; the first block keeps its nonzero
  // elements in order, then the second block's nonzero elements follow.
  std::vector<int> map1(n1), map2(n2);
  {
    int next = 1;
    for (int x = 0; x < n1; ++x) map1[x] = (x == first.zero) ? 0 : next++;
    map2[second.zero] = 0;
    for (int x = 0; x < n2; ++x)
      if (x != second.zero) map2[x] = next++;
  }
  std::vector<std::pair<int, int>> back(e.size);  // (block, original index)
  for (int x = 0; x < n1; ++x) back[map1[x]] = {0, x};
  for (int x = 0; x < n2; ++x)
    if (x != second.zero) back[map2[x]] = {1, x};
  back[0] = {0, first.zero};

  auto in_second = [&](int v) { return v != 0 && back[v].first == 1; };

  e.plus.assign(e.size, std::vector<int>(e.size));
  e.imp_table.assign(e.size, std::vector<int>(e.size));
  for (int x = 0; x < e.size; ++x)
    for (int y = 0; y < e.size; ++y) {
      bool xs = in_second(x), ys = in_second(y);
      if (xs && ys) {
        e.plus[x][y] = map2[second.plus[back[x].second][back[y].second]];
        e.imp_table[x][y] = map2[second.imp_table[back[x].second][back[y].second]];
      } else if (!xs && !ys) {
        int bx = xs ? second.zero : back[x].second;
        int by = ys ? second.zero : back[y].second;
        e.plus[x][y] = map1[first.plus[bx][by]];
        e.imp_table[x][y] = map1[first.imp_table[bx][by]];
      } else if (xs) {
        // nonzero d in the second block absorbs the first: c + d = d, d -> c = 0
        e.plus[x][y] = x;
        e.imp_table[x][y] = 0;
      } else {
        e.plus[x][y] = y;
        e.imp_table[x][y] = y;  // c -> d = d
      }
    }

  if (second.one && n2 > 1)
    e.one = map2[*second.one];
  else if (n2 == 1 && first.one)
    e.one = map1[*first.one];

  if (first.half_table && second.half_table) {
    std::vector<int> h(e.size);
    for (int v = 0; v < e.size; ++v) {
      auto [blk, x] = back[v];
      h[v] = blk == 0 ? map1[(*first.half_table)[x]] : map2[(*second.half_table)[x]];
    }
    e.half_table = std::move(h);
  }
  return e;
}

ModelVariant parse_model_spec(const std::string& spec) {
  auto capped_arg = [&](const std::string& prefix) -> std::optional<std::string> {
    if (spec.rfind(prefix, 0) == 0) return spec.substr(prefix.size());
    return std::nullopt;
  };
  if (spec == "dyadic-unbounded") return DyadicModel::unbounded();
  if (spec == "rational-unbounded") return RationalModel::unbounded();
  if (auto a = capped_arg("dyadic-capped:")) return DyadicModel::capped(parse_dyadic(*a));
  if (auto a = capped_arg("rational-capped:")) return RationalModel::capped(parse_rational(*a));
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("unknown model spec or unreadable file: " + spec);
  nlohmann::json j;
  in >> j;
  return algebra_from_json(j);
}

}  // namespace coopkit
