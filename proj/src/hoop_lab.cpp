#include "coopkit/hoop_lab.hpp"

#include <algorithm>
#include <set>

#include "coopkit/laws.hpp"

namespace coopkit {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const std::vector<int>& sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

bool Ideal::contains(int x) const { return coopkit::contains(elements, x); }

bool is_ideal(const FiniteAlgebra& h, const std::vector<int>& elems) {
  if (!contains(elems, h.zero)) return false;
  for (int x : elems)
    for (int y : elems)
      if (!contains(elems, h.plus[x][y])) return false;
  for (int x : elems)
    for (int y = 0; y < h.size; ++y)
      if (h.geq(x, y) && !contains(elems, y)) return false;  // downward closed
  return true;
}

Ideal generate_ideal(const FiniteAlgebra& h, const std::vector<int>& generators) {
  std::vector<bool> in(h.size, false);
  in[h.zero] = true;
  for (int g : generators) in[g] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < h.size; ++x) {
      if (!in[x]) continue;
      for (int y = 0; y < h.size; ++y) {
        if (in[y] && !in[h.plus[x][y]]) {
          in[h.plus[x][y]] = true;
          changed = true;
        }
        if (h.geq(x, y) && !in[y]) {
          in[y] = true;
          changed = true;
        }
      }
    }
  }
  Ideal i;
  for (int x = 0; x < h.size; ++x)
    if (in[x]) i.elements.push_back(x);
  return i;
}

std::vector<Ideal> all_ideals(const FiniteAlgebra& h) {
  std::vector<Ideal> out;
  for (unsigned mask = 0; mask < (1u << h.size); ++mask) {
    std::vector<int> elems;
    for (int x = 0; x < h.size; ++x)
      if (mask & (1u << x)) elems.push_back(x);
    if (is_ideal(h, elems)) out.push_back(Ideal{std::move(elems)});
  }
  return out;
}

QuotientResult quotient_by_ideal(const FiniteAlgebra& h, const Ideal& i) {
  auto related = [&](int x, int y) {
    return i.contains(h.imp_table[x][y]) && i.contains(h.imp_table[y][x]);
  };
  std::vector<int> cls(h.size, -1);
  std::vector<int> reps;
  for (int x = 0; x < h.size; ++x) {
    for (std::size_t c = 0; c < reps.size(); ++c)
      if (related(x, reps[c])) {
        cls[x] = static_cast<int>(c);
        break;
      }
    if (cls[x] < 0) {
      cls[x] = static_cast<int>(reps.size());
      reps.push_back(x);
    }
  }

  const int n = static_cast<int>(reps.size());
  FiniteAlgebra q;
  q.size = n;
  q.zero = cls[h.zero];
  q.plus.assign(n, std::vector<int>(n));
  q.imp_table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      q.plus[a][b] = cls[h.plus[reps[a]][reps[b]]];
      q.imp_table[a][b] = cls[h.imp_table[reps[a]][reps[b]]];
    }
  // well-definedness over all representatives
  for (int x = 0; x < h.size; ++x)
    for (int y = 0; y < h.size; ++y) {
      if (cls[h.plus[x][y]] != q.plus[cls[x]][cls[y]] ||
          cls[h.imp_table[x][y]] != q.imp_table[cls[x]][cls[y]])
        throw NotAHoop("ideal relation is not a congruence");
    }
  if (h.one) q.one = cls[*h.one];
  if (h.half_table) {
    std::vector<int> half(n);
    for (int a = 0; a < n; ++a) half[a] = cls[(*h.half_table)[reps[a]]];
    q.half_table = std::move(half);
  }
  return {std::move(q), std::move(cls)};
}

ClassifyRecord classify(const FiniteAlgebra& h) {
  ClassifyRecord rec;
  rec.simple = all_ideals(h).size() == 2;

  rec.archimedean = h.size >= 2;
  for (int x = 0; x < h.size && rec.archimedean; ++x) {
    if (x == h.zero) continue;
    // orbit x, 2x, 3x, ... stabilizes since addition is inflationary
    std::vector<int> orbit;
    int v = x;
    for (;;) {
      orbit.push_back(v);
      int next = h.plus[v][x];
      if (next == v) break;
      v = next;
    }
    for (int y = 0; y < h.size && rec.archimedean; ++y) {
      bool bounded = false;
      for (int m : orbit)
        if (h.geq(m, y)) {
          bounded = true;
          break;
        }
      if (!bounded) rec.archimedean = false;
    }
  }

  rec.linear = true;
  for (int x = 0; x < h.size && rec.linear; ++x)
    for (int y = 0; y < h.size && rec.linear; ++y)
      if (!h.geq(x, y) && !h.geq(y, x)) rec.linear = false;

  rec.depths.assign(h.size, 0);
  for (int x = 0; x < h.size; ++x) {
    if (x == h.zero) continue;
    int d = 1, v = x;
    while (h.plus[v][x] != v) {
      v = h.plus[v][x];
      ++d;
    }
    rec.depths[x] = d;
  }
  return rec;
}

std::vector<int> implicative_stabilizer(const FiniteAlgebra& h, int x) {
  std::vector<int> out;
  for (int s = 0; s < h.size; ++s)
    if (h.imp_table[s][x] == x) out.push_back(s);
  return out;
}

bool SIDecomposition::all_properties_hold() const {
  for (const auto& [name, ok] : properties)
    if (!ok) return false;
  return true;
}

std::optional<SIDecomposition> monolith_and_decomposition(const FiniteAlgebra& h) {
  if (!check_laws(h, LawMode::exhaustive(), laws_for_class(AlgebraClass::Hoop)).all_pass())
    throw NotAHoop("algebra fails the hoop laws");

  auto ideals = all_ideals(h);
  std::vector<int> monolith;
  bool first = true;
  for (const auto& i : ideals) {
    if (i.elements.size() == 1) continue;  // {0}
    monolith = first ? i.elements : intersect(monolith, i.elements);
    first = false;
  }
  if (first || monolith.size() <= 1) return std::nullopt;  // not subdirectly irreducible

  const std::vector<int>& m = monolith;
  std::vector<int> fixed;
  for (int f = 0; f < h.size; ++f) {
    bool ok = true;
    for (int a : m)
      if (h.imp_table[a][f] != f) {
        ok = false;
        break;
      }
    if (ok) fixed.push_back(f);
  }
  std::vector<int> support;
  for (int s = 0; s < h.size; ++s) {
    bool ok = true;
    for (int f : fixed)
      if (h.imp_table[s][f] != f) {
        ok = false;
        break;
      }
    if (ok) support.push_back(s);
  }

  SIDecomposition d;
  d.monolith = Ideal{m};
  d.support = support;
  d.fixed = fixed;

  auto nonzero = [&](const std::vector<int>& v) {
    std::vector<int> out;
    for (int x : v)
      if (x != h.zero) out.push_back(x);
    return out;
  };
  auto prop = [&](const std::string& name, bool ok) { d.properties.emplace_back(name, ok); };

  {  // (i) every nonzero x dominates a nonzero monolith element
    bool ok = true;
    for (int x = 0; x < h.size && ok; ++x) {
      if (x == h.zero) continue;
      bool dominated = false;
      for (int a : nonzero(m))
        if (h.geq(x, a)) dominated = true;
      ok = dominated;
    }
    prop("i", ok);
  }
  {  // (ii) nonzero fixed elements dominate the monolith
    bool ok = true;
    for (int f : nonzero(fixed))
      for (int a : m)
        if (!h.geq(f, a)) ok = false;
    prop("ii", ok);
  }
  {  // (iii) a + f = f for a in M, nonzero f in F
    bool ok = true;
    for (int a : m)
      for (int f : nonzero(fixed))
        if (h.plus[a][f] != f) ok = false;
    prop("iii", ok);
  }
  {  // (iv) F is upward closed above its nonzero elements
    bool ok = true;
    for (int f : nonzero(fixed))
      for (int x = 0; x < h.size; ++x)
        if (h.geq(x, f) && !contains(fixed, x)) ok = false;
    prop("iv", ok);
  }
  {  // (v) x -> f lands in F
    bool ok = true;
    for (int x = 0; x < h.size; ++x)
      for (int f : fixed)
        if (!contains(fixed, h.imp_table[x][f])) ok = false;
    prop("v", ok);
  }
  {  // (vi) nonzero fixed elements strictly dominate everything outside F
    bool ok = true;
    for (int f : nonzero(fixed))
      for (int x = 0; x < h.size; ++x)
        if (!contains(fixed, x) && !(h.geq(f, x) && f != x)) ok = false;
    prop("vi", ok);
  }
  {  // (vii) F is a subalgebra (halving clause only when the table exists)
    bool ok = contains(fixed, h.zero);
    for (int f : fixed)
      for (int g : fixed) {
        if (!contains(fixed, h.plus[f][g])) ok = false;
        if (!contains(fixed, h.imp_table[f][g])) ok = false;
      }
    if (h.half_table)
      for (int f : fixed)
        if (!contains(fixed, (*h.half_table)[f])) ok = false;
    prop("vii", ok);
  }
  {  // (viii) S is a linearly ordered ideal and S meets F only in zero
    bool ok = is_ideal(h, support);
    for (int s : support)
      for (int t : support)
        if (!h.geq(s, t) && !h.geq(t, s)) ok = false;
    auto both = intersect(support, fixed);
    if (!(both.size() == 1 && both[0] == h.zero)) ok = false;
    prop("viii", ok);
  }
  {  // (ix) S is semi-cancellative: s+t = s+u with t != u forces s+t to
     //      annihilate S
    bool ok = true;
    for (int s : support)
      for (int t : support)
        for (int u : support) {
          if (t == u || h.plus[s][t] != h.plus[s][u]) continue;
          int a = h.plus[s][t];
          for (int w : support)
            if (h.plus[w][a] != a) ok = false;
        }
    prop("ix", ok);
  }
  {  // (x) C = S ^frown F as ordinal sum
    bool ok = sorted_unique(intersect(support, fixed)) == std::vector<int>{h.zero};
    std::vector<int> uni;
    std::set_union(support.begin(), support.end(), fixed.begin(), fixed.end(),
                   std::back_inserter(uni));
    if (static_cast<int>(uni.size()) != h.size) ok = false;
    for (int s : support)
      for (int f : nonzero(fixed))
        if (h.plus[s][f] != f) ok = false;
    prop("x", ok);
  }
  {  // the support is Wajsberg
    bool ok = true;
    for (int s : support)
      for (int t : support)
        if (h.imp_table[h.imp_table[t][s]][s] != h.imp_table[h.imp_table[s][t]][t]) ok = false;
    prop("wajsberg-on-S", ok);
  }
  return d;
}

long long count_congruences(const FiniteAlgebra& h) {
  // restricted-growth strings enumerate the partitions
  const int n = h.size;
  std::vector<int> rgs(n, 0);
  long long count = 0;
  auto congruent = [&]() {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (rgs[x] != rgs[y]) continue;
        for (int z = 0; z < n; ++z) {
          if (rgs[h.plus[x][z]] != rgs[h.plus[y][z]]) return false;
          if (rgs[h.imp_table[x][z]] != rgs[h.imp_table[y][z]]) return false;
          if (rgs[h.imp_table[z][x]] != rgs[h.imp_table[z][y]]) return false;
        }
      }
    return true;
  };
  auto rec = [&](auto&& self, int i, int maxv) -> void {
    if (i == n) {
      if (congruent()) ++count;
      return;
    }
    for (int v = 0; v <= std::min(maxv + 1, n - 1); ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(maxv, v));
    }
  };
  rec(rec, 0, -1);
  return count;
}

std::vector<std::vector<int>> all_subalgebras(const FiniteAlgebra& h) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << h.size); ++mask) {
    if (!(mask & (1u << h.zero))) continue;
    std::vector<int> elems;
    for (int x = 0; x < h.size; ++x)
      if (mask & (1u << x)) elems.push_back(x);
    bool closed = true;
    for (int x : elems)
      for (int y : elems)
        if (!contains(elems, h.plus[x][y]) || !contains(elems, h.imp_table[x][y]))
          closed = false;
    if (h.half_table && closed)
      for (int x : elems)
        if (!contains(elems, (*h.half_table)[x])) closed = false;
    if (closed) out.push_back(std::move(elems));
  }
  return out;
}

FiniteAlgebra restrict_to(const FiniteAlgebra& h, const std::vector<int>& carrier) {
  std::vector<int> pos(h.size, -1);
  for (std::size_t i = 0; i < carrier.size(); ++i) pos[carrier[i]] = static_cast<int>(i);
  FiniteAlgebra r;
  r.size = static_cast<int>(carrier.size());
  r.zero = pos[h.zero];
  if (r.zero < 0) throw std::invalid_argument("carrier must contain zero");
  r.plus.assign(r.size, std::vector<int>(r.size));
  r.imp_table.assign(r.size, std::vector<int>(r.size));
  for (int a = 0; a < r.size; ++a)
    for (int b = 0; b < r.size; ++b) {
      int p = pos[h.plus[carrier[a]][carrier[b]]];
      int q = pos[h.imp_table[carrier[a]][carrier[b]]];
      if (p < 0 || q < 0) throw std::invalid_argument("carrier is not closed");
      r.plus[a][b] = p;
      r.imp_table[a][b] = q;
    }
  if (h.one && pos[*h.one] >= 0) r.one = pos[*h.one];
  if (h.half_table) {
    std::vector<int> half(r.size);
    bool ok = true;
    for (int a = 0; a < r.size; ++a) {
      int v = pos[(*h.half_table)[carrier[a]]];
      if (v < 0) ok = false;
      half[a] = v;
    }
    if (ok) r.half_table = std::move(half);
  }
  return r;
}

}  // namespace coopkit
