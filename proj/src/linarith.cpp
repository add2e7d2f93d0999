#include "coopkit/linarith.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace coopkit {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

BigInt floor_of(const Rational& q) {
  BigInt n = numerator(q), d = denominator(q);
  BigInt f = n / d;
  if (n < 0 && f * d != n) --f;
  return f;
}

BigInt ceil_of(const Rational& q) { return -floor_of(-q); }

}  // namespace

LinExpr& LinExpr::operator+=(const LinExpr& o) {
  if (coeff.size() < o.coeff.size()) coeff.resize(o.coeff.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeff.size(); ++i) coeff[i] += o.coeff[i];
  constant += o.constant;
  return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& o) {
  if (coeff.size() < o.coeff.size()) coeff.resize(o.coeff.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeff.size(); ++i) coeff[i] -= o.coeff[i];
  constant -= o.constant;
  return *this;
}

LinExpr LinExpr::scaled(const Rational& k) const {
  LinExpr out = *this;
  for (auto& c : out.coeff) c *= k;
  out.constant *= k;
  return out;
}

Rational LinExpr::eval(const std::vector<Rational>& point) const {
  Rational v = constant;
  for (std::size_t i = 0; i < coeff.size(); ++i)
    if (coeff[i] != 0) v += coeff[i] * point.at(i);
  return v;
}

bool LinExpr::is_constant() const {
  for (const auto& c : coeff)
    if (c != 0) return false;
  return true;
}

bool satisfies(const std::vector<LinConstraint>& cs, const std::vector<Rational>& point) {
  for (const auto& c : cs) {
    Rational v = c.expr.eval(point);
    if (c.strict ? !(v > 0) : !(v >= 0)) return false;
  }
  return true;
}

namespace {

// Scales to coprime integer coefficients; canonical form for deduplication.
LinConstraint normalized(LinConstraint c, int nvars) {
  c.expr.coeff.resize(nvars, Rational(0));
  BigInt l = 1;
  for (const auto& q : c.expr.coeff) l = boost::multiprecision::lcm(l, denominator(q));
  l = boost::multiprecision::lcm(l, denominator(c.expr.constant));
  BigInt g = 0;
  auto scale_and_gcd = [&](Rational& q) {
    q *= l;
    g = boost::multiprecision::gcd(g, numerator(q));
  };
  for (auto& q : c.expr.coeff) scale_and_gcd(q);
  scale_and_gcd(c.expr.constant);
  if (g > 1) {
    for (auto& q : c.expr.coeff) q /= g;
    c.expr.constant /= g;
  }
  return c;
}

std::string constraint_key(const LinConstraint& c) {
  std::string k = c.strict ? "s" : "w";
  for (const auto& q : c.expr.coeff) k += "," + scalar_str(q);
  k += ";" + scalar_str(c.expr.constant);
  return k;
}

enum class Verdict3 { Feasible, Infeasible, Unknown };

// One elimination round for variable j. Returns Infeasible on a violated
// constant constraint; `out` gets the var-j-free system.
Verdict3 eliminate_var(const std::vector<LinConstraint>& cs, int j, int nvars,
                       std::vector<LinConstraint>& out) {
  std::vector<const LinConstraint*> lowers, uppers;
  std::set<std::string> seen;
  auto push = [&](LinConstraint c) {
    c = normalized(std::move(c), nvars);
    if (c.expr.is_constant()) {
      if (c.strict ? !(c.expr.constant > 0) : !(c.expr.constant >= 0)) return false;
      return true;  // trivially true, drop
    }
    if (seen.insert(constraint_key(c)).second) out.push_back(std::move(c));
    return true;
  };
  for (const auto& c : cs) {
    Rational a = j < static_cast<int>(c.expr.coeff.size()) ? c.expr.coeff[j] : Rational(0);
    if (a > 0)
      lowers.push_back(&c);
    else if (a < 0)
      uppers.push_back(&c);
    else if (!push(c))
      return Verdict3::Infeasible;
  }
  for (const auto* lo : lowers)
    for (const auto* up : uppers) {
      const Rational& al = lo->expr.coeff[j];
      const Rational& au = up->expr.coeff[j];
      // (-au) * lo + al * up cancels x_j; both multipliers positive
      LinExpr combined = lo->expr.scaled(-au) + up->expr.scaled(al);
      combined.coeff[j] = 0;
      if (!push({std::move(combined), lo->strict || up->strict}))
        return Verdict3::Infeasible;
    }
  return Verdict3::Unknown;
}

}  // namespace

bool feasible(const std::vector<LinConstraint>& cs, int nvars) {
  std::vector<LinConstraint> cur;
  cur.reserve(cs.size());
  for (const auto& c : cs) {
    LinConstraint n = normalized(c, nvars);
    if (n.expr.is_constant()) {
      if (n.strict ? !(n.expr.constant > 0) : !(n.expr.constant >= 0)) return false;
      continue;
    }
    cur.push_back(std::move(n));
  }
  for (int j = nvars - 1; j >= 0; --j) {
    std::vector<LinConstraint> next;
    if (eliminate_var(cur, j, nvars, next) == Verdict3::Infeasible) return false;
    cur = std::move(next);
  }
  for (const auto& c : cur)
    if (c.strict ? !(c.expr.constant > 0) : !(c.expr.constant >= 0)) return false;
  return true;
}

std::optional<std::vector<Rational>> sample_point(const std::vector<LinConstraint>& cs,
                                                  int nvars) {
  // stages[j] is the system over variables 0..j-1
  std::vector<std::vector<LinConstraint>> stages(nvars + 1);
  for (const auto& c : cs) stages[nvars].push_back(normalized(c, nvars));
  for (int j = nvars - 1; j >= 0; --j) {
    std::vector<LinConstraint> next;
    if (eliminate_var(stages[j + 1], j, nvars, next) == Verdict3::Infeasible)
      return std::nullopt;
    stages[j] = std::move(next);
  }
  for (const auto& c : stages[0])
    if (c.strict ? !(c.expr.constant > 0) : !(c.expr.constant >= 0)) return std::nullopt;

  std::vector<Rational> point(nvars, Rational(0));
  for (int j = 0; j < nvars; ++j) {
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& c : stages[j + 1]) {
      Rational a = c.expr.coeff[j];
      Rational rest = c.expr.constant;
      for (int i = 0; i < j; ++i) rest += c.expr.coeff[i] * point[i];
      if (a == 0) continue;  // involves variables > j only through earlier stages
      Rational bound = -rest / a;
      if (a > 0) {  // x_j >= bound
        if (!lo || bound > *lo || (bound == *lo && c.strict)) {
          lo = bound;
          lo_strict = c.strict;
        }
      } else {
        if (!hi || bound < *hi || (bound == *hi && c.strict)) {
          hi = bound;
          hi_strict = c.strict;
        }
      }
    }
    point[j] = simplest_rational_in(lo, lo_strict, hi, hi_strict);
  }
  if (!satisfies(cs, point)) throw std::logic_error("sample_point produced a bad witness");
  return point;
}

namespace {

Rational simplest_positive(const Rational& lo, bool lo_strict, const Rational& hi,
                           bool hi_strict) {
  // 0 <= lo <= hi with 0 excluded; smallest denominator, then smallest value
  BigInt n = ceil_of(lo);
  if (Rational(n) == lo && lo_strict) ++n;
  if (Rational(n) < hi || (Rational(n) == hi && !hi_strict)) return Rational(n);
  BigInt f = floor_of(lo);
  // interval inside (f, f+1); x = f + 1/y maps it to a reciprocal interval
  Rational lo_frac = lo - Rational(f);
  Rational rlo = Rational(1) / (hi - Rational(f));
  Rational inner;
  if (lo_frac == 0) {
    // left end sits on the integer f (necessarily strict): y unbounded above
    BigInt m = ceil_of(rlo);
    if (Rational(m) == rlo && hi_strict) ++m;
    inner = Rational(m);
  } else {
    inner = simplest_positive(rlo, hi_strict, Rational(1) / lo_frac, lo_strict);
  }
  return Rational(f) + Rational(1) / inner;
}

}  // namespace

Rational simplest_rational_in(const std::optional<Rational>& lo, bool lo_strict,
                              const std::optional<Rational>& hi, bool hi_strict) {
  auto lo_ok = [&](const Rational& v) { return !lo || (lo_strict ? v > *lo : v >= *lo); };
  auto hi_ok = [&](const Rational& v) { return !hi || (hi_strict ? v < *hi : v <= *hi); };
  if (lo && hi && (*lo > *hi || (*lo == *hi && (lo_strict || hi_strict))))
    throw std::invalid_argument("empty interval");
  if (lo_ok(Rational(0)) && hi_ok(Rational(0))) return Rational(0);
  if (!lo) {  // interval lies below zero
    BigInt n = floor_of(*hi);
    if (Rational(n) == *hi && hi_strict) --n;
    return Rational(n);
  }
  if (!hi) {
    BigInt n = ceil_of(*lo);
    if (Rational(n) == *lo && lo_strict) ++n;
    return Rational(n);
  }
  if (*hi > 0 || (*hi == 0 && !hi_strict)) {
    // positive interval (zero already handled)
    return simplest_positive(*lo, lo_strict, *hi, hi_strict);
  }
  return -simplest_positive(-*hi, hi_strict, -*lo, lo_strict);
}

}  // namespace coopkit
