#pragma once

#include <optional>
#include <vector>

#include "coopkit/scalars.hpp"

namespace coopkit {

/// Affine expression sum(coeff[i] * x_i) + constant with exact rational
/// coefficients over a fixed variable space.
struct LinExpr {
  std::vector<Rational> coeff;
  Rational constant = 0;

  LinExpr() = default;
  explicit LinExpr(int nvars) : coeff(nvars, Rational(0)) {}

  static LinExpr var(int i, int nvars) {
    LinExpr e(nvars);
    e.coeff[i] = 1;
    return e;
  }
  static LinExpr constant_of(const Rational& c, int nvars) {
    LinExpr e(nvars);
    e.constant = c;
    return e;
  }

  LinExpr& operator+=(const LinExpr& o);
  LinExpr& operator-=(const LinExpr& o);
  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
  LinExpr scaled(const Rational& k) const;
  LinExpr halved() const { return scaled(Rational(1, 2)); }

  Rational eval(const std::vector<Rational>& point) const;
  bool is_constant() const;
};

/// expr >= 0, or expr > 0 when strict.
struct LinConstraint {
  LinExpr expr;
  bool strict = false;
};

inline LinConstraint geq0(LinExpr e) { return {std::move(e), false}; }
inline LinConstraint gt0(LinExpr e) { return {std::move(e), true}; }

bool satisfies(const std::vector<LinConstraint>& cs, const std::vector<Rational>& point);

/// Exact Fourier-Motzkin feasibility over the rationals; strict inequalities
/// handled natively (a combination is strict iff either parent is).
bool feasible(const std::vector<LinConstraint>& cs, int nvars);

/// A satisfying point of a feasible system: variables assigned in order, each
/// to the simplest rational (smallest denominator, then smallest numerator
/// magnitude) inside its residual Fourier-Motzkin interval. nullopt when
/// infeasible.
std::optional<std::vector<Rational>> sample_point(const std::vector<LinConstraint>& cs,
                                                  int nvars);

/// Smallest-denominator rational within the given (possibly unbounded,
/// possibly open) nonempty interval; Stern-Brocot style descent.
Rational simplest_rational_in(const std::optional<Rational>& lo, bool lo_strict,
                              const std::optional<Rational>& hi, bool hi_strict);

}  // namespace coopkit
