#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "coopkit/formula.hpp"
#include "coopkit/scalars.hpp"

namespace coopkit {

class UnsupportedConnective : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Standard dense model over an exact scalar: carrier is the nonnegative cone
/// (Unbounded) or [0, cap] with addition capped at cap (Capped). Implication
/// is truncated subtraction, halving is exact division by two. The order by
/// logical strength (x >= y iff x -> y = 0) coincides with the numeric order.
template <class S>
struct DenseModel {
  enum class Shape { Unbounded, Capped };

  Shape shape = Shape::Unbounded;
  S cap{};

  using value_type = S;

  static DenseModel unbounded() { return DenseModel{Shape::Unbounded, S(0)}; }
  static DenseModel capped(S a) {
    if (!(S(0) < a)) throw std::invalid_argument("cap must be positive");
    return DenseModel{Shape::Capped, std::move(a)};
  }

  bool bounded() const { return shape == Shape::Capped; }
  bool has_one() const { return bounded(); }
  bool has_half() const { return true; }

  S zero_elem() const { return S(0); }
  S one_elem() const {
    if (!bounded()) throw UnsupportedConnective("unbounded model has no annihilator");
    return cap;
  }

  S add(const S& x, const S& y) const {
    S s = x + y;
    if (bounded() && cap < s) return cap;
    return s;
  }

  S imp(const S& x, const S& y) const { return monus(y, x); }
  S half(const S& x) const { return half_of(x); }

  bool geq(const S& x, const S& y) const { return imp(x, y) == S(0); }
  bool contains(const S& x) const { return S(0) <= x && (!bounded() || x <= cap); }
};

using DyadicModel = DenseModel<Dyadic>;
using RationalModel = DenseModel<Rational>;

/// Capping an unbounded dense model at a positive element a yields a bounded
/// involutive model (negation x -> a is a - x).
template <class S>
DenseModel<S> cap_at(const DenseModel<S>& m, const S& a) {
  if (m.bounded()) throw std::invalid_argument("cap_at expects an unbounded model");
  return DenseModel<S>::capped(a);
}

/// Finite operation-table algebra; claims about class membership are made
/// only by the law checkers.
struct FiniteAlgebra {
  using value_type = int;

  int size = 0;
  int zero = 0;
  std::vector<std::vector<int>> plus;
  std::vector<std::vector<int>> imp_table;
  std::optional<int> one;
  std::optional<std::vector<int>> half_table;

  bool has_one() const { return one.has_value(); }
  bool has_half() const { return half_table.has_value(); }

  int zero_elem() const { return zero; }
  int one_elem() const {
    if (!one) throw UnsupportedConnective("algebra has no annihilator");
    return *one;
  }

  int add(int x, int y) const { return plus[x][y]; }
  int imp(int x, int y) const { return imp_table[x][y]; }
  int half(int x) const {
    if (!half_table) throw UnsupportedConnective("algebra has no halving table");
    return (*half_table)[x];
  }

  bool geq(int x, int y) const { return imp_table[x][y] == zero; }
  bool contains(int x) const { return 0 <= x && x < size; }

  friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    return a.size == b.size && a.zero == b.zero && a.plus == b.plus &&
           a.imp_table == b.imp_table && a.one == b.one && a.half_table == b.half_table;
  }
};

// n-element chain with capped addition (truth table of the n-valued
// Lukasiewicz semantics); simple for n >= 2.
FiniteAlgebra make_lukasiewicz_chain(int n);
// n-element chain with idempotent addition (max); Goedel semantics.
FiniteAlgebra make_goedel_chain(int n);
inline FiniteAlgebra make_boolean() { return make_goedel_chain(2); }
FiniteAlgebra make_trivial();
// Direct product (componentwise tables).
FiniteAlgebra product_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// Ordinal sum: disjoint union sharing the zeros, first block then second
/// block, with every nonzero element of the second block absorbing the first.
FiniteAlgebra ordinal_sum(const FiniteAlgebra& first, const FiniteAlgebra& second);

template <class Model>
using Assignment = std::map<std::string, typename Model::value_type>;

template <class Model>
typename Model::value_type eval_formula(const Formula& f,
                                        const Assignment<Model>& env,
                                        const Model& m) {
  switch (f.kind()) {
    case FormulaKind::Zero:
      return m.zero_elem();
    case FormulaKind::One:
      if (!m.has_one()) throw UnsupportedConnective("constant 1 needs a bounded model");
      return m.one_elem();
    case FormulaKind::Var: {
      auto it = env.find(f.var_name());
      if (it == env.end()) throw EvalError("unbound variable: " + f.var_name());
      return it->second;
    }
    case FormulaKind::Conj:
      return m.add(eval_formula(f.left(), env, m), eval_formula(f.right(), env, m));
    case FormulaKind::Imp:
      return m.imp(eval_formula(f.left(), env, m), eval_formula(f.right(), env, m));
    case FormulaKind::Half:
      if (!m.has_half()) throw UnsupportedConnective("halving needs a halving operation");
      return m.half(eval_formula(f.body(), env, m));
  }
  throw EvalError("unreachable formula kind");
}

/// Satisfaction: sum of antecedent values (model addition) >= succedent value.
template <class Model>
bool check_sequent(const Sequent& s, const Assignment<Model>& env, const Model& m) {
  auto total = m.zero_elem();
  for (const auto& f : s.antecedent) total = m.add(total, eval_formula(f, env, m));
  return m.geq(total, eval_formula(s.succedent, env, m));
}

/// Scalar action of a nonnegative dyadic p = i/2^n: i copies (via the model's
/// addition) of x halved n times. Well-defined on the normalized p.
template <class Model>
typename Model::value_type dyadic_scale(const Dyadic& p,
                                        const typename Model::value_type& x,
                                        const Model& m) {
  if (p.is_negative()) throw std::invalid_argument("dyadic_scale needs p >= 0");
  auto y = x;
  for (unsigned k = 0; k < p.exp(); ++k) y = m.half(y);
  // i * y by binary doubling; model addition is an abelian monoid operation.
  auto acc = m.zero_elem();
  auto pow = y;
  BigInt i = p.num();
  while (i > 0) {
    if ((i & 1) != 0) acc = m.add(acc, pow);
    i >>= 1;
    if (i > 0) pow = m.add(pow, pow);
  }
  return acc;
}

/// Runtime-polymorphic handle used at the CLI boundary.
using ModelVariant = std::variant<FiniteAlgebra, DyadicModel, RationalModel>;

// Accepts "dyadic-capped:A", "dyadic-unbounded", "rational-capped:A",
// "rational-unbounded" (A an exact fraction), else treats the string as a
// path to a finite-algebra JSON file.
ModelVariant parse_model_spec(const std::string& spec);

}  // namespace coopkit
