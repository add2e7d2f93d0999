#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coopkit/formula.hpp"
#include "coopkit/linarith.hpp"
#include "coopkit/models.hpp"

namespace coopkit {

/// Standard numeric semantics: Nonneg interprets terms over the nonnegative
/// rationals with plain addition; Interval over [0,1] with addition capped
/// at 1. Both use truncated subtraction and exact halving.
enum class Ambient { Nonneg, Interval };

std::string to_string(Ambient a);

class UnsupportedSymbol : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PLPiece {
  std::vector<LinConstraint> guard;
  LinExpr value;
};

/// Piecewise-linear normal form over a fixed variable list; guards cover the
/// ambient domain and overlapping pieces agree in value.
struct PLTerm {
  std::vector<std::string> vars;
  std::vector<PLPiece> pieces;
};

std::vector<LinConstraint> ambient_domain(Ambient amb, int nvars);

/// Structural compilation; min/max splits introduce guards, infeasible pieces
/// are dropped (exact Fourier-Motzkin feasibility). Throws UnsupportedSymbol
/// for the constant 1 in the Nonneg ambient.
PLTerm compile_pl(const Formula& t, Ambient amb);
PLTerm compile_pl(const Formula& t, Ambient amb, const std::vector<std::string>& vars);

struct Verdict {
  bool valid = true;
  std::optional<Ambient> ambient;  // ambient of the countermodel
  std::map<std::string, Rational> assignment;
  Rational lhs_value, rhs_value;  // exact re-evaluation of the two sides
};

/// Valid iff the two terms agree on the whole ambient domain; otherwise an
/// exact rational countermodel that re-verifies by direct evaluation.
Verdict decide_equation(const Formula& s, const Formula& t, Ambient amb);

/// Quantifier-free matrix over atoms s = t and s <= t, implicitly universally
/// closed.
class MatrixExpr {
 public:
  enum class Kind { Atom, Not, And, Or };

  static MatrixExpr atom_eq(Formula lhs, Formula rhs);
  static MatrixExpr atom_leq(Formula lhs, Formula rhs);
  static MatrixExpr lnot(MatrixExpr a);
  static MatrixExpr land(MatrixExpr a, MatrixExpr b);
  static MatrixExpr lor(MatrixExpr a, MatrixExpr b);
  static MatrixExpr implies(MatrixExpr a, MatrixExpr b) {
    return lor(lnot(std::move(a)), std::move(b));
  }

  Kind kind() const { return node_->kind; }
  bool atom_is_leq() const { return node_->is_leq; }
  const Formula& lhs() const { return node_->lhs; }
  const Formula& rhs() const { return node_->rhs; }
  const MatrixExpr& child(int i) const { return node_->children[i]; }
  int child_count() const { return static_cast<int>(node_->children.size()); }

  bool eval(const std::map<std::string, Rational>& env, const RationalModel& m) const;

 private:
  struct Node {
    Kind kind;
    bool is_leq = false;
    Formula lhs, rhs;
    std::vector<MatrixExpr> children;
  };
  explicit MatrixExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Atoms `s = t` and `s <= t` over algebra-syntax terms; connectives
// `!`, `&`, `|`, `==>` (right-assoc), parentheses.
MatrixExpr parse_matrix(const std::string& text);

/// Valid iff the universal closure holds in every requested ambient; the
/// decision works per ambient by DNF over the negated matrix, piece products
/// and exact LP feasibility. Countermodels re-verify by evaluation.
Verdict decide_universal(const MatrixExpr& matrix, const std::vector<Ambient>& ambients);

struct HornClause {
  std::vector<std::pair<Formula, Formula>> hypotheses;  // equations s = t
  std::pair<Formula, Formula> conclusion;
};

/// Innermost-out replacement of halving subterms t/2 by fresh variables v
/// with added hypotheses v = v -> t; the result is halving-free and, over
/// coop models, satisfiability-equivalent to the input.
HornClause eliminate_halving(const HornClause& clause);

}  // namespace coopkit
