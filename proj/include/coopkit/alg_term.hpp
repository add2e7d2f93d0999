#pragma once

#include <memory>
#include <string>
#include <vector>

#include "coopkit/formula.hpp"
#include "coopkit/models.hpp"

namespace coopkit {

/// Term over {0, +, ->, atoms}; + is flattened n-ary. AC-normal form:
/// sums flattened, zero summands dropped, arguments sorted, empty sum = 0,
/// singleton sum = its argument.
class AlgTerm {
 public:
  enum class Kind { Zero, Atom, Sum, Imp };

  AlgTerm() : AlgTerm(zero()) {}

  static AlgTerm zero();
  static AlgTerm atom(const std::string& name);
  static AlgTerm sum(std::vector<AlgTerm> args);  // raw n-ary node, not normalized
  static AlgTerm imp(AlgTerm l, AlgTerm r);

  Kind kind() const { return node_->kind; }
  const std::string& atom_name() const { return node_->name; }
  const std::vector<AlgTerm>& args() const { return node_->args; }  // Sum
  AlgTerm left() const { return node_->args[0]; }                   // Imp
  AlgTerm right() const { return node_->args[1]; }

  static int compare(const AlgTerm& a, const AlgTerm& b);
  friend bool operator==(const AlgTerm& a, const AlgTerm& b) { return compare(a, b) == 0; }
  friend bool operator!=(const AlgTerm& a, const AlgTerm& b) { return compare(a, b) != 0; }
  friend bool operator<(const AlgTerm& a, const AlgTerm& b) { return compare(a, b) < 0; }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<AlgTerm> args;
  };

  explicit AlgTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

/// Canonical representative under associativity, commutativity and the unit
/// of +; idempotent.
AlgTerm ac_normalize(const AlgTerm& t);

// Summand list of a normalized term: [] for 0, the argument list for a sum,
// the term itself otherwise.
std::vector<AlgTerm> summands(const AlgTerm& t);

// 0 for an empty list, the sole element for a singleton, a sum otherwise.
AlgTerm sum_of(std::vector<AlgTerm> parts);

// Paths address children: sums by argument index, implications by 0/1.
AlgTerm subterm_at(const AlgTerm& t, const std::vector<int>& path);
AlgTerm replace_at(const AlgTerm& t, const std::vector<int>& path, const AlgTerm& repl);
std::vector<std::vector<int>> all_positions(const AlgTerm& t);

/// Lo-fragment formulas map onto algebra terms (0 -> 0, variables -> atoms,
/// * -> +, -o -> ->). Throws on 1 or halving.
AlgTerm formula_to_term(const Formula& f);

/// Antecedent-sum-implies-succedent reading of a sequent; an empty antecedent
/// contributes no implication.
AlgTerm sequent_term(const Sequent& s);

AlgTerm parse_alg_term(const std::string& text);
std::string render_alg_term(const AlgTerm& t);

template <class Model>
typename Model::value_type eval_term(const AlgTerm& t,
                                     const std::map<std::string, typename Model::value_type>& env,
                                     const Model& m) {
  switch (t.kind()) {
    case AlgTerm::Kind::Zero:
      return m.zero_elem();
    case AlgTerm::Kind::Atom: {
      auto it = env.find(t.atom_name());
      if (it == env.end()) throw EvalError("unbound atom: " + t.atom_name());
      return it->second;
    }
    case AlgTerm::Kind::Sum: {
      auto acc = m.zero_elem();
      for (const auto& a : t.args()) acc = m.add(acc, eval_term(a, env, m));
      return acc;
    }
    case AlgTerm::Kind::Imp:
      return m.imp(eval_term(t.left(), env, m), eval_term(t.right(), env, m));
  }
  throw EvalError("unreachable term kind");
}

std::vector<std::string> collect_atoms(const AlgTerm& t);

}  // namespace coopkit
