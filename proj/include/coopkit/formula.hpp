#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace coopkit {

enum class FormulaKind { Zero, One, Var, Conj, Imp, Half };

/// Immutable formula tree over {0, 1, variables, conjunction, implication,
/// halving}. Value semantics; copies share nodes.
class Formula {
 public:
  Formula() : Formula(zero()) {}

  static Formula zero();
  static Formula one();
  static Formula var(const std::string& name);
  static Formula conj(Formula left, Formula right);
  static Formula imp(Formula left, Formula right);
  static Formula half(Formula body);

  // A^ is sugar for A -o 1.
  static Formula lnot(Formula a) { return imp(std::move(a), one()); }

  FormulaKind kind() const { return node_->kind; }
  const std::string& var_name() const { return node_->name; }
  Formula left() const { return Formula(node_->a); }
  Formula right() const { return Formula(node_->b); }
  Formula body() const { return Formula(node_->a); }

  // Total structural order; used to keep antecedent multisets canonical.
  static int compare(const Formula& x, const Formula& y);
  friend bool operator==(const Formula& x, const Formula& y) { return compare(x, y) == 0; }
  friend bool operator!=(const Formula& x, const Formula& y) { return compare(x, y) != 0; }
  friend bool operator<(const Formula& x, const Formula& y) { return compare(x, y) < 0; }

 private:
  struct Node {
    FormulaKind kind;
    std::string name;
    std::shared_ptr<const Node> a, b;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

/// The four sublanguages: Lo (no 1, no halving), Li (no halving),
/// Lh (no 1), Lih (full). Lo = Li `intersect` Lh.
enum class LanguageId { Lo, Li, Lh, Lih };

LanguageId classify_language(const Formula& f);
bool language_leq(LanguageId sub, LanguageId super);
std::string to_string(LanguageId id);

/// Antecedent is a multiset, realized as a vector kept sorted under the
/// structural formula order, so sequent equality is plain ==.
struct Sequent {
  std::vector<Formula> antecedent;
  Formula succedent;

  Sequent() = default;
  Sequent(std::vector<Formula> ante, Formula succ);

  friend bool operator==(const Sequent& a, const Sequent& b);
  friend bool operator!=(const Sequent& a, const Sequent& b) { return !(a == b); }
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar: `0`, `1`, identifiers, `A * B` (left-assoc), `A -o B` (right-assoc,
// lowest precedence), `A / 2` (postfix, tightest), `A ^` (postfix, sugar for
// `A -o 1`), parentheses.
Formula parse_formula(const std::string& text);
std::string render_formula(const Formula& f);

// `A, B |- C`; empty antecedent `|- C`.
Sequent parse_sequent(const std::string& text);
std::string render_sequent(const Sequent& s);

// Alternate concrete syntax for algebra-side terms: `+` for conjunction,
// `->` for implication (right-assoc, lowest precedence), `/2` postfix.
Formula parse_alg_formula(const std::string& text);
std::string render_alg_formula(const Formula& f);

// Distinct variable names, sorted.
std::vector<std::string> collect_vars(const Formula& f);

}  // namespace coopkit
