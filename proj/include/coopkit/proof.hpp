#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coopkit/formula.hpp"

namespace coopkit {

enum class AxiomSchema { ASM, EFQ, DNE, CWC, CSD, CON, HLB, HUB };
enum class RuleId { ImpI, ImpE, ConjI, ConjE };

/// The twelve logics. Each one is its axiom-schema set over the shared
/// introduction/elimination rules, with an allowed sublanguage.
enum class LogicId { ALu, ALi, ALc, LLu, LLi, LLc, ILu, IL, BL, CLu, CLi, CLc };

std::string to_string(AxiomSchema s);
std::string to_string(RuleId r);
std::string to_string(LogicId l);
AxiomSchema parse_axiom_schema(const std::string& name);
RuleId parse_rule_id(const std::string& name);
LogicId parse_logic_id(const std::string& name);
const std::vector<LogicId>& all_logics();

/// Defining axiom-schema set of the logic.
const std::vector<AxiomSchema>& axioms(LogicId logic);

/// Schemata the checker admits as leaves: the union of the defining sets of
/// the logic and of every logic it extends. Every admitted schema is a
/// theorem of the logic, and checking becomes monotone along extensions.
const std::vector<AxiomSchema>& admissible_axioms(LogicId logic);

LanguageId logic_language(LogicId logic);

/// upper extends lower in the extension order (reflexive).
bool logic_extends(LogicId upper, LogicId lower);

/// Strict extensions of the logic.
std::vector<LogicId> logic_extensions(LogicId logic);

/// Natural-deduction proof tree. Leaves claim axiom-schema instances;
/// internal nodes apply one of the four rules. Conclusions are stored at
/// every node and re-derived by the checker, never trusted.
class Proof {
 public:
  static Proof axiom(AxiomSchema schema, Sequent conclusion);
  static Proof rule(RuleId rule, std::vector<Proof> premises, Sequent conclusion);

  bool is_axiom() const { return node_->is_axiom; }
  AxiomSchema schema() const { return node_->schema; }
  RuleId rule_id() const { return node_->rule; }
  const std::vector<Proof>& premises() const { return node_->premises; }
  const Sequent& conclusion() const { return node_->conclusion; }

  std::size_t node_count() const;

 private:
  struct Node {
    bool is_axiom = true;
    AxiomSchema schema = AxiomSchema::ASM;
    RuleId rule = RuleId::ImpI;
    std::vector<Proof> premises;
    Sequent conclusion;
  };

  explicit Proof(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

struct CheckFailure {
  std::string path;  // child indices from the root, e.g. "1.0"; "" is the root
  std::string reason;
};

struct CheckReport {
  bool ok = true;
  std::vector<CheckFailure> failures;
};

/// True iff s instantiates the schema with an arbitrary residual antecedent.
/// Matching is syntactic on the actual subformulas.
bool match_axiom(const Sequent& s, AxiomSchema schema);

CheckReport check_proof(const Proof& p, LogicId logic);

/// Adds one copy of extra to the conclusion's antecedent by pushing it up a
/// single branch until an axiom leaf absorbs it.
Proof weaken(const Proof& p, const Formula& extra);

enum class DeductionTarget { Curried, Uncurried, ConjForm };

class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deduction-theorem transformations between A1,...,Am |- B,
/// |- A1 -o ... -o Am -o B and |- A1 * ... * Am -o B.
Proof apply_deduction(const Proof& p, DeductionTarget target);

// Proof file format: a JSON tree of
//   {"kind": "axiom", "schema": ..., "conclusion": <sequent text>} or
//   {"kind": "rule", "rule": ..., "conclusion": ..., "premises": [...]}.
nlohmann::json proof_to_json(const Proof& p);
Proof proof_from_json(const nlohmann::json& j);

}  // namespace coopkit
