#pragma once

#include <json.hpp>

#include "coopkit/alg_term.hpp"

namespace coopkit {

/// The five hoop equations plus implicit commutative-monoid rearrangement:
///   eq1  x -> x = 0
///   eq2  x -> 0 = 0
///   eq3  0 -> x = x
///   eq4  x + y -> z = x -> y -> z
///   eq5  x + (x -> y) = y + (y -> x)
enum class EqId { Eq1, Eq2, Eq3, Eq4, Eq5, MonoidRearrange };
enum class EqDir { L2R, R2L };

std::string to_string(EqId id);
std::string to_string(EqDir dir);
EqId parse_eq_id(const std::string& name);
EqDir parse_eq_dir(const std::string& name);
inline EqDir flip(EqDir d) { return d == EqDir::L2R ? EqDir::R2L : EqDir::L2R; }

/// One link of a chain. from/to are AC-normal. The position addresses the
/// side on which the equation instance is structurally present: the `from`
/// term for L2R of eq1-eq4 and both directions of eq5, the `to` term for
/// R2L of eq1-eq3 (where the rewrite introduces structure that only exists
/// afterwards). MonoidRearrange carries no position; it just asserts AC
/// equality.
struct EqStep {
  AlgTerm from;
  AlgTerm to;
  EqId justification = EqId::MonoidRearrange;
  EqDir direction = EqDir::L2R;
  std::vector<int> position;
};

struct EqChain {
  AlgTerm start;
  std::vector<EqStep> steps;

  const AlgTerm& final_term() const { return steps.empty() ? start : steps.back().to; }
};

/// True iff rewriting `from` with the cited equation instance at the cited
/// position yields a term AC-equal to `to`. Enumerates the bounded set of
/// instantiations the position leaves open (sum splits for eq4, matching
/// summand groups for eq5).
bool verify_step(const EqStep& step);

struct ChainVerification {
  bool ok = true;
  std::size_t failed_step = 0;  // index into steps when !ok
  std::string reason;
};

/// Independent re-check: every step verifies and the final term is 0.
ChainVerification verify_chain(const EqChain& c);

// Chain file format: a JSON array whose first entry is {"term": ...} (the
// start) and whose later entries carry term/justification/position/direction.
nlohmann::json chain_to_json(const EqChain& c);
EqChain chain_from_json(const nlohmann::json& j);

}  // namespace coopkit
