#pragma once

#include <map>
#include <optional>
#include <variant>

#include "coopkit/enumerate.hpp"
#include "coopkit/formula.hpp"
#include "coopkit/laws.hpp"
#include "coopkit/models.hpp"

namespace coopkit {

struct FiniteWitness {
  FiniteAlgebra algebra;
  std::map<std::string, int> assignment;
};

struct DenseWitness {
  DyadicModel model;
  std::map<std::string, Dyadic> assignment;
};

using Witness = std::variant<FiniteWitness, DenseWitness>;

struct SearchBudget {
  int max_model_size = 3;       // finite-table classes
  long long max_evals = 400000; // dense grid classes
};

/// Finite-table classes enumerate algebras up to the size budget and try every
/// assignment; coop classes walk dyadic grids of step 1/2^k, k = 2..8, over
/// Capped(1) and (language permitting) Unbounded. A found witness re-verifies:
/// the model passes the class laws and the sequent fails at the assignment.
/// nullopt means the budget was exhausted, not that the sequent is valid.
std::optional<Witness> search_countermodel(const Sequent& s, AlgebraClass cls,
                                           const SearchBudget& budget);

}  // namespace coopkit
