#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coopkit/models.hpp"

namespace coopkit {

/// Downward-closed submonoid of a finite algebra; elements sorted.
struct Ideal {
  std::vector<int> elements;

  bool contains(int x) const;
  friend bool operator==(const Ideal& a, const Ideal& b) { return a.elements == b.elements; }
};

bool is_ideal(const FiniteAlgebra& h, const std::vector<int>& elems);

/// Least ideal containing the generators: y in I(X) iff y <= x1 + ... + xn
/// for some xi in X.
Ideal generate_ideal(const FiniteAlgebra& h, const std::vector<int>& generators);

std::vector<Ideal> all_ideals(const FiniteAlgebra& h);

struct QuotientResult {
  FiniteAlgebra algebra;
  std::vector<int> projection;  // carrier index -> quotient index
};

/// Quotient by the congruence x ~ y iff x -> y in I and y -> x in I.
/// ker(projection) = I. Throws if the relation fails to be a congruence
/// (the input was not a hoop).
QuotientResult quotient_by_ideal(const FiniteAlgebra& h, const Ideal& i);

struct ClassifyRecord {
  bool simple = false;
  bool archimedean = false;
  bool linear = false;
  std::vector<int> depths;  // least d with (d+1)x = dx; depth(0) = 0
};

/// All four facets computed independently: simplicity via the ideal lattice,
/// the archimedean property via its definition, linearity via order totality,
/// depth per element. The trivial algebra counts as neither simple nor
/// archimedean.
ClassifyRecord classify(const FiniteAlgebra& h);

class NotAHoop : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Support/fixed split of a subdirectly irreducible algebra, with the
/// decomposition properties re-verified over the carrier. The halving clause
/// of the subalgebra property applies only when a halving table is present.
struct SIDecomposition {
  Ideal monolith;
  std::vector<int> support;  // S = IS(F)
  std::vector<int> fixed;    // F = elements implicatively stabilized by M
  std::vector<std::pair<std::string, bool>> properties;

  bool all_properties_hold() const;
};

/// nullopt when h is not subdirectly irreducible (the nonzero ideals
/// intersect to zero). Throws NotAHoop when the hoop laws fail.
std::optional<SIDecomposition> monolith_and_decomposition(const FiniteAlgebra& h);

/// Implicative stabilizer IS(x) = {s | s -> x = x}.
std::vector<int> implicative_stabilizer(const FiniteAlgebra& h, int x);

/// Direct partition search over equivalence relations respecting both
/// operations. Used to cross-check the congruence-ideal bijection.
long long count_congruences(const FiniteAlgebra& h);

/// Subsets containing zero and closed under + and ->, each sorted.
std::vector<std::vector<int>> all_subalgebras(const FiniteAlgebra& h);

/// Restriction of h to a closed carrier subset; index_map[i] is the original
/// element of new index i.
FiniteAlgebra restrict_to(const FiniteAlgebra& h, const std::vector<int>& carrier);

}  // namespace coopkit
