#pragma once

#include <vector>

#include "coopkit/models.hpp"
#include "coopkit/rng.hpp"

namespace coopkit {

/// Finite partial order; leq[i][j] means i <= j. Must be reflexive,
/// antisymmetric, transitive (validated by embed_poset).
struct Poset {
  int size = 0;
  std::vector<std::vector<bool>> leq;

  static Poset antichain(int n);
  static Poset chain(int n);
  bool valid() const;
};

/// Embeds a finite poset X into an involutive pocrim on the carrier
/// {0, r} + X + X^perp + {s, 1} (size 2|X|+4): bottom, an atom r below all of
/// X, the poset, its order-reversed mirror, a coatom s, and the annihilator.
/// a + b is s or 1 depending on whether a dominates b^perp, and implication
/// goes through de Morgan: a -> b = (a + b^perp)^perp.
FiniteAlgebra embed_poset(const Poset& p);

// Index of poset element i inside embed_poset(p)'s carrier.
inline int embedded_index(int i) { return 2 + i; }

Poset random_poset(Rng& rng, int size);

}  // namespace coopkit
