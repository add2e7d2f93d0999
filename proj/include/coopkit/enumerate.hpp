#pragma once

#include <vector>

#include "coopkit/laws.hpp"
#include "coopkit/models.hpp"

namespace coopkit {

/// All algebras of the class with size <= max_size, up to isomorphism
/// (lexicographically minimal tables under carrier permutations fixing 0).
/// Works by enumerating the partial orders with least element 0 and the
/// commutative monotone monoids over them; implication is forced by
/// residuation, so the search is exhaustive for pocrims and their subclasses.
std::vector<FiniteAlgebra> enumerate_algebras(int max_size, AlgebraClass cls);

inline std::vector<FiniteAlgebra> enumerate_hoops(int max_size) {
  return enumerate_algebras(max_size, AlgebraClass::Hoop);
}

/// Raw staged table search: counts algebras of size 2..max_n whose (plus, imp)
/// tables pass the hoop laws and admit a halving operation (some y = y -> x
/// for every x). Plus tables are enumerated over the commutative-with-identity
/// shape; anything else fails m2/m3 outright. Expected result: 0.
long long count_small_coops(int max_n);

// Lexicographically minimal (plus, imp) tables over carrier permutations
// fixing zero (assumes zero == 0).
std::vector<int> canonical_key(const FiniteAlgebra& a);

}  // namespace coopkit
