#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coopkit/models.hpp"
#include "coopkit/rng.hpp"

namespace coopkit {

enum class Law { m1, m2, m3, o1, o2, o3, o4, le, r, cwc, idem, ann, inv, h, csd };

std::string to_string(Law law);
int law_arity(Law law);
bool law_needs_one(Law law);
bool law_needs_half(Law law);

enum class AlgebraClass {
  Pocrim,
  BoundedPocrim,
  InvolutivePocrim,
  IdempotentPocrim,
  BoundedIdempotentPocrim,
  InvolutiveIdempotentPocrim,
  Hoop,
  BoundedHoop,
  InvolutiveHoop,
  WajsbergHoop,
  Coop,
  BoundedCoop,
  InvolutiveCoop,
};

const std::vector<Law>& laws_for_class(AlgebraClass cls);
bool class_uses_dense_models(AlgebraClass cls);
AlgebraClass parse_class(const std::string& name);
std::string to_string(AlgebraClass cls);

struct LawMode {
  enum Kind { Exhaustive, Sampled } kind = Exhaustive;
  int count = 0;
  std::uint64_t seed = 0;

  static LawMode exhaustive() { return {Exhaustive, 0, 0}; }
  static LawMode sampled(int count, std::uint64_t seed) { return {Sampled, count, seed}; }
};

template <class V>
struct LawCheck {
  Law law;
  bool pass = false;
  std::vector<V> witness;  // violating tuple when !pass; empty when the
                           // signature itself is missing (no annihilator/halving)
};

template <class V>
struct LawReport {
  std::vector<LawCheck<V>> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const LawCheck<V>* find(Law law) const {
    for (const auto& c : checks)
      if (c.law == law) return &c;
    return nullptr;
  }
};

inline std::optional<int> find_annihilator(const FiniteAlgebra& m) {
  if (m.one) return m.one;
  for (int e = 0; e < m.size; ++e) {
    bool absorbing = true;
    for (int x = 0; x < m.size && absorbing; ++x) absorbing = m.plus[x][e] == e;
    if (absorbing) return e;
  }
  return std::nullopt;
}

namespace detail {

template <class Model>
std::optional<typename Model::value_type> effective_one(const Model& m) {
  if constexpr (std::is_same_v<Model, FiniteAlgebra>) {
    return find_annihilator(m);
  } else {
    if (m.has_one()) return m.one_elem();
    return std::nullopt;
  }
}

template <class Model>
bool law_holds_at(const Model& m, Law law,
                  const std::vector<typename Model::value_type>& t,
                  const std::optional<typename Model::value_type>& one) {
  using V = typename Model::value_type;
  auto eq = [](const V& a, const V& b) { return a == b; };
  switch (law) {
    case Law::m1: return eq(m.add(m.add(t[0], t[1]), t[2]), m.add(t[0], m.add(t[1], t[2])));
    case Law::m2: return eq(m.add(t[0], t[1]), m.add(t[1], t[0]));
    case Law::m3: return eq(m.add(t[0], m.zero_elem()), t[0]);
    case Law::o1: return m.geq(t[0], t[0]);
    case Law::o2: return !(m.geq(t[0], t[1]) && m.geq(t[1], t[2])) || m.geq(t[0], t[2]);
    case Law::o3: return !(m.geq(t[0], t[1]) && m.geq(t[1], t[0])) || eq(t[0], t[1]);
    case Law::o4:
      return !m.geq(t[0], t[1]) || m.geq(m.add(t[0], t[2]), m.add(t[1], t[2]));
    case Law::le: return m.geq(t[0], m.zero_elem());
    case Law::r:
      return m.geq(m.add(t[0], t[1]), t[2]) == m.geq(t[0], m.imp(t[1], t[2]));
    case Law::cwc:
      return eq(m.add(t[0], m.imp(t[0], t[1])), m.add(t[1], m.imp(t[1], t[0])));
    case Law::idem: return eq(m.add(t[0], t[0]), t[0]);
    case Law::ann: return eq(m.add(t[0], *one), *one);
    case Law::inv: return eq(m.imp(m.imp(t[0], *one), *one), t[0]);
    case Law::h: return eq(m.half(t[0]), m.imp(m.half(t[0]), t[0]));
    case Law::csd:
      return eq(m.imp(m.imp(t[0], t[1]), t[1]), m.imp(m.imp(t[1], t[0]), t[0]));
  }
  return false;
}

}  // namespace detail

inline int sample_value(const FiniteAlgebra& m, Rng& rng) {
  return static_cast<int>(rng.below(static_cast<std::uint64_t>(m.size)));
}

// Dyadics of exponent <= 8 (exact arithmetic, reproducible runs); range
// [0, cap] for capped models, [0, 4] for unbounded ones.
inline Dyadic sample_value(const DyadicModel& m, Rng& rng) {
  unsigned e = static_cast<unsigned>(rng.below(9));
  if (m.bounded()) {
    Dyadic hi = m.cap.shifted_left(e);
    BigInt floor = hi.num() >> hi.exp();
    return Dyadic(BigInt(rng.below(static_cast<std::uint64_t>(floor) + 1)), e);
  }
  return Dyadic(BigInt(rng.below((4ULL << e) + 1)), e);
}

inline Rational sample_value(const RationalModel& m, Rng& rng) {
  std::uint64_t den = rng.below(256) + 1;
  if (m.bounded()) {
    BigInt hi = (boost::multiprecision::numerator(m.cap) * den) /
                boost::multiprecision::denominator(m.cap);
    return Rational(BigInt(rng.below(static_cast<std::uint64_t>(hi) + 1)), BigInt(den));
  }
  return Rational(BigInt(rng.below(4 * den + 1)), BigInt(den));
}

template <class Model>
LawReport<typename Model::value_type> check_laws(const Model& m, const LawMode& mode,
                                                 const std::vector<Law>& laws) {
  using V = typename Model::value_type;
  LawReport<V> report;
  auto one = detail::effective_one(m);
  Rng rng(mode.seed);
  for (Law law : laws) {
    LawCheck<V> check{law, true, {}};
    if ((law_needs_one(law) && !one) || (law_needs_half(law) && !m.has_half())) {
      check.pass = false;
      report.checks.push_back(std::move(check));
      continue;
    }
    int k = law_arity(law);
    if (mode.kind == LawMode::Exhaustive) {
      if constexpr (!std::is_same_v<Model, FiniteAlgebra>) {
        throw std::invalid_argument("exhaustive law checking needs a finite algebra");
      } else {
        std::vector<V> t(k, m.zero);
        auto next = [&]() {
          for (int i = 0; i < k; ++i) {
            if (++t[i] < m.size) return true;
            t[i] = 0;
          }
          return false;
        };
        do {
          if (!detail::law_holds_at(m, law, t, one)) {
            check.pass = false;
            check.witness = t;
            break;
          }
        } while (next());
      }
    } else {
      for (int s = 0; s < mode.count; ++s) {
        std::vector<V> t;
        t.reserve(k);
        for (int i = 0; i < k; ++i) t.push_back(sample_value(m, rng));
        if (!detail::law_holds_at(m, law, t, one)) {
          check.pass = false;
          check.witness = std::move(t);
          break;
        }
      }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace coopkit
