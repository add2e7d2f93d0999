#pragma once

#include "coopkit/eq_chain.hpp"
#include "coopkit/proof.hpp"

namespace coopkit {

class UnsupportedAxiom : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Translates a proof that checks in LLu into a verified equation chain from
/// the antecedent-sum-implies-succedent term of its conclusion down to 0.
/// Follows the six-case induction over the proof tree (ASM and CWC leaves,
/// the four rules), splicing premise chains into sum contexts; the
/// x -> y -> x = 0 fact needed by the implication-elimination case is emitted
/// as an eq4/eq1/eq2 micro-chain rather than a separate axiom.
///
/// Throws UnsupportedAxiom for leaves outside {ASM, CWC} and
/// std::invalid_argument when the proof does not check in LLu.
EqChain translate_proof(const Proof& p);

}  // namespace coopkit
