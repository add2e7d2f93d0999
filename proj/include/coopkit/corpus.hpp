#pragma once

#include <string>
#include <vector>

#include "coopkit/proof.hpp"

namespace coopkit {

/// One shipped proof: the tree, the logic it was written for, and the
/// logics (never extensions of the designated one) where checking must
/// reject it. ASM-only proofs over the smallest language check in all
/// twelve logics, so their failure list is empty.
struct CorpusEntry {
  std::string name;
  Proof proof;
  LogicId designated;
  std::vector<LogicId> expected_failures;
};

const std::vector<CorpusEntry>& proof_corpus();

}  // namespace coopkit
