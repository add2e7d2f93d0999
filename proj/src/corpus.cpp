#include "coopkit/corpus.hpp"

#include <algorithm>

namespace coopkit {

namespace {

Proof asm_leaf(std::vector<Formula> ante, Formula succ) {
  return Proof::axiom(AxiomSchema::ASM, Sequent(std::move(ante), std::move(succ)));
}

// discharges one copy of `hyp` from p's antecedent
Proof imp_i(const Proof& p, const Formula& hyp) {
  std::vector<Formula> ante = p.conclusion().antecedent;
  auto it = std::find(ante.begin(), ante.end(), hyp);
  ante.erase(it);
  return Proof::rule(RuleId::ImpI, {p},
                     Sequent(std::move(ante), Formula::imp(hyp, p.conclusion().succedent)));
}

Proof imp_e(const Proof& arg, const Proof& fun) {
  std::vector<Formula> ante = arg.conclusion().antecedent;
  for (const auto& f : fun.conclusion().antecedent) ante.push_back(f);
  return Proof::rule(RuleId::ImpE, {arg, fun},
                     Sequent(std::move(ante), fun.conclusion().succedent.right()));
}

Proof conj_i(const Proof& l, const Proof& r) {
  std::vector<Formula> ante = l.conclusion().antecedent;
  for (const auto& f : r.conclusion().antecedent) ante.push_back(f);
  return Proof::rule(
      RuleId::ConjI, {l, r},
      Sequent(std::move(ante),
              Formula::conj(l.conclusion().succedent, r.conclusion().succedent)));
}

// from Gamma |- A*B and Delta,A,B |- C conclude Gamma,Delta |- C
Proof conj_e(const Proof& pair, const Proof& body) {
  Formula a = pair.conclusion().succedent.left();
  Formula b = pair.conclusion().succedent.right();
  std::vector<Formula> ante = body.conclusion().antecedent;
  for (const Formula& f : {a, b}) ante.erase(std::find(ante.begin(), ante.end(), f));
  for (const auto& f : pair.conclusion().antecedent) ante.push_back(f);
  return Proof::rule(RuleId::ConjE, {pair, body},
                     Sequent(std::move(ante), body.conclusion().succedent));
}

std::vector<CorpusEntry> build_corpus() {
  using L = LogicId;
  Formula A = Formula::var("A"), B = Formula::var("B"), C = Formula::var("C");
  Formula P = Formula::var("P"), Q = Formula::var("Q");
  std::vector<CorpusEntry> out;

  out.push_back({"identity", imp_i(asm_leaf({P}, P), P), L::ALu, {}});

  out.push_back({"ded-uncurried", asm_leaf({P, Q}, P), L::ALu, {}});

  out.push_back({"ded-curried", imp_i(imp_i(asm_leaf({P, Q}, P), Q), P), L::ALu, {}});

  out.push_back({"ded-conj",
                 imp_i(conj_e(asm_leaf({Formula::conj(P, Q)}, Formula::conj(P, Q)),
                              asm_leaf({P, Q}, P)),
                       Formula::conj(P, Q)),
                 L::ALu,
                 {}});

  out.push_back({"a1", imp_i(imp_i(asm_leaf({A, B}, A), B), A), L::CLc, {}});

  {
    Formula ab = Formula::imp(A, B), bc = Formula::imp(B, C);
    Proof to_b = imp_e(asm_leaf({A}, A), asm_leaf({ab}, ab));
    Proof to_c = imp_e(to_b, asm_leaf({bc}, bc));
    out.push_back({"a2", imp_i(imp_i(imp_i(to_c, A), bc), ab), L::CLc, {}});
  }

  {
    Formula half = Formula::half(A);
    Formula hyp = Formula::imp(half, A);
    Proof hub = Proof::axiom(AxiomSchema::HUB, Sequent({hyp}, half));
    out.push_back({"a5", imp_i(hub, hyp), L::CLu, {L::ILu, L::IL, L::BL, L::LLi, L::ALc}});
  }

  {
    Formula half = Formula::half(A);
    Formula pair = Formula::conj(half, half);
    Proof hlb = Proof::axiom(AxiomSchema::HLB, Sequent({pair}, A));
    Proof both = conj_i(asm_leaf({half}, half), asm_leaf({half}, half));
    Proof body = imp_e(both, imp_i(hlb, pair));
    out.push_back(
        {"a6", imp_i(imp_i(body, half), half), L::CLu, {L::ILu, L::IL, L::BL, L::ALu}});
  }

  {
    Formula lhs = Formula::conj(A, Formula::imp(A, B));
    Formula rhs = Formula::conj(B, Formula::imp(B, A));
    Proof cwc = Proof::axiom(AxiomSchema::CWC, Sequent({lhs}, rhs));
    out.push_back({"cwc-theorem", imp_i(cwc, lhs), L::LLu, {L::ALu, L::ALi, L::ALc}});
  }

  {
    Formula qp = Formula::imp(Q, P);
    Proof grow = conj_i(asm_leaf({P}, P), imp_e(asm_leaf({Q}, Q), asm_leaf({qp}, qp)));
    out.push_back({"pocrim-law", imp_i(grow, Q), L::ALu, {}});
  }

  {
    Formula ab = Formula::conj(A, B);
    Proof swapped = conj_i(asm_leaf({B}, B), asm_leaf({A}, A));
    out.push_back(
        {"conj-comm", imp_i(conj_e(asm_leaf({ab}, ab), swapped), ab), L::ALu, {}});
  }

  {
    Formula ab = Formula::conj(A, B);
    Formula abc = Formula::conj(ab, C);
    Proof regrouped =
        conj_i(asm_leaf({A}, A), conj_i(asm_leaf({B}, B), asm_leaf({C}, C)));
    Proof mid = conj_e(asm_leaf({ab}, ab), regrouped);
    out.push_back({"conj-assoc", conj_e(asm_leaf({abc}, abc), mid), L::ALu, {}});
  }

  {
    Formula ab = Formula::imp(A, B);
    Formula pack = Formula::conj(A, ab);
    Proof use = imp_e(asm_leaf({A}, A), asm_leaf({ab}, ab));
    out.push_back({"weak-conj-elim", conj_e(asm_leaf({pack}, pack), use), L::ALu, {}});
  }

  out.push_back({"efq-half",
                 Proof::axiom(AxiomSchema::EFQ,
                              Sequent({Formula::one()}, Formula::half(P))),
                 L::CLi,
                 {L::CLu, L::LLi, L::IL, L::ALc}});

  out.push_back({"dne",
                 Proof::axiom(AxiomSchema::DNE,
                              Sequent({Formula::lnot(Formula::lnot(A))}, A)),
                 L::ALc,
                 {L::ALi, L::LLi, L::IL, L::CLi}});

  {
    Formula lhs = Formula::imp(Formula::imp(A, B), B);
    Formula rhs = Formula::imp(Formula::imp(B, A), A);
    Proof csd = Proof::axiom(AxiomSchema::CSD, Sequent({lhs}, rhs));
    out.push_back({"csd-a3", imp_i(csd, lhs), L::LLc, {L::LLi, L::ALc, L::IL, L::CLi}});
  }

  out.push_back({"con-dup",
                 Proof::axiom(AxiomSchema::CON, Sequent({P}, Formula::conj(P, P))),
                 L::ILu,
                 {L::CLu, L::CLc, L::LLc}});

  return out;
}

}  // namespace

const std::vector<CorpusEntry>& proof_corpus() {
  static const std::vector<CorpusEntry> corpus = build_corpus();
  return corpus;
}

}  // namespace coopkit
