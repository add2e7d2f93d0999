#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "coopkit/corpus.hpp"
#include "coopkit/proof.hpp"

using namespace coopkit;

namespace {

Formula P() { return Formula::var("P"); }
Formula Q() { return Formula::var("Q"); }

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : proof_corpus())
    if (e.name == name) return e;
  throw std::runtime_error("no corpus entry " + name);
}

}  // namespace

TEST_CASE("axiom instance matching") {
  CHECK(match_axiom(parse_sequent("Q, P |- P"), AxiomSchema::ASM));
  CHECK(match_axiom(parse_sequent("1 |- P/2"), AxiomSchema::EFQ));
  CHECK(!match_axiom(parse_sequent("P |- P * P"), AxiomSchema::ASM));
  CHECK(match_axiom(parse_sequent("P |- P * P"), AxiomSchema::CON));
  CHECK(match_axiom(parse_sequent("R, P * (P -o Q) |- Q * (Q -o P)"), AxiomSchema::CWC));
  CHECK(!match_axiom(parse_sequent("P * (P -o Q) |- Q * (P -o P)"), AxiomSchema::CWC));
  CHECK(match_axiom(parse_sequent("(P -o Q) -o Q |- (Q -o P) -o P"), AxiomSchema::CSD));
  CHECK(match_axiom(parse_sequent("P/2 * P/2 |- P"), AxiomSchema::HLB));
  CHECK(match_axiom(parse_sequent("R, P/2 -o P |- P/2"), AxiomSchema::HUB));
  CHECK(!match_axiom(parse_sequent("P -o P |- P/2"), AxiomSchema::HUB));
  CHECK(match_axiom(parse_sequent("(P -o 1) -o 1 |- P"), AxiomSchema::DNE));
  CHECK(match_axiom(parse_sequent("P^^ |- P"), AxiomSchema::DNE));
}

TEST_CASE("axiom admissibility follows the extension order") {
  auto admitted = [](LogicId l, AxiomSchema a) {
    const auto& v = admissible_axioms(l);
    return std::find(v.begin(), v.end(), a) != v.end();
  };
  CHECK(admitted(LogicId::LLc, AxiomSchema::CWC));  // a theorem of LLc, not a Table-1 axiom
  CHECK(!admitted(LogicId::CLu, AxiomSchema::CON));
  CHECK(!admitted(LogicId::CLu, AxiomSchema::EFQ));
  CHECK(admitted(LogicId::BL, AxiomSchema::CSD));
  CHECK(!admitted(LogicId::ALc, AxiomSchema::CWC));
  CHECK(axioms(LogicId::LLc) ==
        std::vector<AxiomSchema>{AxiomSchema::ASM, AxiomSchema::EFQ, AxiomSchema::CSD});
}

TEST_CASE("the identity proof checks in the weakest logic") {
  Proof id = Proof::rule(RuleId::ImpI, {Proof::axiom(AxiomSchema::ASM, Sequent({P()}, P()))},
                         parse_sequent("|- P -o P"));
  CHECK(check_proof(id, LogicId::ALu).ok);
}

TEST_CASE("checking catches rule-shape and multiset violations") {
  // ImpI that drops the wrong hypothesis
  Proof bad = Proof::rule(RuleId::ImpI, {Proof::axiom(AxiomSchema::ASM, Sequent({P()}, P()))},
                          parse_sequent("|- Q -o P"));
  auto r = check_proof(bad, LogicId::ALu);
  CHECK(!r.ok);
  CHECK(r.failures.front().reason.find("antecedent") != std::string::npos);

  // duplicated assumption use: P |- P * P via ConjI from a single copy
  Proof dup = Proof::rule(
      RuleId::ConjI,
      {Proof::axiom(AxiomSchema::ASM, Sequent({P()}, P())),
       Proof::axiom(AxiomSchema::ASM, Sequent({P()}, P()))},
      parse_sequent("P |- P * P"));
  CHECK(!check_proof(dup, LogicId::ALu).ok);  // union has two copies of P

  // premise count
  Proof arity = Proof::rule(RuleId::ImpE,
                            {Proof::axiom(AxiomSchema::ASM, Sequent({P()}, P()))},
                            parse_sequent("P |- P"));
  CHECK(!check_proof(arity, LogicId::ALu).ok);

  // language violation: halving outside CL*
  Proof half = Proof::axiom(AxiomSchema::ASM,
                            Sequent({Formula::half(P())}, Formula::half(P())));
  CHECK(!check_proof(half, LogicId::ALu).ok);
  CHECK(check_proof(half, LogicId::CLu).ok);

  // axiom not in the logic
  Proof con = Proof::axiom(AxiomSchema::CON, parse_sequent("P |- P * P"));
  CHECK(check_proof(con, LogicId::ILu).ok);
  auto rejected = check_proof(con, LogicId::CLu);
  CHECK(!rejected.ok);
  CHECK(rejected.failures.front().reason.find("not admitted") != std::string::npos);
}

TEST_CASE("failure paths point into the tree") {
  Proof bad_leaf = Proof::axiom(AxiomSchema::ASM, parse_sequent("P |- Q"));
  Proof tree = Proof::rule(RuleId::ImpI, {bad_leaf}, parse_sequent("|- P -o Q"));
  auto r = check_proof(tree, LogicId::ALu);
  REQUIRE(!r.ok);
  bool found = false;
  for (const auto& f : r.failures)
    if (f.path == "0") found = true;
  CHECK(found);
}

TEST_CASE("corpus proofs check in their designated logics and extensions") {
  for (const auto& e : proof_corpus()) {
    CAPTURE(e.name);
    CHECK(check_proof(e.proof, e.designated).ok);
    for (LogicId ext : logic_extensions(e.designated)) {
      CAPTURE(to_string(ext));
      CHECK(check_proof(e.proof, ext).ok);
    }
    for (LogicId bad : e.expected_failures) {
      CAPTURE(to_string(bad));
      CHECK(!logic_extends(bad, e.designated));
      CHECK(!check_proof(e.proof, bad).ok);
    }
  }
}

TEST_CASE("weakening pushes a formula to one leaf") {
  const Proof& id_axiom = Proof::axiom(AxiomSchema::ASM, Sequent({P()}, P()));
  Proof w = weaken(id_axiom, Q());
  CHECK(w.conclusion() == parse_sequent("Q, P |- P"));
  CHECK(check_proof(w, LogicId::ALu).ok);

  Proof id = Proof::rule(RuleId::ImpI, {id_axiom}, parse_sequent("|- P -o P"));
  Proof wr = weaken(id, Formula::var("R"));
  CHECK(wr.conclusion() == parse_sequent("R |- P -o P"));
  CHECK(check_proof(wr, LogicId::ALu).ok);

  Proof twice = weaken(weaken(id, Q()), Q());
  CHECK(twice.conclusion().antecedent == std::vector<Formula>{Q(), Q()});
  CHECK(check_proof(twice, LogicId::ALu).ok);
}

TEST_CASE("weakening preserves checkability on the whole corpus") {
  for (const auto& e : proof_corpus()) {
    Formula extra = Formula::var("W_fresh");
    Proof w = weaken(e.proof, extra);
    CAPTURE(e.name);
    CHECK(check_proof(w, e.designated).ok);
  }
}

TEST_CASE("deduction theorem round trips") {
  Proof base = Proof::axiom(AxiomSchema::ASM, parse_sequent("P, Q |- P"));

  Proof curried = apply_deduction(base, DeductionTarget::Curried);
  CHECK(curried.conclusion() == parse_sequent("|- P -o Q -o P"));
  CHECK(check_proof(curried, LogicId::ALu).ok);

  Proof conj = apply_deduction(base, DeductionTarget::ConjForm);
  CHECK(conj.conclusion() == parse_sequent("|- P * Q -o P"));
  CHECK(check_proof(conj, LogicId::ALu).ok);

  Proof back1 = apply_deduction(curried, DeductionTarget::Uncurried);
  CHECK(back1.conclusion() == base.conclusion());
  CHECK(check_proof(back1, LogicId::ALu).ok);

  Proof back2 = apply_deduction(conj, DeductionTarget::Uncurried);
  CHECK(back2.conclusion() == base.conclusion());
  CHECK(check_proof(back2, LogicId::ALu).ok);

  // m = 0: already in target shape
  const Proof& id = corpus_entry("identity").proof;
  CHECK(apply_deduction(id, DeductionTarget::Curried).conclusion() == id.conclusion());
  CHECK(apply_deduction(id, DeductionTarget::Curried).node_count() == id.node_count());

  // nonempty antecedent is already uncurried
  CHECK(apply_deduction(base, DeductionTarget::Uncurried).conclusion() == base.conclusion());
}

TEST_CASE("uncurrying a non-implication is a shape error") {
  Proof pair = Proof::rule(
      RuleId::ConjI,
      {Proof::rule(RuleId::ImpI, {Proof::axiom(AxiomSchema::ASM, Sequent({P()}, P()))},
                   parse_sequent("|- P -o P")),
       Proof::rule(RuleId::ImpI, {Proof::axiom(AxiomSchema::ASM, Sequent({Q()}, Q()))},
                   parse_sequent("|- Q -o Q"))},
      parse_sequent("|- (P -o P) * (Q -o Q)"));
  REQUIRE(check_proof(pair, LogicId::ALu).ok);
  CHECK_THROWS_AS(apply_deduction(pair, DeductionTarget::Uncurried), ShapeError);
}

TEST_CASE("proof json round trip and golden files") {
  for (const auto& e : proof_corpus()) {
    nlohmann::json j = proof_to_json(e.proof);
    Proof back = proof_from_json(j);
    CHECK(proof_to_json(back) == j);
    CHECK(back.conclusion() == e.proof.conclusion());

    std::ifstream in(std::string(COOPKIT_DATA_DIR) + "/proofs/" + e.name + ".json");
    REQUIRE(in.good());
    nlohmann::json golden;
    in >> golden;
    CHECK(golden == j);
  }
}

TEST_CASE("proof monotonicity along the extension order") {
  for (const auto& e : proof_corpus()) {
    for (LogicId l : all_logics()) {
      if (!check_proof(e.proof, l).ok) continue;
      for (LogicId ext : logic_extensions(l)) {
        CAPTURE(e.name, to_string(l), to_string(ext));
        CHECK(check_proof(e.proof, ext).ok);
      }
    }
  }
}
