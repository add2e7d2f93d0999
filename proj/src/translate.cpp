#include "coopkit/translate.hpp"

#include <algorithm>
#include <functional>

namespace coopkit {

namespace {

using Ctx = std::function<AlgTerm(const AlgTerm&)>;

class ChainBuilder {
 public:
  explicit ChainBuilder(const AlgTerm& start) { chain_.start = ac_normalize(start); }

  const AlgTerm& current() const { return chain_.final_term(); }

  // Emits one equation step toward target, locating a position that the
  // independent verifier accepts. A target AC-equal to the current term is
  // absorbed (implicit monoid rearrangement).
  void step(EqId eq, EqDir dir, const AlgTerm& target_raw) {
    AlgTerm target = ac_normalize(target_raw);
    AlgTerm cur = current();
    if (target == cur) return;
    bool host_is_to = dir == EqDir::R2L &&
                      (eq == EqId::Eq1 || eq == EqId::Eq2 || eq == EqId::Eq3);
    const AlgTerm& host = host_is_to ? target : cur;
    for (const auto& pos : all_positions(host)) {
      EqStep s{cur, target, eq, dir, pos};
      if (verify_step(s)) {
        chain_.steps.push_back(std::move(s));
        return;
      }
    }
    throw std::logic_error("translation step failed: " + to_string(eq) + " from '" +
                           render_alg_term(cur) + "' to '" + render_alg_term(target) + "'");
  }

  void splice_forward(const EqChain& k, const Ctx& ctx) {
    require(ctx(k.start), "forward splice entry");
    for (const auto& s : k.steps) step(s.justification, s.direction, ctx(s.to));
  }

  void splice_reversed(const EqChain& k, const Ctx& ctx) {
    require(ctx(k.final_term()), "reversed splice entry");
    for (auto it = k.steps.rbegin(); it != k.steps.rend(); ++it)
      step(it->justification, flip(it->direction), ctx(it->from));
  }

  EqChain take() { return std::move(chain_); }

 private:
  void require(const AlgTerm& t, const char* what) {
    if (ac_normalize(t) != current())
      throw std::logic_error(std::string(what) + " mismatch: '" +
                             render_alg_term(ac_normalize(t)) + "' vs '" +
                             render_alg_term(current()) + "'");
  }

  EqChain chain_;
};

AlgTerm term_of(const Formula& f) { return ac_normalize(formula_to_term(f)); }

std::vector<AlgTerm> antecedent_parts(const std::vector<Formula>& fs) {
  std::vector<AlgTerm> parts;
  for (const auto& f : fs)
    for (auto& s : summands(term_of(f))) parts.push_back(std::move(s));
  return parts;
}

std::vector<AlgTerm> concat(std::initializer_list<std::vector<AlgTerm>> lists) {
  std::vector<AlgTerm> out;
  for (const auto& l : lists) out.insert(out.end(), l.begin(), l.end());
  return out;
}

// multiset difference of formula vectors (both sorted)
std::vector<Formula> formula_minus(const std::vector<Formula>& from,
                                   const std::vector<Formula>& take) {
  std::vector<Formula> out;
  std::size_t i = 0, j = 0;
  while (i < from.size()) {
    if (j < take.size() && from[i] == take[j]) {
      ++i;
      ++j;
    } else {
      out.push_back(from[i++]);
    }
  }
  return out;
}

Ctx sum_ctx(std::vector<AlgTerm> prefix, AlgTerm succ) {
  return [prefix = std::move(prefix), succ = std::move(succ)](const AlgTerm& z) {
    auto parts = prefix;
    parts.push_back(z);
    return AlgTerm::imp(AlgTerm::sum(std::move(parts)), succ);
  };
}

Ctx identity_ctx() {
  return [](const AlgTerm& z) { return z; };
}

EqChain translate_node(const Proof& p);

void finish_by_pull(ChainBuilder& b, const std::vector<AlgTerm>& xs, const AlgTerm& goal) {
  // current: xs + goal-parts -> goal; pull the goal, collapse, discharge
  if (goal.kind() == AlgTerm::Kind::Zero) {
    b.step(EqId::Eq2, EqDir::L2R, AlgTerm::zero());
    return;
  }
  if (xs.empty()) {
    b.step(EqId::Eq1, EqDir::L2R, AlgTerm::zero());
    return;
  }
  b.step(EqId::Eq4, EqDir::L2R, AlgTerm::imp(sum_of(xs), AlgTerm::imp(goal, goal)));
  b.step(EqId::Eq1, EqDir::L2R, AlgTerm::imp(sum_of(xs), AlgTerm::zero()));
  b.step(EqId::Eq2, EqDir::L2R, AlgTerm::zero());
}

EqChain translate_asm(const Proof& p) {
  const Sequent& c = p.conclusion();
  ChainBuilder b(sequent_term(c));
  AlgTerm a = term_of(c.succedent);
  if (a.kind() == AlgTerm::Kind::Zero) {
    b.step(EqId::Eq2, EqDir::L2R, AlgTerm::zero());
    return b.take();
  }
  std::vector<AlgTerm> full = summands(ac_normalize(AlgTerm::sum(antecedent_parts(c.antecedent))));
  std::vector<AlgTerm> rest = full;
  for (const auto& s : summands(a)) {
    auto it = std::find(rest.begin(), rest.end(), s);
    rest.erase(it);  // ASM guarantees the succedent's copy is present
  }
  finish_by_pull(b, rest, a);
  return b.take();
}

EqChain translate_cwc(const Proof& p) {
  const Sequent& c = p.conclusion();
  // succedent B * (B -o A); the matched antecedent member is A * (A -o B)
  Formula bf = c.succedent.left();
  Formula af = c.succedent.right().right();
  Formula lhs = Formula::conj(af, Formula::imp(af, bf));
  AlgTerm succ = term_of(c.succedent);
  std::vector<AlgTerm> gamma = antecedent_parts(formula_minus(c.antecedent, {lhs}));

  ChainBuilder b(sequent_term(c));
  b.step(EqId::Eq5, EqDir::L2R,
         AlgTerm::imp(AlgTerm::sum(concat({gamma, summands(succ)})), succ));
  finish_by_pull(b, gamma, succ);
  return b.take();
}

EqChain translate_imp_i(const Proof& p) {
  EqChain k = translate_node(p.premises()[0]);
  const Sequent& c = p.conclusion();
  std::vector<AlgTerm> gamma = antecedent_parts(c.antecedent);
  ChainBuilder b(sequent_term(c));
  if (!gamma.empty())
    b.step(EqId::Eq4, EqDir::R2L, sequent_term(p.premises()[0].conclusion()));
  b.splice_forward(k, identity_ctx());
  return b.take();
}

EqChain translate_imp_e(const Proof& p) {
  EqChain k1 = translate_node(p.premises()[0]);
  EqChain k2 = translate_node(p.premises()[1]);
  const Sequent& c = p.conclusion();
  const Sequent& q1 = p.premises()[0].conclusion();
  const Sequent& q2 = p.premises()[1].conclusion();
  std::vector<AlgTerm> gamma = antecedent_parts(q1.antecedent);
  std::vector<AlgTerm> delta = antecedent_parts(q2.antecedent);
  AlgTerm na = term_of(q1.succedent);
  AlgTerm nb = term_of(c.succedent);

  ChainBuilder b(sequent_term(c));
  if (gamma.empty() && delta.empty()) {
    b.step(EqId::Eq3, EqDir::R2L, AlgTerm::imp(AlgTerm::zero(), nb));
    b.splice_reversed(k1, [&](const AlgTerm& z) { return AlgTerm::imp(z, nb); });
    b.splice_forward(k2, identity_ctx());
    return b.take();
  }

  std::vector<AlgTerm> stabilized;  // a -> Gamma, once Gamma is swapped out
  if (!gamma.empty()) {
    b.splice_reversed(k1, sum_ctx(concat({gamma, delta}), nb));
    AlgTerm a_to_gamma = AlgTerm::imp(na, sum_of(gamma));
    b.step(EqId::Eq5, EqDir::L2R,
           AlgTerm::imp(AlgTerm::sum(concat({summands(na), {a_to_gamma}, delta})), nb));
    stabilized.push_back(std::move(a_to_gamma));
  } else {
    b.splice_reversed(k1, sum_ctx(delta, nb));
  }

  std::vector<AlgTerm> base = concat({stabilized, summands(na), delta});
  b.splice_reversed(k2, sum_ctx(base, nb));
  std::vector<AlgTerm> x_parts = concat({delta, summands(na)});
  if (!delta.empty())
    b.step(EqId::Eq4, EqDir::R2L,
           AlgTerm::imp(AlgTerm::sum(concat({base, {AlgTerm::imp(sum_of(x_parts), nb)}})),
                        nb));
  if (nb.kind() == AlgTerm::Kind::Zero) {
    b.step(EqId::Eq2, EqDir::L2R, AlgTerm::zero());
    return b.take();
  }
  AlgTerm b_to_x = AlgTerm::imp(nb, sum_of(x_parts));
  b.step(EqId::Eq5, EqDir::L2R,
         AlgTerm::imp(AlgTerm::sum(concat({stabilized, summands(nb), {b_to_x}})), nb));
  finish_by_pull(b, concat({stabilized, {b_to_x}}), nb);
  return b.take();
}

EqChain translate_conj_i(const Proof& p) {
  EqChain k1 = translate_node(p.premises()[0]);
  EqChain k2 = translate_node(p.premises()[1]);
  const Sequent& c = p.conclusion();
  std::vector<AlgTerm> gamma = antecedent_parts(p.premises()[0].conclusion().antecedent);
  std::vector<AlgTerm> delta = antecedent_parts(p.premises()[1].conclusion().antecedent);
  AlgTerm na = term_of(p.premises()[0].conclusion().succedent);
  AlgTerm nb = term_of(p.premises()[1].conclusion().succedent);
  AlgTerm succ = term_of(c.succedent);

  ChainBuilder b(sequent_term(c));
  if (gamma.empty() && delta.empty()) {
    b.splice_forward(k1, [&](const AlgTerm& z) { return AlgTerm::sum({z, nb}); });
    b.splice_forward(k2, identity_ctx());
    return b.take();
  }

  std::vector<AlgTerm> r1, r2;
  if (!gamma.empty()) {
    b.splice_reversed(k1, sum_ctx(concat({gamma, delta}), succ));
    AlgTerm swap = AlgTerm::imp(na, sum_of(gamma));
    b.step(EqId::Eq5, EqDir::L2R,
           AlgTerm::imp(AlgTerm::sum(concat({summands(na), {swap}, delta})), succ));
    r1.push_back(std::move(swap));
  } else {
    b.splice_reversed(k1, sum_ctx(delta, succ));
  }
  std::vector<AlgTerm> base = concat({r1, summands(na), delta});
  if (!delta.empty()) {
    b.splice_reversed(k2, sum_ctx(base, succ));
    AlgTerm swap = AlgTerm::imp(nb, sum_of(delta));
    b.step(EqId::Eq5, EqDir::L2R,
           AlgTerm::imp(AlgTerm::sum(concat({r1, summands(na), summands(nb), {swap}})),
                        succ));
    r2.push_back(std::move(swap));
  } else {
    b.splice_reversed(k2, sum_ctx(base, succ));
  }
  finish_by_pull(b, concat({r1, r2}), succ);
  return b.take();
}

EqChain translate_conj_e(const Proof& p) {
  EqChain k1 = translate_node(p.premises()[0]);
  EqChain k2 = translate_node(p.premises()[1]);
  const Sequent& c = p.conclusion();
  const Sequent& q1 = p.premises()[0].conclusion();
  const Sequent& q2 = p.premises()[1].conclusion();
  Formula af = q1.succedent.left(), bf = q1.succedent.right();
  std::vector<AlgTerm> gamma = antecedent_parts(q1.antecedent);
  std::vector<AlgTerm> delta =
      antecedent_parts(formula_minus(q2.antecedent, af < bf ? std::vector<Formula>{af, bf}
                                                            : std::vector<Formula>{bf, af}));
  AlgTerm ab = term_of(q1.succedent);
  AlgTerm nc = term_of(c.succedent);

  ChainBuilder b(sequent_term(c));
  std::vector<AlgTerm> r;
  if (!gamma.empty()) {
    b.splice_reversed(k1, sum_ctx(concat({gamma, delta}), nc));
    AlgTerm swap = AlgTerm::imp(ab, sum_of(gamma));
    b.step(EqId::Eq5, EqDir::L2R,
           AlgTerm::imp(AlgTerm::sum(concat({summands(ab), {swap}, delta})), nc));
    r.push_back(std::move(swap));
  } else if (delta.empty()) {
    b.step(EqId::Eq3, EqDir::R2L, AlgTerm::imp(AlgTerm::zero(), nc));
    b.splice_reversed(k1, [&](const AlgTerm& z) { return AlgTerm::imp(z, nc); });
  } else {
    b.splice_reversed(k1, sum_ctx(delta, nc));
  }

  std::vector<AlgTerm> inner = concat({delta, summands(ab)});
  AlgTerm k2_start = ac_normalize(sequent_term(q2));
  if (r.empty()) {
    b.splice_forward(k2, identity_ctx());
    return b.take();
  }
  if (!inner.empty()) {
    b.step(EqId::Eq4, EqDir::L2R, AlgTerm::imp(sum_of(r), k2_start));
  } else {
    b.step(EqId::Eq3, EqDir::R2L, AlgTerm::imp(sum_of(r), k2_start));
  }
  b.splice_forward(k2, [&](const AlgTerm& z) { return AlgTerm::imp(sum_of(r), z); });
  b.step(EqId::Eq2, EqDir::L2R, AlgTerm::zero());
  return b.take();
}

EqChain translate_node(const Proof& p) {
  if (p.is_axiom()) {
    switch (p.schema()) {
      case AxiomSchema::ASM:
        return translate_asm(p);
      case AxiomSchema::CWC:
        return translate_cwc(p);
      default:
        throw UnsupportedAxiom("axiom " + to_string(p.schema()) +
                               " has no equational translation (only ASM and CWC)");
    }
  }
  switch (p.rule_id()) {
    case RuleId::ImpI: return translate_imp_i(p);
    case RuleId::ImpE: return translate_imp_e(p);
    case RuleId::ConjI: return translate_conj_i(p);
    case RuleId::ConjE: return translate_conj_e(p);
  }
  throw std::invalid_argument("unreachable rule kind");
}

}  // namespace

EqChain translate_proof(const Proof& p) {
  auto report = check_proof(p, LogicId::LLu);
  if (!report.ok) {
    // surface an UnsupportedAxiom leaf as such, anything else as a precondition error
    std::function<void(const Proof&)> scan = [&](const Proof& q) {
      if (q.is_axiom()) {
        if (q.schema() != AxiomSchema::ASM && q.schema() != AxiomSchema::CWC)
          throw UnsupportedAxiom("axiom " + to_string(q.schema()) +
                                 " has no equational translation (only ASM and CWC)");
      } else {
        for (const auto& r : q.premises()) scan(r);
      }
    };
    scan(p);
    throw std::invalid_argument("translate_proof needs a proof that checks in LLu: " +
                                report.failures.front().reason);
  }
  return translate_node(p);
}

}  // namespace coopkit
