#include "coopkit/proof.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace coopkit {

namespace {

constexpr int kLogicCount = 12;

int logic_index(LogicId l) { return static_cast<int>(l); }

// Extension arrows between the logics (from, to): `to` extends `from`.
const std::vector<std::pair<LogicId, LogicId>>& logic_edges() {
  using L = LogicId;
  static const std::vector<std::pair<L, L>> edges = {
      {L::ALu, L::ALi}, {L::ALi, L::ALc}, {L::LLu, L::LLi}, {L::LLi, L::LLc},
      {L::CLu, L::CLi}, {L::CLi, L::CLc}, {L::ILu, L::IL},  {L::IL, L::BL},
      {L::ALu, L::LLu}, {L::LLu, L::CLu}, {L::ALi, L::LLi}, {L::LLi, L::CLi},
      {L::ALc, L::LLc}, {L::LLc, L::CLc}, {L::LLu, L::ILu}, {L::LLi, L::IL},
      {L::LLc, L::BL},
  };
  return edges;
}

const std::array<std::array<bool, kLogicCount>, kLogicCount>& extends_matrix() {
  static const auto matrix = [] {
    std::array<std::array<bool, kLogicCount>, kLogicCount> m{};
    for (int i = 0; i < kLogicCount; ++i) m[i][i] = true;
    for (auto [from, to] : logic_edges()) m[logic_index(to)][logic_index(from)] = true;
    for (int k = 0; k < kLogicCount; ++k)
      for (int i = 0; i < kLogicCount; ++i)
        for (int j = 0; j < kLogicCount; ++j)
          if (m[i][k] && m[k][j]) m[i][j] = true;
    return m;
  }();
  return matrix;
}

}  // namespace

std::string to_string(AxiomSchema s) {
  switch (s) {
    case AxiomSchema::ASM: return "ASM";
    case AxiomSchema::EFQ: return "EFQ";
    case AxiomSchema::DNE: return "DNE";
    case AxiomSchema::CWC: return "CWC";
    case AxiomSchema::CSD: return "CSD";
    case AxiomSchema::CON: return "CON";
    case AxiomSchema::HLB: return "HLB";
    case AxiomSchema::HUB: return "HUB";
  }
  return "?";
}

std::string to_string(RuleId r) {
  switch (r) {
    case RuleId::ImpI: return "ImpI";
    case RuleId::ImpE: return "ImpE";
    case RuleId::ConjI: return "ConjI";
    case RuleId::ConjE: return "ConjE";
  }
  return "?";
}

std::string to_string(LogicId l) {
  switch (l) {
    case LogicId::ALu: return "ALu";
    case LogicId::ALi: return "ALi";
    case LogicId::ALc: return "ALc";
    case LogicId::LLu: return "LLu";
    case LogicId::LLi: return "LLi";
    case LogicId::LLc: return "LLc";
    case LogicId::ILu: return "ILu";
    case LogicId::IL: return "IL";
    case LogicId::BL: return "BL";
    case LogicId::CLu: return "CLu";
    case LogicId::CLi: return "CLi";
    case LogicId::CLc: return "CLc";
  }
  return "?";
}

AxiomSchema parse_axiom_schema(const std::string& name) {
  static const std::map<std::string, AxiomSchema> table = {
      {"ASM", AxiomSchema::ASM}, {"EFQ", AxiomSchema::EFQ}, {"DNE", AxiomSchema::DNE},
      {"CWC", AxiomSchema::CWC}, {"CSD", AxiomSchema::CSD}, {"CON", AxiomSchema::CON},
      {"HLB", AxiomSchema::HLB}, {"HUB", AxiomSchema::HUB}};
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown axiom schema: " + name);
  return it->second;
}

RuleId parse_rule_id(const std::string& name) {
  static const std::map<std::string, RuleId> table = {{"ImpI", RuleId::ImpI},
                                                      {"ImpE", RuleId::ImpE},
                                                      {"ConjI", RuleId::ConjI},
                                                      {"ConjE", RuleId::ConjE}};
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown rule: " + name);
  return it->second;
}

LogicId parse_logic_id(const std::string& name) {
  for (LogicId l : all_logics())
    if (to_string(l) == name) return l;
  throw std::invalid_argument("unknown logic: " + name);
}

const std::vector<LogicId>& all_logics() {
  using L = LogicId;
  static const std::vector<L> logics = {L::ALu, L::ALi, L::ALc, L::LLu, L::LLi, L::LLc,
                                        L::ILu, L::IL,  L::BL,  L::CLu, L::CLi, L::CLc};
  return logics;
}

const std::vector<AxiomSchema>& axioms(LogicId logic) {
  using A = AxiomSchema;
  static const std::map<LogicId, std::vector<A>> table = {
      {LogicId::ALu, {A::ASM}},
      {LogicId::ALi, {A::ASM, A::EFQ}},
      {LogicId::ALc, {A::ASM, A::EFQ, A::DNE}},
      {LogicId::LLu, {A::ASM, A::CWC}},
      {LogicId::LLi, {A::ASM, A::CWC, A::EFQ}},
      {LogicId::LLc, {A::ASM, A::EFQ, A::CSD}},
      {LogicId::ILu, {A::ASM, A::CON}},
      {LogicId::IL, {A::ASM, A::EFQ, A::CON}},
      {LogicId::BL, {A::ASM, A::EFQ, A::CON, A::DNE}},
      {LogicId::CLu, {A::ASM, A::CWC, A::HLB, A::HUB}},
      {LogicId::CLi, {A::ASM, A::CWC, A::EFQ, A::HLB, A::HUB}},
      {LogicId::CLc, {A::ASM, A::EFQ, A::CSD, A::HLB, A::HUB}},
  };
  return table.at(logic);
}

const std::vector<AxiomSchema>& admissible_axioms(LogicId logic) {
  static const std::map<LogicId, std::vector<AxiomSchema>> table = [] {
    std::map<LogicId, std::vector<AxiomSchema>> t;
    for (LogicId upper : all_logics()) {
      std::set<AxiomSchema> acc;
      for (LogicId lower : all_logics())
        if (logic_extends(upper, lower))
          for (AxiomSchema a : axioms(lower)) acc.insert(a);
      t[upper] = std::vector<AxiomSchema>(acc.begin(), acc.end());
    }
    return t;
  }();
  return table.at(logic);
}

LanguageId logic_language(LogicId logic) {
  switch (logic) {
    case LogicId::ALu:
    case LogicId::LLu:
    case LogicId::ILu:
      return LanguageId::Lo;
    case LogicId::ALi:
    case LogicId::ALc:
    case LogicId::LLi:
    case LogicId::LLc:
    case LogicId::IL:
    case LogicId::BL:
      return LanguageId::Li;
    case LogicId::CLu:
      return LanguageId::Lh;
    case LogicId::CLi:
    case LogicId::CLc:
      return LanguageId::Lih;
  }
  return LanguageId::Lih;
}

bool logic_extends(LogicId upper, LogicId lower) {
  return extends_matrix()[logic_index(upper)][logic_index(lower)];
}

std::vector<LogicId> logic_extensions(LogicId logic) {
  std::vector<LogicId> out;
  for (LogicId l : all_logics())
    if (l != logic && logic_extends(l, logic)) out.push_back(l);
  return out;
}

Proof Proof::axiom(AxiomSchema schema, Sequent conclusion) {
  auto n = std::make_shared<Node>();
  n->is_axiom = true;
  n->schema = schema;
  n->conclusion = std::move(conclusion);
  return Proof(std::move(n));
}

Proof Proof::rule(RuleId rule, std::vector<Proof> premises, Sequent conclusion) {
  auto n = std::make_shared<Node>();
  n->is_axiom = false;
  n->rule = rule;
  n->premises = std::move(premises);
  n->conclusion = std::move(conclusion);
  return Proof(std::move(n));
}

std::size_t Proof::node_count() const {
  std::size_t c = 1;
  for (const auto& q : premises()) c += q.node_count();
  return c;
}

namespace {

bool ms_contains(const std::vector<Formula>& sorted, const Formula& f) {
  return std::binary_search(sorted.begin(), sorted.end(), f);
}

std::vector<Formula> ms_union(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  std::vector<Formula> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Formula> ms_insert(std::vector<Formula> v, const Formula& f) {
  v.insert(std::upper_bound(v.begin(), v.end(), f), f);
  return v;
}

// Removes the multiset `take` from `from`; nullopt if any copy is missing.
std::optional<std::vector<Formula>> ms_minus(const std::vector<Formula>& from,
                                             const std::vector<Formula>& take) {
  std::vector<Formula> out;
  std::size_t i = 0, j = 0;
  while (i < from.size() && j < take.size()) {
    int c = Formula::compare(from[i], take[j]);
    if (c < 0)
      out.push_back(from[i++]);
    else if (c == 0) {
      ++i;
      ++j;
    } else
      return std::nullopt;
  }
  if (j < take.size()) return std::nullopt;
  out.insert(out.end(), from.begin() + i, from.end());
  return out;
}

}  // namespace

bool match_axiom(const Sequent& s, AxiomSchema schema) {
  const auto& ante = s.antecedent;
  const Formula& succ = s.succedent;
  switch (schema) {
    case AxiomSchema::ASM:
      return ms_contains(ante, succ);
    case AxiomSchema::EFQ:
      return ms_contains(ante, Formula::one());
    case AxiomSchema::DNE:
      return ms_contains(ante, Formula::lnot(Formula::lnot(succ)));
    case AxiomSchema::CWC: {
      // succedent B * (B -o A), antecedent holds A * (A -o B)
      if (succ.kind() != FormulaKind::Conj) return false;
      Formula b = succ.left();
      if (succ.right().kind() != FormulaKind::Imp || succ.right().left() != b) return false;
      Formula a = succ.right().right();
      return ms_contains(ante, Formula::conj(a, Formula::imp(a, b)));
    }
    case AxiomSchema::CSD: {
      // succedent (B -o A) -o A, antecedent holds (A -o B) -o B
      if (succ.kind() != FormulaKind::Imp || succ.left().kind() != FormulaKind::Imp)
        return false;
      Formula a = succ.right();
      if (succ.left().right() != a) return false;
      Formula b = succ.left().left();
      return ms_contains(ante, Formula::imp(Formula::imp(a, b), b));
    }
    case AxiomSchema::CON: {
      if (succ.kind() != FormulaKind::Conj || succ.left() != succ.right()) return false;
      return ms_contains(ante, succ.left());
    }
    case AxiomSchema::HLB:
      return ms_contains(ante,
                         Formula::conj(Formula::half(succ), Formula::half(succ)));
    case AxiomSchema::HUB: {
      if (succ.kind() != FormulaKind::Half) return false;
      return ms_contains(ante, Formula::imp(succ, succ.body()));
    }
  }
  return false;
}

namespace {

void check_node(const Proof& p, LogicId logic, const std::string& path, CheckReport& report) {
  auto fail = [&](const std::string& reason) {
    report.ok = false;
    report.failures.push_back({path, reason});
  };

  LanguageId allowed = logic_language(logic);
  auto check_lang = [&](const Formula& f) {
    if (!language_leq(classify_language(f), allowed))
      fail("formula '" + render_formula(f) + "' outside language " + to_string(allowed));
  };
  for (const auto& f : p.conclusion().antecedent) check_lang(f);
  check_lang(p.conclusion().succedent);

  if (p.is_axiom()) {
    const auto& admitted = admissible_axioms(logic);
    if (std::find(admitted.begin(), admitted.end(), p.schema()) == admitted.end()) {
      fail("axiom " + to_string(p.schema()) + " not admitted in " + to_string(logic));
    } else if (!match_axiom(p.conclusion(), p.schema())) {
      fail("sequent is not an instance of " + to_string(p.schema()));
    }
    if (!p.premises().empty()) fail("axiom leaf with premises");
    return;
  }

  const auto& prems = p.premises();
  const Sequent& c = p.conclusion();
  std::size_t expected = p.rule_id() == RuleId::ImpI ? 1 : 2;
  if (prems.size() != expected) {
    fail("rule " + to_string(p.rule_id()) + " expects " + std::to_string(expected) +
         " premise(s)");
    return;
  }

  switch (p.rule_id()) {
    case RuleId::ImpI: {
      if (c.succedent.kind() != FormulaKind::Imp) {
        fail("ImpI conclusion succedent is not an implication");
        break;
      }
      Formula a = c.succedent.left(), b = c.succedent.right();
      const Sequent& q = prems[0].conclusion();
      if (q.succedent != b) fail("ImpI premise succedent mismatch");
      if (q.antecedent != ms_insert(c.antecedent, a))
        fail("ImpI antecedent mismatch: premise must add one copy of the hypothesis");
      break;
    }
    case RuleId::ImpE: {
      const Sequent& q0 = prems[0].conclusion();
      const Sequent& q1 = prems[1].conclusion();
      if (q1.succedent.kind() != FormulaKind::Imp ||
          q1.succedent.left() != q0.succedent || q1.succedent.right() != c.succedent) {
        fail("ImpE premises do not fit Gamma |- A and Delta |- A -o B");
        break;
      }
      if (c.antecedent != ms_union(q0.antecedent, q1.antecedent))
        fail("ImpE conclusion antecedent is not the premise multiset union");
      break;
    }
    case RuleId::ConjI: {
      const Sequent& q0 = prems[0].conclusion();
      const Sequent& q1 = prems[1].conclusion();
      if (c.succedent.kind() != FormulaKind::Conj ||
          c.succedent.left() != q0.succedent || c.succedent.right() != q1.succedent) {
        fail("ConjI conclusion succedent is not the premise conjunction");
        break;
      }
      if (c.antecedent != ms_union(q0.antecedent, q1.antecedent))
        fail("ConjI conclusion antecedent is not the premise multiset union");
      break;
    }
    case RuleId::ConjE: {
      const Sequent& q0 = prems[0].conclusion();
      const Sequent& q1 = prems[1].conclusion();
      if (q0.succedent.kind() != FormulaKind::Conj) {
        fail("ConjE first premise succedent is not a conjunction");
        break;
      }
      Formula a = q0.succedent.left(), b = q0.succedent.right();
      if (q1.succedent != c.succedent) {
        fail("ConjE second premise succedent differs from the conclusion");
        break;
      }
      auto delta = ms_minus(q1.antecedent, {std::min(a, b), std::max(a, b)});
      if (!delta) {
        fail("ConjE second premise antecedent lacks the conjuncts");
        break;
      }
      if (c.antecedent != ms_union(q0.antecedent, *delta))
        fail("ConjE conclusion antecedent mismatch");
      break;
    }
  }

  for (std::size_t i = 0; i < prems.size(); ++i)
    check_node(prems[i], logic, path.empty() ? std::to_string(i) : path + "." + std::to_string(i),
               report);
}

}  // namespace

CheckReport check_proof(const Proof& p, LogicId logic) {
  CheckReport report;
  check_node(p, logic, "", report);
  return report;
}

Proof weaken(const Proof& p, const Formula& extra) {
  Sequent c(ms_insert(p.conclusion().antecedent, extra), p.conclusion().succedent);
  if (p.is_axiom()) return Proof::axiom(p.schema(), std::move(c));
  auto prems = p.premises();
  prems[0] = weaken(prems[0], extra);
  return Proof::rule(p.rule_id(), std::move(prems), std::move(c));
}

namespace {

// Gamma, A |- B  ->  Gamma |- A -o B (consumes one copy of A)
Proof curry_once(const Proof& p, const Formula& a) {
  const Sequent& c = p.conclusion();
  auto rest = ms_minus(c.antecedent, {a});
  if (!rest) throw ShapeError("hypothesis to discharge is not in the antecedent");
  return Proof::rule(RuleId::ImpI, {p},
                     Sequent(*rest, Formula::imp(a, c.succedent)));
}

// Gamma |- A -o B  ->  Gamma, A |- B
Proof uncurry_once(const Proof& p) {
  const Sequent& c = p.conclusion();
  Formula a = c.succedent.left(), b = c.succedent.right();
  Proof asm_leaf = Proof::axiom(AxiomSchema::ASM, Sequent({a}, a));
  return Proof::rule(RuleId::ImpE, {asm_leaf, p},
                     Sequent(ms_insert(c.antecedent, a), b));
}

// Gamma, A, B |- C  ->  Gamma, A * B |- C
Proof conj_merge(const Proof& p, const Formula& a, const Formula& b) {
  const Sequent& c = p.conclusion();
  Formula x = Formula::conj(a, b);
  auto gamma = ms_minus(c.antecedent, a < b ? std::vector<Formula>{a, b}
                                            : std::vector<Formula>{b, a});
  if (!gamma) throw ShapeError("conjuncts to merge are not in the antecedent");
  Proof asm_leaf = Proof::axiom(AxiomSchema::ASM, Sequent({x}, x));
  return Proof::rule(RuleId::ConjE, {asm_leaf, p},
                     Sequent(ms_insert(*gamma, x), c.succedent));
}

// Gamma, A * B |- C  ->  Gamma, A, B |- C
Proof conj_split(const Proof& p, const Formula& x) {
  Formula a = x.left(), b = x.right();
  Proof curried = curry_once(p, x);  // Gamma |- (A * B) -o C
  Proof pair = Proof::rule(
      RuleId::ConjI,
      {Proof::axiom(AxiomSchema::ASM, Sequent({a}, a)),
       Proof::axiom(AxiomSchema::ASM, Sequent({b}, b))},
      Sequent({a, b}, x));  // A, B |- A * B
  auto ante = ms_union(curried.conclusion().antecedent, pair.conclusion().antecedent);
  return Proof::rule(RuleId::ImpE, {pair, curried},
                     Sequent(ante, p.conclusion().succedent));
}

Proof to_uncurried(const Proof& p) {
  if (!p.conclusion().antecedent.empty()) return p;
  if (p.conclusion().succedent.kind() != FormulaKind::Imp)
    throw ShapeError("uncurrying needs an implication succedent");
  Proof q = p;
  while (q.conclusion().succedent.kind() == FormulaKind::Imp) q = uncurry_once(q);
  for (;;) {
    const auto& ante = q.conclusion().antecedent;
    auto it = std::find_if(ante.begin(), ante.end(), [](const Formula& f) {
      return f.kind() == FormulaKind::Conj;
    });
    if (it == ante.end()) break;
    q = conj_split(q, *it);
  }
  return q;
}

}  // namespace

Proof apply_deduction(const Proof& p, DeductionTarget target) {
  const auto ante = p.conclusion().antecedent;  // copy: sorted hypothesis order
  switch (target) {
    case DeductionTarget::Uncurried:
      return to_uncurried(p);
    case DeductionTarget::Curried: {
      if (ante.empty()) return p;
      Proof q = p;
      for (auto it = ante.rbegin(); it != ante.rend(); ++it) q = curry_once(q, *it);
      return q;
    }
    case DeductionTarget::ConjForm: {
      if (ante.empty()) return p;
      Proof q = p;
      Formula x = ante[0];
      for (std::size_t i = 1; i < ante.size(); ++i) {
        q = conj_merge(q, x, ante[i]);
        x = Formula::conj(x, ante[i]);
      }
      return curry_once(q, x);
    }
  }
  throw ShapeError("unknown deduction target");
}

nlohmann::json proof_to_json(const Proof& p) {
  nlohmann::json j;
  j["conclusion"] = render_sequent(p.conclusion());
  if (p.is_axiom()) {
    j["kind"] = "axiom";
    j["schema"] = to_string(p.schema());
  } else {
    j["kind"] = "rule";
    j["rule"] = to_string(p.rule_id());
    nlohmann::json prems = nlohmann::json::array();
    for (const auto& q : p.premises()) prems.push_back(proof_to_json(q));
    j["premises"] = std::move(prems);
  }
  return j;
}

Proof proof_from_json(const nlohmann::json& j) {
  Sequent conclusion = parse_sequent(j.at("conclusion").get<std::string>());
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "axiom")
    return Proof::axiom(parse_axiom_schema(j.at("schema").get<std::string>()),
                        std::move(conclusion));
  if (kind != "rule") throw std::invalid_argument("proof node kind must be axiom or rule");
  std::vector<Proof> prems;
  for (const auto& q : j.at("premises")) prems.push_back(proof_from_json(q));
  return Proof::rule(parse_rule_id(j.at("rule").get<std::string>()), std::move(prems),
                     std::move(conclusion));
}

}  // namespace coopkit
