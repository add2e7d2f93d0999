#include "coopkit/eq_chain.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace coopkit {

std::string to_string(EqId id) {
  switch (id) {
    case EqId::Eq1: return "eq1";
    case EqId::Eq2: return "eq2";
    case EqId::Eq3: return "eq3";
    case EqId::Eq4: return "eq4";
    case EqId::Eq5: return "eq5";
    case EqId::MonoidRearrange: return "monoid-rearrange";
  }
  return "?";
}

std::string to_string(EqDir dir) { return dir == EqDir::L2R ? "L2R" : "R2L"; }

EqId parse_eq_id(const std::string& name) {
  static const std::map<std::string, EqId> table = {
      {"eq1", EqId::Eq1}, {"eq2", EqId::Eq2}, {"eq3", EqId::Eq3},
      {"eq4", EqId::Eq4}, {"eq5", EqId::Eq5}, {"monoid-rearrange", EqId::MonoidRearrange}};
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown justification: " + name);
  return it->second;
}

EqDir parse_eq_dir(const std::string& name) {
  if (name == "L2R") return EqDir::L2R;
  if (name == "R2L") return EqDir::R2L;
  throw std::invalid_argument("unknown direction: " + name);
}

namespace {

constexpr std::size_t kMaxSplitArgs = 16;

// multiset difference over sorted vectors; nullopt if take is not contained
std::optional<std::vector<AlgTerm>> ms_minus(const std::vector<AlgTerm>& from,
                                             std::vector<AlgTerm> take) {
  std::sort(take.begin(), take.end());
  std::vector<AlgTerm> sorted = from;
  std::sort(sorted.begin(), sorted.end());
  std::vector<AlgTerm> out;
  std::size_t i = 0, j = 0;
  while (i < sorted.size() && j < take.size()) {
    int c = AlgTerm::compare(sorted[i], take[j]);
    if (c < 0)
      out.push_back(sorted[i++]);
    else if (c == 0) {
      ++i;
      ++j;
    } else
      return std::nullopt;
  }
  if (j < take.size()) return std::nullopt;
  out.insert(out.end(), sorted.begin() + i, sorted.end());
  return out;
}

// Structural one-step rewrites of the redex `u` by the L2R reading of eq.
std::vector<AlgTerm> local_candidates(const AlgTerm& u, EqId eq) {
  std::vector<AlgTerm> out;
  switch (eq) {
    case EqId::Eq1:  // x -> x  =>  0
      if (u.kind() == AlgTerm::Kind::Imp && ac_normalize(u.left()) == ac_normalize(u.right()))
        out.push_back(AlgTerm::zero());
      break;
    case EqId::Eq2:  // x -> 0  =>  0
      if (u.kind() == AlgTerm::Kind::Imp &&
          ac_normalize(u.right()).kind() == AlgTerm::Kind::Zero)
        out.push_back(AlgTerm::zero());
      break;
    case EqId::Eq3:  // 0 -> x  =>  x
      if (u.kind() == AlgTerm::Kind::Imp &&
          ac_normalize(u.left()).kind() == AlgTerm::Kind::Zero)
        out.push_back(u.right());
      break;
    case EqId::Eq4: {  // x + y -> z  =>  x -> y -> z, y a summand group
      if (u.kind() != AlgTerm::Kind::Imp) break;
      AlgTerm lhs = ac_normalize(u.left());
      if (lhs.kind() != AlgTerm::Kind::Sum) break;
      const auto& args = lhs.args();
      if (args.size() > kMaxSplitArgs) break;
      for (std::size_t mask = 1; mask + 1 < (1u << args.size()); ++mask) {
        std::vector<AlgTerm> xs, ys;
        for (std::size_t i = 0; i < args.size(); ++i)
          ((mask >> i) & 1 ? ys : xs).push_back(args[i]);
        out.push_back(AlgTerm::imp(sum_of(std::move(xs)),
                                   AlgTerm::imp(sum_of(std::move(ys)), u.right())));
      }
      break;
    }
    case EqId::Eq5: {  // x + (x -> y)  =>  y + (y -> x) inside a summand group
      std::vector<AlgTerm> args = summands(ac_normalize(u));
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i].kind() != AlgTerm::Kind::Imp) continue;
        AlgTerm x = args[i].left(), y = args[i].right();
        std::vector<AlgTerm> rest = args;
        rest.erase(rest.begin() + i);
        auto remaining = ms_minus(rest, summands(ac_normalize(x)));
        if (!remaining) continue;
        std::vector<AlgTerm> next = *remaining;
        for (auto& s : summands(ac_normalize(y))) next.push_back(s);
        next.push_back(AlgTerm::imp(y, x));
        out.push_back(sum_of(std::move(next)));
      }
      break;
    }
    case EqId::MonoidRearrange:
      break;
  }
  return out;
}

// eq4 R2L is the deterministic merge x -> y -> z => x + y -> z.
std::optional<AlgTerm> eq4_merge(const AlgTerm& u) {
  if (u.kind() != AlgTerm::Kind::Imp || u.right().kind() != AlgTerm::Kind::Imp)
    return std::nullopt;
  return AlgTerm::imp(AlgTerm::sum({u.left(), u.right().left()}), u.right().right());
}

bool rewrites_to(const AlgTerm& host, EqId eq, const std::vector<int>& pos,
                 const AlgTerm& expected_nf, bool merge4) {
  AlgTerm redex;
  try {
    redex = subterm_at(host, pos);
  } catch (const std::out_of_range&) {
    return false;
  }
  if (merge4) {
    auto merged = eq4_merge(redex);
    return merged && ac_normalize(replace_at(host, pos, *merged)) == expected_nf;
  }
  for (const auto& cand : local_candidates(redex, eq))
    if (ac_normalize(replace_at(host, pos, cand)) == expected_nf) return true;
  return false;
}

}  // namespace

bool verify_step(const EqStep& step) {
  AlgTerm from = ac_normalize(step.from);
  AlgTerm to = ac_normalize(step.to);
  switch (step.justification) {
    case EqId::MonoidRearrange:
      return from == to;
    case EqId::Eq5:
      // symmetric equation; both directions read the instance off `from`
      return rewrites_to(from, EqId::Eq5, step.position, to, false);
    case EqId::Eq4:
      if (step.direction == EqDir::L2R)
        return rewrites_to(from, EqId::Eq4, step.position, to, false);
      return rewrites_to(from, EqId::Eq4, step.position, to, true);
    case EqId::Eq1:
    case EqId::Eq2:
    case EqId::Eq3:
      if (step.direction == EqDir::L2R)
        return rewrites_to(from, step.justification, step.position, to, false);
      // introduction: the instance is structural in `to`
      return rewrites_to(to, step.justification, step.position, from, false);
  }
  return false;
}

ChainVerification verify_chain(const EqChain& c) {
  AlgTerm cur = ac_normalize(c.start);
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const EqStep& s = c.steps[i];
    if (ac_normalize(s.from) != cur)
      return {false, i, "step does not link to the previous term: expected '" +
                            render_alg_term(cur) + "', step starts at '" +
                            render_alg_term(ac_normalize(s.from)) + "'"};
    if (!verify_step(s))
      return {false, i,
              to_string(s.justification) + " (" + to_string(s.direction) +
                  ") does not rewrite '" + render_alg_term(ac_normalize(s.from)) +
                  "' to '" + render_alg_term(ac_normalize(s.to)) + "' at the cited position"};
    cur = ac_normalize(s.to);
  }
  if (cur.kind() != AlgTerm::Kind::Zero)
    return {false, c.steps.size(), "final term is not 0: '" + render_alg_term(cur) + "'"};
  return {};
}

nlohmann::json chain_to_json(const EqChain& c) {
  nlohmann::json arr = nlohmann::json::array();
  arr.push_back({{"term", render_alg_term(c.start)}});
  for (const auto& s : c.steps) {
    nlohmann::json j;
    j["term"] = render_alg_term(s.to);
    j["justification"] = to_string(s.justification);
    if (s.justification != EqId::MonoidRearrange) {
      j["direction"] = to_string(s.direction);
      j["position"] = s.position;
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

EqChain chain_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("chain file must be a nonempty JSON array");
  EqChain c;
  c.start = parse_alg_term(j[0].at("term").get<std::string>());
  AlgTerm prev = c.start;
  for (std::size_t i = 1; i < j.size(); ++i) {
    EqStep s;
    s.from = prev;
    s.to = parse_alg_term(j[i].at("term").get<std::string>());
    s.justification = parse_eq_id(j[i].at("justification").get<std::string>());
    if (s.justification != EqId::MonoidRearrange) {
      s.direction = parse_eq_dir(j[i].at("direction").get<std::string>());
      s.position = j[i].at("position").get<std::vector<int>>();
    }
    prev = s.to;
    c.steps.push_back(std::move(s));
  }
  return c;
}

}  // namespace coopkit
