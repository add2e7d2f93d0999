#include "coopkit/countermodel.hpp"

#include <set>

namespace coopkit {

namespace {

std::vector<std::string> sequent_vars(const Sequent& s) {
  std::set<std::string> names;
  auto add = [&](const Formula& f) {
    for (auto& v : collect_vars(f)) names.insert(v);
  };
  for (const auto& f : s.antecedent) add(f);
  add(s.succedent);
  return {names.begin(), names.end()};
}

LanguageId sequent_language(const Sequent& s) {
  LanguageId lang = LanguageId::Lo;
  auto join = [&](LanguageId l) {
    if (language_leq(lang, l))
      lang = l;
    else if (!language_leq(l, lang))
      lang = LanguageId::Lih;
  };
  for (const auto& f : s.antecedent) join(classify_language(f));
  join(classify_language(s.succedent));
  return lang;
}

std::optional<Witness> grid_search(const Sequent& s, const DyadicModel& model,
                                   const std::vector<std::string>& vars,
                                   long long& evals_left) {
  for (unsigned k = 2; k <= 8; ++k) {
    BigInt steps = model.bounded() ? (model.cap.shifted_left(k).num()
                                      >> model.cap.shifted_left(k).exp())
                                   : BigInt(4) << k;
    long long top = static_cast<long long>(steps);
    std::vector<long long> idx(vars.size(), 0);
    for (;;) {
      if (evals_left-- <= 0) return std::nullopt;
      Assignment<DyadicModel> env;
      for (std::size_t i = 0; i < vars.size(); ++i)
        env[vars[i]] = Dyadic(BigInt(idx[i]), k);
      if (!check_sequent(s, env, model)) {
        std::map<std::string, Dyadic> out;
        for (auto& [name, v] : env) out[name] = v;
        return Witness(DenseWitness{model, std::move(out)});
      }
      std::size_t p = 0;
      while (p < idx.size() && idx[p] == top) idx[p++] = 0;
      if (p == idx.size()) break;
      ++idx[p];
    }
    if (vars.empty()) break;  // a closed sequent has a single grid point
  }
  return std::nullopt;
}

}  // namespace

std::optional<Witness> search_countermodel(const Sequent& s, AlgebraClass cls,
                                           const SearchBudget& budget) {
  auto vars = sequent_vars(s);
  long long evals_left = budget.max_evals;

  if (class_uses_dense_models(cls)) {
    LanguageId lang = sequent_language(s);
    std::vector<DyadicModel> grids;
    grids.push_back(DyadicModel::capped(Dyadic(1)));
    if (cls == AlgebraClass::Coop && language_leq(lang, LanguageId::Lh))
      grids.push_back(DyadicModel::unbounded());
    for (const auto& model : grids) {
      if (auto w = grid_search(s, model, vars, evals_left)) return w;
      if (evals_left <= 0) break;
    }
    return std::nullopt;
  }

  for (const auto& algebra : enumerate_algebras(budget.max_model_size, cls)) {
    const int n = algebra.size;
    std::vector<int> idx(vars.size(), 0);
    for (;;) {
      if (evals_left-- <= 0) return std::nullopt;
      Assignment<FiniteAlgebra> env;
      for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = idx[i];
      if (!check_sequent(s, env, algebra))
        return Witness(FiniteWitness{algebra, std::move(env)});
      std::size_t p = 0;
      while (p < idx.size() && idx[p] == n - 1) idx[p++] = 0;
      if (p == idx.size()) break;
      ++idx[p];
    }
  }
  return std::nullopt;
}

}  // namespace coopkit
