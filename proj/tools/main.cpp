#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coopkit/corpus.hpp"
#include "coopkit/countermodel.hpp"
#include "coopkit/enumerate.hpp"
#include "coopkit/envelope.hpp"
#include "coopkit/hoop_lab.hpp"
#include "coopkit/json_io.hpp"
#include "coopkit/laws.hpp"
#include "coopkit/models.hpp"
#include "coopkit/pl.hpp"
#include "coopkit/proof.hpp"
#include "coopkit/rng.hpp"
#include "coopkit/translate.hpp"

namespace {

using namespace coopkit;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;

struct Options {
  std::uint64_t seed = 0;
  std::string format = "text";
  bool json_out() const { return format == "json"; }
};

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.json_out())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  json j;
  in >> j;
  return j;
}

// "P=3/4,Q=1/2" -> pairs; values parsed by the model at hand
std::vector<std::pair<std::string, std::string>> split_assignment(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(pos, comma - pos);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("assignment item needs name=value: " + item);
    auto trim = [](std::string s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
      return s;
    };
    out.emplace_back(trim(item.substr(0, eq)), trim(item.substr(eq + 1)));
    pos = comma + 1;
  }
  return out;
}

Assignment<FiniteAlgebra> parse_assignment(const FiniteAlgebra& m, const std::string& text) {
  Assignment<FiniteAlgebra> env;
  for (auto& [name, value] : split_assignment(text)) {
    int v = std::stoi(value);
    if (!m.contains(v)) throw std::invalid_argument("value out of carrier: " + value);
    env[name] = v;
  }
  return env;
}

Assignment<DyadicModel> parse_assignment(const DyadicModel& m, const std::string& text) {
  Assignment<DyadicModel> env;
  for (auto& [name, value] : split_assignment(text)) {
    Dyadic v = parse_dyadic(value);
    if (!m.contains(v)) throw std::invalid_argument("value outside carrier: " + value);
    env[name] = v;
  }
  return env;
}

Assignment<RationalModel> parse_assignment(const RationalModel& m, const std::string& text) {
  Assignment<RationalModel> env;
  for (auto& [name, value] : split_assignment(text)) {
    Rational v = parse_rational(value);
    if (!m.contains(v)) throw std::invalid_argument("value outside carrier: " + value);
    env[name] = v;
  }
  return env;
}

std::string value_str(int v) { return std::to_string(v); }
std::string value_str(const Dyadic& v) { return v.str(); }
std::string value_str(const Rational& v) { return scalar_str(v); }

int cmd_parse(const Options& opt, const std::string& input, bool as_sequent) {
  json j;
  std::string text;
  if (as_sequent) {
    Sequent s = parse_sequent(input);
    j["kind"] = "sequent";
    j["rendered"] = render_sequent(s);
    json ante = json::array();
    for (const auto& f : s.antecedent) ante.push_back(render_formula(f));
    j["antecedent"] = ante;
    j["succedent"] = render_formula(s.succedent);
    text = render_sequent(s) + "\n";
  } else {
    Formula f = parse_formula(input);
    j["kind"] = "formula";
    j["rendered"] = render_formula(f);
    j["language"] = to_string(classify_language(f));
    text = render_formula(f) + "  [" + to_string(classify_language(f)) + "]\n";
  }
  emit(opt, j, text);
  return kExitOk;
}

int cmd_check_proof(const Options& opt, const std::string& file, const std::string& logic_name) {
  Proof p = proof_from_json(load_json_file(file));
  LogicId logic = parse_logic_id(logic_name);
  CheckReport report = check_proof(p, logic);
  json j;
  j["ok"] = report.ok;
  j["logic"] = to_string(logic);
  j["conclusion"] = render_sequent(p.conclusion());
  json fails = json::array();
  for (const auto& f : report.failures)
    fails.push_back({{"path", f.path}, {"reason", f.reason}});
  j["failures"] = fails;
  std::string text = std::string(report.ok ? "ok" : "FAIL") + ": " +
                     render_sequent(p.conclusion()) + " in " + to_string(logic) + "\n";
  for (const auto& f : report.failures)
    text += "  at [" + f.path + "]: " + f.reason + "\n";
  emit(opt, j, text);
  return report.ok ? kExitOk : kExitNegative;
}

template <class Model>
int eval_in(const Options& opt, const Model& m, const std::string& formula_text,
            const std::string& sequent_text, const std::string& assign_text) {
  auto env = parse_assignment(m, assign_text);
  json j;
  if (!sequent_text.empty()) {
    Sequent s = parse_sequent(sequent_text);
    bool sat = check_sequent(s, env, m);
    j["sequent"] = render_sequent(s);
    j["satisfied"] = sat;
    emit(opt, j, std::string(sat ? "satisfied" : "violated") + "\n");
    return sat ? kExitOk : kExitNegative;
  }
  Formula f = parse_formula(formula_text);
  auto v = eval_formula(f, env, m);
  j["formula"] = render_formula(f);
  j["value"] = value_str(v);
  emit(opt, j, value_str(v) + "\n");
  return kExitOk;
}

template <class Model>
json law_report_json(const LawReport<typename Model::value_type>& rep) {
  json laws = json::array();
  for (const auto& c : rep.checks) {
    json e;
    e["law"] = to_string(c.law);
    e["pass"] = c.pass;
    json w = json::array();
    for (const auto& v : c.witness) w.push_back(value_str(v));
    e["witness"] = w;
    laws.push_back(std::move(e));
  }
  return laws;
}

int cmd_laws(const Options& opt, const std::string& model_spec, const std::string& class_name,
             int samples) {
  AlgebraClass cls = parse_class(class_name);
  ModelVariant mv = parse_model_spec(model_spec);
  bool all = false;
  json j;
  std::string text;
  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        LawMode mode = std::is_same_v<M, FiniteAlgebra> ? LawMode::exhaustive()
                                                        : LawMode::sampled(samples, opt.seed);
        auto rep = check_laws(m, mode, laws_for_class(cls));
        all = rep.all_pass();
        j["class"] = to_string(cls);
        j["mode"] = mode.kind == LawMode::Exhaustive ? "exhaustive" : "sampled";
        j["all_pass"] = all;
        j["laws"] = law_report_json<M>(rep);
        for (const auto& c : rep.checks) {
          text += to_string(c.law) + ": " + (c.pass ? "pass" : "FAIL");
          if (!c.pass && !c.witness.empty()) {
            text += " at (";
            for (std::size_t i = 0; i < c.witness.size(); ++i)
              text += (i ? ", " : "") + value_str(c.witness[i]);
            text += ")";
          }
          text += "\n";
        }
      },
      mv);
  emit(opt, j, text);
  return all ? kExitOk : kExitNegative;
}

int cmd_countermodel(const Options& opt, const std::string& sequent_text,
                     const std::string& class_name, int size, long long budget) {
  Sequent s = parse_sequent(sequent_text);
  AlgebraClass cls = parse_class(class_name);
  SearchBudget b;
  b.max_model_size = size;
  if (budget > 0) b.max_evals = budget;
  auto w = search_countermodel(s, cls, b);
  json j;
  j["sequent"] = render_sequent(s);
  j["class"] = to_string(cls);
  j["found"] = w.has_value();
  if (!w) {
    emit(opt, j, "exhausted: no countermodel within budget\n");
    return kExitOk;
  }
  std::string text = "countermodel found\n";
  if (auto* fw = std::get_if<FiniteWitness>(&*w)) {
    j["model"] = algebra_to_json(fw->algebra);
    json a;
    for (auto& [k, v] : fw->assignment) a[k] = v;
    j["assignment"] = a;
    text += "  finite algebra of size " + std::to_string(fw->algebra.size) + "\n";
    for (auto& [k, v] : fw->assignment) text += "  " + k + " = " + std::to_string(v) + "\n";
  } else {
    auto& dw = std::get<DenseWitness>(*w);
    std::string model_name = dw.model.bounded() ? "dyadic-capped:" + dw.model.cap.str()
                                                : std::string("dyadic-unbounded");
    j["model"] = model_name;
    json a;
    for (auto& [k, v] : dw.assignment) a[k] = v.str();
    j["assignment"] = a;
    text += "  model " + model_name + "\n";
    for (auto& [k, v] : dw.assignment) text += "  " + k + " = " + v.str() + "\n";
  }
  emit(opt, j, text);
  return kExitNegative;
}

int cmd_analyze(const Options& opt, const std::string& file) {
  FiniteAlgebra h = algebra_from_json(load_json_file(file));
  ClassifyRecord rec = classify(h);
  json j;
  j["size"] = h.size;
  j["simple"] = rec.simple;
  j["archimedean"] = rec.archimedean;
  j["linear"] = rec.linear;
  j["depths"] = rec.depths;
  j["ideals"] = static_cast<int>(all_ideals(h).size());
  std::string text = "size " + std::to_string(h.size) + "\n";
  text += std::string("simple: ") + (rec.simple ? "yes" : "no") + "\n";
  text += std::string("archimedean: ") + (rec.archimedean ? "yes" : "no") + "\n";
  text += std::string("linear: ") + (rec.linear ? "yes" : "no") + "\n";
  try {
    auto dec = monolith_and_decomposition(h);
    if (dec) {
      json d;
      d["monolith"] = dec->monolith.elements;
      d["support"] = dec->support;
      d["fixed"] = dec->fixed;
      json props;
      for (auto& [name, ok] : dec->properties) props[name] = ok;
      d["properties"] = props;
      j["decomposition"] = d;
      text += "subdirectly irreducible: yes; decomposition properties " +
              std::string(dec->all_properties_hold() ? "all hold" : "VIOLATED") + "\n";
    } else {
      j["decomposition"] = nullptr;
      text += "subdirectly irreducible: no\n";
    }
  } catch (const NotAHoop&) {
    j["decomposition"] = "not-a-hoop";
    text += "not a hoop; decomposition skipped\n";
  }
  emit(opt, j, text);
  return kExitOk;
}

int cmd_enumerate(const Options& opt, int size, const std::string& class_name) {
  AlgebraClass cls = parse_class(class_name);
  auto algebras = enumerate_algebras(size, cls);
  json j;
  j["class"] = to_string(cls);
  j["max_size"] = size;
  j["count"] = static_cast<int>(algebras.size());
  json arr = json::array();
  for (const auto& a : algebras) arr.push_back(algebra_to_json(a));
  j["algebras"] = arr;
  emit(opt, j,
       std::to_string(algebras.size()) + " " + to_string(cls) + "(s) of size <= " +
           std::to_string(size) + "\n");
  return kExitOk;
}

int cmd_translate(const Options& opt, const std::string& file, const std::string& out_path) {
  Proof p = proof_from_json(load_json_file(file));
  EqChain chain = translate_proof(p);
  auto ver = verify_chain(chain);
  if (!ver.ok) throw std::logic_error("translated chain failed verification: " + ver.reason);
  json j = chain_to_json(chain);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << j.dump(2) << "\n";
    std::cout << "wrote " << chain.steps.size() << " steps to " << out_path << "\n";
    return kExitOk;
  }
  std::string text;
  for (const auto& e : j) {
    text += e.at("term").get<std::string>();
    if (e.contains("justification")) text += "   [" + e["justification"].get<std::string>() + "]";
    text += "\n";
  }
  emit(opt, j, text);
  return kExitOk;
}

int cmd_verify_chain(const Options& opt, const std::string& file) {
  EqChain chain = chain_from_json(load_json_file(file));
  auto ver = verify_chain(chain);
  json j;
  j["ok"] = ver.ok;
  if (!ver.ok) {
    j["failed_step"] = static_cast<int>(ver.failed_step);
    j["reason"] = ver.reason;
  }
  emit(opt, j,
       ver.ok ? "chain verified\n"
              : "FAIL at step " + std::to_string(ver.failed_step) + ": " + ver.reason + "\n");
  return ver.ok ? kExitOk : kExitNegative;
}

int cmd_envelope(const Options& opt, const std::string& base_spec, int samples) {
  ModelVariant mv = parse_model_spec(base_spec);
  auto* base = std::get_if<DyadicModel>(&mv);
  if (!base || !base->bounded())
    throw std::invalid_argument("envelope verification needs a capped dyadic base");

  HatEnvelope<Dyadic> hat(*base);
  DiffGroup<Dyadic> diff(DyadicModel::unbounded());
  DyadicModel unbounded = DyadicModel::unbounded();
  Rng rng(opt.seed);
  auto sample = [&] { return sample_value(*base, rng); };

  long long hat_fail = 0, iso_fail = 0, diff_fail = 0;
  for (int i = 0; i < samples; ++i) {
    Dyadic a = sample(), b = sample();
    auto ha = hat.embed(a), hb = hat.embed(b);
    // oracle: (m, a) denotes 2^m a in the unbounded dyadic coop
    if (hat.add(ha, hb).unbounded_value() != unbounded.add(a, b)) ++hat_fail;
    if (hat.imp(ha, hb).unbounded_value() != unbounded.imp(a, b)) ++hat_fail;
    if (hat.half(ha).unbounded_value() != unbounded.half(a)) ++hat_fail;
    int oracle_cmp = a < b ? -1 : b < a ? 1 : 0;
    if (hat.compare(ha, hb) != oracle_cmp) ++hat_fail;
    // the capped copy is isomorphic to the base
    if (!hat.equal(hat.add_capped(ha, hb), hat.embed(base->add(a, b)))) ++iso_fail;
    if (!hat.equal(hat.imp(ha, hb), hat.embed(base->imp(a, b)))) ++iso_fail;
    if (!hat.equal(hat.half(ha), hat.embed(base->half(a)))) ++iso_fail;

    Dyadic c = sample();
    auto x = diff.from_pair(a, b), y = diff.from_pair(b, c), z = diff.from_pair(c, a);
    if (!diff.equal(diff.add(diff.add(x, y), z), diff.add(x, diff.add(y, z)))) ++diff_fail;
    if (!diff.equal(diff.add(x, diff.neg(x)), diff.zero())) ++diff_fail;
    if (!diff.equal(diff.add(diff.half(x), diff.half(x)), x)) ++diff_fail;  // 2-divisible
    if (diff.compare(x, y) == 0 && !diff.equal(x, y)) ++diff_fail;
    if ((diff.compare(x, y) < 0) != (diff.compare(diff.add(x, z), diff.add(y, z)) < 0))
      ++diff_fail;
  }
  bool ok = hat_fail == 0 && iso_fail == 0 && diff_fail == 0;
  json j;
  j["samples"] = samples;
  j["hat_oracle_failures"] = hat_fail;
  j["capped_iso_failures"] = iso_fail;
  j["diff_group_failures"] = diff_fail;
  j["ok"] = ok;
  emit(opt, j,
       "hat oracle failures: " + std::to_string(hat_fail) +
           "\ncapped-iso failures: " + std::to_string(iso_fail) +
           "\ndifference-group failures: " + std::to_string(diff_fail) + "\n");
  return ok ? kExitOk : kExitNegative;
}

std::vector<Ambient> parse_ambients(const std::string& name) {
  if (name == "nonneg") return {Ambient::Nonneg};
  if (name == "interval") return {Ambient::Interval};
  if (name == "wajsberg") return {Ambient::Nonneg, Ambient::Interval};
  throw std::invalid_argument("unknown ambient: " + name);
}

int cmd_decide(const Options& opt, const std::string& eq_text, const std::string& matrix_text,
               const std::string& ambient_name) {
  auto ambients = parse_ambients(ambient_name);
  json j;
  std::string text;
  bool valid = false;

  if (!eq_text.empty()) {
    MatrixExpr atom = parse_matrix(eq_text);
    if (atom.kind() != MatrixExpr::Kind::Atom || atom.atom_is_leq())
      throw std::invalid_argument("--eq expects a single equation s = t");
    Verdict verdict;
    for (Ambient amb : ambients) {
      verdict = decide_equation(atom.lhs(), atom.rhs(), amb);
      if (!verdict.valid) break;
    }
    valid = verdict.valid;
    j["equation"] = render_alg_formula(atom.lhs()) + " = " + render_alg_formula(atom.rhs());
    j["valid"] = valid;
    if (!valid) {
      j["ambient"] = to_string(*verdict.ambient);
      json a;
      for (auto& [k, v] : verdict.assignment) a[k] = scalar_str(v);
      j["assignment"] = a;
      j["lhs_value"] = scalar_str(verdict.lhs_value);
      j["rhs_value"] = scalar_str(verdict.rhs_value);
      text = "countermodel in " + to_string(*verdict.ambient) + ":\n";
      for (auto& [k, v] : verdict.assignment) text += "  " + k + " = " + scalar_str(v) + "\n";
      text += "  lhs = " + scalar_str(verdict.lhs_value) +
              ", rhs = " + scalar_str(verdict.rhs_value) + "\n";
    } else {
      text = "valid\n";
    }
  } else {
    MatrixExpr matrix = parse_matrix(matrix_text);
    Verdict verdict = decide_universal(matrix, ambients);
    valid = verdict.valid;
    j["matrix"] = matrix_text;
    j["valid"] = valid;
    if (!valid) {
      j["ambient"] = to_string(*verdict.ambient);
      json a;
      for (auto& [k, v] : verdict.assignment) a[k] = scalar_str(v);
      j["assignment"] = a;
      text = "countermodel in " + to_string(*verdict.ambient) + ":\n";
      for (auto& [k, v] : verdict.assignment) text += "  " + k + " = " + scalar_str(v) + "\n";
    } else {
      text = "valid\n";
    }
  }
  emit(opt, j, text);
  return valid ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coopkit: proof checking, algebraic models and decision procedures for the "
               "substructural logics between affine and continuous logic"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--seed", opt.seed, "seed for all sampled randomness");
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string input, logic = "ALu", model_spec, class_name = "hoop", assign_text;
  std::string formula_text, sequent_text, eq_text, matrix_text, ambient = "interval";
  std::string out_path;
  bool as_sequent = false;
  int size = 3, samples = 10000;
  long long budget = 0;

  auto* parse_cmd = app.add_subcommand("parse", "parse and re-render a formula or sequent");
  parse_cmd->add_option("input", input)->required();
  parse_cmd->add_flag("--sequent", as_sequent, "treat the input as a sequent");

  auto* check_cmd = app.add_subcommand("check-proof", "check a proof file in a logic");
  check_cmd->add_option("file", input)->required();
  check_cmd->add_option("--logic", logic,
                        "one of ALu ALi ALc LLu LLi LLc ILu IL BL CLu CLi CLc");

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula or sequent in a model");
  eval_cmd->add_option("--model", model_spec)->required();
  eval_cmd->add_option("--formula", formula_text);
  eval_cmd->add_option("--sequent", sequent_text);
  eval_cmd->add_option("--assign", assign_text, "e.g. \"P=3/4,Q=1/2\"");

  auto* laws_cmd = app.add_subcommand("laws", "check the laws of an algebra class");
  laws_cmd->add_option("model", model_spec, "model spec or finite-algebra JSON file")
      ->required();
  laws_cmd->add_option("--class", class_name);
  laws_cmd->add_option("--samples", samples, "sample count for dense models");

  auto* cm_cmd = app.add_subcommand("countermodel", "search for a countermodel of a sequent");
  cm_cmd->add_option("--sequent", sequent_text)->required();
  cm_cmd->add_option("--class", class_name);
  cm_cmd->add_option("--size", size, "finite model size bound");
  cm_cmd->add_option("--budget", budget, "evaluation budget");

  auto* an_cmd = app.add_subcommand("analyze", "structure analysis of a finite algebra");
  an_cmd->add_option("file", input)->required();

  auto* en_cmd = app.add_subcommand("enumerate", "enumerate algebras up to isomorphism");
  en_cmd->add_option("--size", size)->required();
  en_cmd->add_option("--class", class_name);

  auto* tr_cmd = app.add_subcommand("translate", "translate an LLu proof to an equation chain");
  tr_cmd->add_option("file", input)->required();
  tr_cmd->add_option("-o,--out", out_path, "write the chain JSON here");

  auto* vc_cmd = app.add_subcommand("verify-chain", "independently verify an equation chain");
  vc_cmd->add_option("file", input)->required();

  auto* env_cmd =
      app.add_subcommand("envelope", "verify the envelope constructions by sampling");
  env_cmd->add_option("--base", model_spec)->required();
  env_cmd->add_option("--verify-samples", samples);

  auto* de_cmd = app.add_subcommand("decide", "decide equations/universal matrices exactly");
  de_cmd->add_option("--eq", eq_text, "equation s = t over +, ->, /2, 0, 1");
  de_cmd->add_option("--matrix", matrix_text, "boolean matrix over atoms s = t, s <= t");
  de_cmd->add_option("--ambient", ambient, "nonneg | interval | wajsberg");

  CLI11_PARSE(app, argc, argv);

  try {
    if (parse_cmd->parsed()) return cmd_parse(opt, input, as_sequent);
    if (check_cmd->parsed()) return cmd_check_proof(opt, input, logic);
    if (eval_cmd->parsed()) {
      ModelVariant mv = parse_model_spec(model_spec);
      return std::visit(
          [&](const auto& m) {
            return eval_in(opt, m, formula_text, sequent_text, assign_text);
          },
          mv);
    }
    if (laws_cmd->parsed()) return cmd_laws(opt, model_spec, class_name, samples);
    if (cm_cmd->parsed()) return cmd_countermodel(opt, sequent_text, class_name, size, budget);
    if (an_cmd->parsed()) return cmd_analyze(opt, input);
    if (en_cmd->parsed()) return cmd_enumerate(opt, size, class_name);
    if (tr_cmd->parsed()) return cmd_translate(opt, input, out_path);
    if (vc_cmd->parsed()) return cmd_verify_chain(opt, input);
    if (env_cmd->parsed()) return cmd_envelope(opt, model_spec, samples);
    if (de_cmd->parsed()) {
      if (eq_text.empty() == matrix_text.empty())
        throw std::invalid_argument("decide needs exactly one of --eq / --matrix");
      return cmd_decide(opt, eq_text, matrix_text, ambient);
    }
  } catch (const UnsupportedAxiom& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
