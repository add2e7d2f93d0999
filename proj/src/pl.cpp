#include "coopkit/pl.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace coopkit {

std::string to_string(Ambient a) { return a == Ambient::Nonneg ? "nonneg" : "interval"; }

std::vector<LinConstraint> ambient_domain(Ambient amb, int nvars) {
  std::vector<LinConstraint> out;
  for (int i = 0; i < nvars; ++i) {
    out.push_back(geq0(LinExpr::var(i, nvars)));
    if (amb == Ambient::Interval) {
      LinExpr e = LinExpr::constant_of(Rational(1), nvars);
      e -= LinExpr::var(i, nvars);
      out.push_back(geq0(std::move(e)));  // x_i <= 1
    }
  }
  return out;
}

namespace {

std::vector<LinConstraint> with_domain(const std::vector<LinConstraint>& guard, Ambient amb,
                                       int nvars) {
  auto out = ambient_domain(amb, nvars);
  out.insert(out.end(), guard.begin(), guard.end());
  return out;
}

struct Compiler {
  Ambient amb;
  std::vector<std::string> vars;
  int nvars;

  int var_index(const std::string& name) const {
    auto it = std::lower_bound(vars.begin(), vars.end(), name);
    if (it == vars.end() || *it != name)
      throw EvalError("variable not in compilation space: " + name);
    return static_cast<int>(it - vars.begin());
  }

  bool viable(const std::vector<LinConstraint>& guard) const {
    return feasible(with_domain(guard, amb, nvars), nvars);
  }

  std::vector<PLPiece> go(const Formula& f) const {
    switch (f.kind()) {
      case FormulaKind::Zero:
        return {{{}, LinExpr(nvars)}};
      case FormulaKind::One:
        if (amb == Ambient::Nonneg)
          throw UnsupportedSymbol("constant 1 is not interpretable in the nonneg ambient");
        return {{{}, LinExpr::constant_of(Rational(1), nvars)}};
      case FormulaKind::Var:
        return {{{}, LinExpr::var(var_index(f.var_name()), nvars)}};
      case FormulaKind::Half: {
        auto pieces = go(f.body());
        for (auto& p : pieces) p.value = p.value.halved();
        return pieces;
      }
      case FormulaKind::Conj:
      case FormulaKind::Imp: {
        auto ls = go(f.left());
        auto rs = go(f.right());
        std::vector<PLPiece> out;
        for (const auto& l : ls)
          for (const auto& r : rs) {
            std::vector<LinConstraint> guard = l.guard;
            guard.insert(guard.end(), r.guard.begin(), r.guard.end());
            if (f.kind() == FormulaKind::Imp) {
              // max(0, r - l): split on the sign of the difference
              LinExpr diff = r.value - l.value;
              add_piece(out, guard, geq0(diff), diff);
              LinExpr neg = l.value - r.value;
              add_piece(out, guard, geq0(std::move(neg)), LinExpr(nvars));
            } else if (amb == Ambient::Nonneg) {
              PLPiece p{guard, l.value + r.value};
              if (viable(p.guard)) out.push_back(std::move(p));
            } else {
              // min(1, l + r)
              LinExpr sum = l.value + r.value;
              LinExpr room = LinExpr::constant_of(Rational(1), nvars) - sum;
              add_piece(out, guard, geq0(room), sum);
              LinExpr over = sum - LinExpr::constant_of(Rational(1), nvars);
              add_piece(out, guard, geq0(std::move(over)),
                        LinExpr::constant_of(Rational(1), nvars));
            }
          }
        return out;
      }
    }
    throw EvalError("unreachable formula kind");
  }

  void add_piece(std::vector<PLPiece>& out, std::vector<LinConstraint> guard,
                 LinConstraint split, LinExpr value) const {
    guard.push_back(std::move(split));
    if (!viable(guard)) return;
    out.push_back({std::move(guard), std::move(value)});
  }
};

}  // namespace

PLTerm compile_pl(const Formula& t, Ambient amb, const std::vector<std::string>& vars) {
  Compiler c{amb, vars, static_cast<int>(vars.size())};
  return {vars, c.go(t)};
}

PLTerm compile_pl(const Formula& t, Ambient amb) { return compile_pl(t, amb, collect_vars(t)); }

namespace {

std::vector<std::string> merged_vars(std::initializer_list<const Formula*> fs) {
  std::set<std::string> names;
  for (const Formula* f : fs)
    for (auto& v : collect_vars(*f)) names.insert(v);
  return {names.begin(), names.end()};
}

RationalModel ambient_model(Ambient amb) {
  return amb == Ambient::Nonneg ? RationalModel::unbounded()
                                : RationalModel::capped(Rational(1));
}

Verdict countermodel_verdict(Ambient amb, const std::vector<std::string>& vars,
                             const std::vector<Rational>& point, const Formula& s,
                             const Formula& t) {
  Verdict v;
  v.valid = false;
  v.ambient = amb;
  for (std::size_t i = 0; i < vars.size(); ++i) v.assignment[vars[i]] = point[i];
  RationalModel m = ambient_model(amb);
  v.lhs_value = eval_formula(s, v.assignment, m);
  v.rhs_value = eval_formula(t, v.assignment, m);
  return v;
}

}  // namespace

Verdict decide_equation(const Formula& s, const Formula& t, Ambient amb) {
  auto vars = merged_vars({&s, &t});
  const int n = static_cast<int>(vars.size());
  PLTerm ps = compile_pl(s, amb, vars);
  PLTerm pt = compile_pl(t, amb, vars);
  for (const auto& a : ps.pieces)
    for (const auto& b : pt.pieces) {
      std::vector<LinConstraint> base = with_domain(a.guard, amb, n);
      base.insert(base.end(), b.guard.begin(), b.guard.end());
      for (int dir = 0; dir < 2; ++dir) {
        auto sys = base;
        LinExpr diff = dir == 0 ? a.value - b.value : b.value - a.value;
        sys.push_back(gt0(std::move(diff)));
        if (auto point = sample_point(sys, n)) {
          Verdict v = countermodel_verdict(amb, vars, *point, s, t);
          if (v.lhs_value == v.rhs_value)
            throw std::logic_error("countermodel failed exact re-evaluation");
          return v;
        }
      }
    }
  return {};
}

MatrixExpr MatrixExpr::atom_eq(Formula lhs, Formula rhs) {
  return MatrixExpr(std::make_shared<const Node>(
      Node{Kind::Atom, false, std::move(lhs), std::move(rhs), {}}));
}

MatrixExpr MatrixExpr::atom_leq(Formula lhs, Formula rhs) {
  return MatrixExpr(std::make_shared<const Node>(
      Node{Kind::Atom, true, std::move(lhs), std::move(rhs), {}}));
}

MatrixExpr MatrixExpr::lnot(MatrixExpr a) {
  return MatrixExpr(std::make_shared<const Node>(
      Node{Kind::Not, false, Formula(), Formula(), {std::move(a)}}));
}

MatrixExpr MatrixExpr::land(MatrixExpr a, MatrixExpr b) {
  return MatrixExpr(std::make_shared<const Node>(
      Node{Kind::And, false, Formula(), Formula(), {std::move(a), std::move(b)}}));
}

MatrixExpr MatrixExpr::lor(MatrixExpr a, MatrixExpr b) {
  return MatrixExpr(std::make_shared<const Node>(
      Node{Kind::Or, false, Formula(), Formula(), {std::move(a), std::move(b)}}));
}

bool MatrixExpr::eval(const std::map<std::string, Rational>& env,
                      const RationalModel& m) const {
  switch (kind()) {
    case Kind::Atom: {
      Rational a = eval_formula(lhs(), env, m);
      Rational b = eval_formula(rhs(), env, m);
      return atom_is_leq() ? a <= b : a == b;
    }
    case Kind::Not:
      return !child(0).eval(env, m);
    case Kind::And:
      return child(0).eval(env, m) && child(1).eval(env, m);
    case Kind::Or:
      return child(0).eval(env, m) || child(1).eval(env, m);
  }
  return false;
}

namespace {

class MatrixParser {
 public:
  explicit MatrixParser(std::string text) : text_(std::move(text)) {}

  MatrixExpr parse() {
    MatrixExpr m = implies();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError("trailing input in matrix", pos_);
    return m;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at(const std::string& s) {
    skip_ws();
    return text_.compare(pos_, s.size(), s) == 0;
  }

  MatrixExpr implies() {
    MatrixExpr l = disj();
    if (at("==>")) {
      pos_ += 3;
      return MatrixExpr::implies(std::move(l), implies());
    }
    return l;
  }

  MatrixExpr disj() {
    MatrixExpr l = conj();
    while (at("|")) {
      pos_ += 1;
      l = MatrixExpr::lor(std::move(l), conj());
    }
    return l;
  }

  MatrixExpr conj() {
    MatrixExpr l = unary();
    while (at("&")) {
      pos_ += 1;
      l = MatrixExpr::land(std::move(l), unary());
    }
    return l;
  }

  MatrixExpr unary() {
    skip_ws();
    if (at("!")) {
      pos_ += 1;
      return MatrixExpr::lnot(unary());
    }
    if (auto a = try_atom()) return *a;
    if (at("(")) {
      pos_ += 1;
      MatrixExpr m = implies();
      skip_ws();
      if (!at(")")) throw SyntaxError("expected ')'", pos_);
      pos_ += 1;
      return m;
    }
    throw SyntaxError("expected an atom or a parenthesized matrix", pos_);
  }

  // An atom is a segment with a top-level '=' or '<=' comparator, extending to
  // the next top-level connective. "==>"' never counts as a comparator.
  std::optional<MatrixExpr> try_atom() {
    skip_ws();
    std::size_t i = pos_;
    int depth = 0;
    std::size_t cmp = std::string::npos, cmp_len = 0;
    bool leq = false;
    std::size_t end = text_.size();
    for (; i < text_.size(); ++i) {
      char c = text_[i];
      if (c == '(') {
        ++depth;
        continue;
      }
      if (c == ')') {
        if (depth == 0) {
          end = i;
          break;
        }
        --depth;
        continue;
      }
      if (depth > 0) continue;
      if (c == '&' || c == '|') {
        end = i;
        break;
      }
      if (c == '=' && i + 1 < text_.size() && text_[i + 1] == '=') {
        end = i;
        break;
      }
      if (cmp == std::string::npos) {
        if (c == '=') {
          cmp = i;
          cmp_len = 1;
          leq = false;
        } else if (c == '<' && i + 1 < text_.size() && text_[i + 1] == '=') {
          cmp = i;
          cmp_len = 2;
          leq = true;
          ++i;
        }
      }
    }
    if (cmp == std::string::npos) return std::nullopt;
    Formula lhs = parse_alg_formula(text_.substr(pos_, cmp - pos_));
    Formula rhs = parse_alg_formula(text_.substr(cmp + cmp_len, end - cmp - cmp_len));
    pos_ = end;
    return leq ? MatrixExpr::atom_leq(std::move(lhs), std::move(rhs))
               : MatrixExpr::atom_eq(std::move(lhs), std::move(rhs));
  }

  std::string text_;
  std::size_t pos_ = 0;
};

struct Literal {
  Formula lhs, rhs;
  bool is_leq = false;
  bool positive = true;
};

using Conjunct = std::vector<Literal>;

std::vector<Conjunct> product(const std::vector<Conjunct>& a, const std::vector<Conjunct>& b) {
  std::vector<Conjunct> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Conjunct c = x;
      c.insert(c.end(), y.begin(), y.end());
      out.push_back(std::move(c));
    }
  return out;
}

std::vector<Conjunct> unite(std::vector<Conjunct> a, const std::vector<Conjunct>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// DNF of the matrix under the given polarity.
std::vector<Conjunct> dnf(const MatrixExpr& m, bool polarity) {
  switch (m.kind()) {
    case MatrixExpr::Kind::Atom:
      return {{Literal{m.lhs(), m.rhs(), m.atom_is_leq(), polarity}}};
    case MatrixExpr::Kind::Not:
      return dnf(m.child(0), !polarity);
    case MatrixExpr::Kind::And:
      return polarity ? product(dnf(m.child(0), true), dnf(m.child(1), true))
                      : unite(dnf(m.child(0), false), dnf(m.child(1), false));
    case MatrixExpr::Kind::Or:
      return polarity ? unite(dnf(m.child(0), true), dnf(m.child(1), true))
                      : product(dnf(m.child(0), false), dnf(m.child(1), false));
  }
  return {};
}

// atom constraints for one literal choice; `alt` picks a branch of a split
// disequality (0/1), ignored otherwise
void literal_constraints(const Literal& lit, const LinExpr& vl, const LinExpr& vr, int alt,
                         std::vector<LinConstraint>& out) {
  if (lit.is_leq) {
    if (lit.positive)
      out.push_back(geq0(vr - vl));
    else
      out.push_back(gt0(vl - vr));
  } else if (lit.positive) {
    out.push_back(geq0(vl - vr));
    out.push_back(geq0(vr - vl));
  } else {
    out.push_back(alt == 0 ? gt0(vl - vr) : gt0(vr - vl));
  }
}

}  // namespace

MatrixExpr parse_matrix(const std::string& text) { return MatrixParser(text).parse(); }

Verdict decide_universal(const MatrixExpr& matrix, const std::vector<Ambient>& ambients) {
  // shared variable space over the whole matrix
  std::set<std::string> var_set;
  std::vector<std::pair<std::string, Formula>> term_list;  // distinct terms by rendering
  auto note_term = [&](const Formula& f) {
    for (auto& v : collect_vars(f)) var_set.insert(v);
    std::string key = render_alg_formula(f);
    for (auto& [k, g] : term_list)
      if (k == key) return;
    term_list.emplace_back(key, f);
  };
  std::function<void(const MatrixExpr&)> walk = [&](const MatrixExpr& m) {
    if (m.kind() == MatrixExpr::Kind::Atom) {
      note_term(m.lhs());
      note_term(m.rhs());
    } else {
      for (int i = 0; i < m.child_count(); ++i) walk(m.child(i));
    }
  };
  walk(matrix);
  std::vector<std::string> vars(var_set.begin(), var_set.end());
  const int n = static_cast<int>(vars.size());

  auto falsifying = dnf(matrix, false);

  for (Ambient amb : ambients) {
    std::map<std::string, PLTerm> compiled;
    for (const auto& [key, f] : term_list) compiled.emplace(key, compile_pl(f, amb, vars));

    for (const auto& conjunct : falsifying) {
      // branch over the split disequalities
      int splits = 0;
      for (const auto& lit : conjunct)
        if (!lit.is_leq && !lit.positive) ++splits;
      for (int mask = 0; mask < (1 << splits); ++mask) {
        // distinct terms used by this conjunct, in first-use order
        std::vector<std::string> used;
        for (const auto& lit : conjunct)
          for (const std::string& k :
               {render_alg_formula(lit.lhs), render_alg_formula(lit.rhs)})
            if (std::find(used.begin(), used.end(), k) == used.end()) used.push_back(k);

        std::map<std::string, LinExpr> chosen;
        std::function<std::optional<std::vector<Rational>>(std::size_t,
                                                           std::vector<LinConstraint>)>
            pick = [&](std::size_t idx, std::vector<LinConstraint> acc)
            -> std::optional<std::vector<Rational>> {
          if (idx == used.size()) {
            int split_seen = 0;
            for (const auto& lit : conjunct) {
              int alt = 0;
              if (!lit.is_leq && !lit.positive) alt = (mask >> split_seen++) & 1;
              literal_constraints(lit, chosen.at(render_alg_formula(lit.lhs)),
                                  chosen.at(render_alg_formula(lit.rhs)), alt, acc);
            }
            auto domain = ambient_domain(amb, n);
            acc.insert(acc.end(), domain.begin(), domain.end());
            return sample_point(acc, n);
          }
          const PLTerm& pt = compiled.at(used[idx]);
          for (const auto& piece : pt.pieces) {
            auto next = acc;
            next.insert(next.end(), piece.guard.begin(), piece.guard.end());
            if (!feasible(with_domain(next, amb, n), n)) continue;
            chosen[used[idx]] = piece.value;
            if (auto r = pick(idx + 1, std::move(next))) return r;
          }
          chosen.erase(used[idx]);
          return std::nullopt;
        };
        if (auto point = pick(0, {})) {
          Verdict v;
          v.valid = false;
          v.ambient = amb;
          for (int i = 0; i < n; ++i) v.assignment[vars[i]] = (*point)[i];
          if (matrix.eval(v.assignment, ambient_model(amb)))
            throw std::logic_error("universal countermodel failed re-evaluation");
          return v;
        }
      }
    }
  }
  return {};
}

namespace {

Formula strip_halving(const Formula& f, std::map<std::string, std::string>& names,
                      std::vector<std::pair<Formula, Formula>>& extra_hyps,
                      const std::set<std::string>& taken, int& counter) {
  switch (f.kind()) {
    case FormulaKind::Zero:
    case FormulaKind::One:
    case FormulaKind::Var:
      return f;
    case FormulaKind::Conj:
      return Formula::conj(strip_halving(f.left(), names, extra_hyps, taken, counter),
                           strip_halving(f.right(), names, extra_hyps, taken, counter));
    case FormulaKind::Imp:
      return Formula::imp(strip_halving(f.left(), names, extra_hyps, taken, counter),
                          strip_halving(f.right(), names, extra_hyps, taken, counter));
    case FormulaKind::Half: {
      Formula body = strip_halving(f.body(), names, extra_hyps, taken, counter);
      std::string key = render_alg_formula(body);
      auto it = names.find(key);
      if (it == names.end()) {
        std::string fresh;
        do {
          fresh = "v" + std::to_string(++counter);
        } while (taken.count(fresh));
        it = names.emplace(key, fresh).first;
        Formula v = Formula::var(fresh);
        extra_hyps.emplace_back(v, Formula::imp(v, body));  // v = v -> t
      }
      return Formula::var(it->second);
    }
  }
  throw EvalError("unreachable formula kind");
}

}  // namespace

HornClause eliminate_halving(const HornClause& clause) {
  std::set<std::string> taken;
  auto note = [&](const Formula& f) {
    for (auto& v : collect_vars(f)) taken.insert(v);
  };
  for (const auto& [l, r] : clause.hypotheses) {
    note(l);
    note(r);
  }
  note(clause.conclusion.first);
  note(clause.conclusion.second);

  std::map<std::string, std::string> names;
  std::vector<std::pair<Formula, Formula>> extra;
  int counter = 0;
  HornClause out;
  for (const auto& [l, r] : clause.hypotheses)
    out.hypotheses.emplace_back(strip_halving(l, names, extra, taken, counter),
                                strip_halving(r, names, extra, taken, counter));
  out.conclusion = {strip_halving(clause.conclusion.first, names, extra, taken, counter),
                    strip_halving(clause.conclusion.second, names, extra, taken, counter)};
  out.hypotheses.insert(out.hypotheses.begin(), extra.begin(), extra.end());
  return out;
}

}  // namespace coopkit
