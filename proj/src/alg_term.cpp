#include "coopkit/alg_term.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace coopkit {

AlgTerm AlgTerm::zero() {
  static const auto n = std::make_shared<const Node>(Node{Kind::Zero, "", {}});
  return AlgTerm(n);
}

AlgTerm AlgTerm::atom(const std::string& name) {
  return AlgTerm(std::make_shared<const Node>(Node{Kind::Atom, name, {}}));
}

AlgTerm AlgTerm::sum(std::vector<AlgTerm> args) {
  return AlgTerm(std::make_shared<const Node>(Node{Kind::Sum, "", std::move(args)}));
}

AlgTerm AlgTerm::imp(AlgTerm l, AlgTerm r) {
  return AlgTerm(
      std::make_shared<const Node>(Node{Kind::Imp, "", {std::move(l), std::move(r)}}));
}

int AlgTerm::compare(const AlgTerm& a, const AlgTerm& b) {
  if (a.node_ == b.node_) return 0;
  if (a.kind() != b.kind())
    return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  switch (a.kind()) {
    case Kind::Zero:
      return 0;
    case Kind::Atom: {
      int c = a.atom_name().compare(b.atom_name());
      return c < 0 ? -1 : c > 0 ? 1 : 0;
    }
    case Kind::Sum:
    case Kind::Imp: {
      const auto& xs = a.node_->args;
      const auto& ys = b.node_->args;
      if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        int c = compare(xs[i], ys[i]);
        if (c != 0) return c;
      }
      return 0;
    }
  }
  return 0;
}

AlgTerm ac_normalize(const AlgTerm& t) {
  switch (t.kind()) {
    case AlgTerm::Kind::Zero:
    case AlgTerm::Kind::Atom:
      return t;
    case AlgTerm::Kind::Imp:
      return AlgTerm::imp(ac_normalize(t.left()), ac_normalize(t.right()));
    case AlgTerm::Kind::Sum: {
      std::vector<AlgTerm> flat;
      for (const auto& a : t.args()) {
        AlgTerm n = ac_normalize(a);
        if (n.kind() == AlgTerm::Kind::Zero) continue;
        if (n.kind() == AlgTerm::Kind::Sum)
          flat.insert(flat.end(), n.args().begin(), n.args().end());
        else
          flat.push_back(std::move(n));
      }
      std::sort(flat.begin(), flat.end());
      if (flat.empty()) return AlgTerm::zero();
      if (flat.size() == 1) return flat[0];
      return AlgTerm::sum(std::move(flat));
    }
  }
  return t;
}

std::vector<AlgTerm> summands(const AlgTerm& t) {
  if (t.kind() == AlgTerm::Kind::Zero) return {};
  if (t.kind() == AlgTerm::Kind::Sum) return t.args();
  return {t};
}

AlgTerm sum_of(std::vector<AlgTerm> parts) {
  if (parts.empty()) return AlgTerm::zero();
  if (parts.size() == 1) return parts[0];
  return AlgTerm::sum(std::move(parts));
}

AlgTerm subterm_at(const AlgTerm& t, const std::vector<int>& path) {
  AlgTerm cur = t;
  for (int i : path) {
    switch (cur.kind()) {
      case AlgTerm::Kind::Sum:
        if (i < 0 || i >= static_cast<int>(cur.args().size()))
          throw std::out_of_range("term position out of range");
        cur = cur.args()[i];
        break;
      case AlgTerm::Kind::Imp:
        if (i != 0 && i != 1) throw std::out_of_range("term position out of range");
        cur = i == 0 ? cur.left() : cur.right();
        break;
      default:
        throw std::out_of_range("term position descends into a leaf");
    }
  }
  return cur;
}

AlgTerm replace_at(const AlgTerm& t, const std::vector<int>& path, const AlgTerm& repl) {
  if (path.empty()) return repl;
  std::vector<int> rest(path.begin() + 1, path.end());
  int i = path[0];
  switch (t.kind()) {
    case AlgTerm::Kind::Sum: {
      auto args = t.args();
      if (i < 0 || i >= static_cast<int>(args.size()))
        throw std::out_of_range("term position out of range");
      args[i] = replace_at(args[i], rest, repl);
      return AlgTerm::sum(std::move(args));
    }
    case AlgTerm::Kind::Imp: {
      if (i == 0) return AlgTerm::imp(replace_at(t.left(), rest, repl), t.right());
      if (i == 1) return AlgTerm::imp(t.left(), replace_at(t.right(), rest, repl));
      throw std::out_of_range("term position out of range");
    }
    default:
      throw std::out_of_range("term position descends into a leaf");
  }
}

std::vector<std::vector<int>> all_positions(const AlgTerm& t) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  auto walk = [&](auto&& self, const AlgTerm& u) -> void {
    out.push_back(path);
    if (u.kind() == AlgTerm::Kind::Sum) {
      for (int i = 0; i < static_cast<int>(u.args().size()); ++i) {
        path.push_back(i);
        self(self, u.args()[i]);
        path.pop_back();
      }
    } else if (u.kind() == AlgTerm::Kind::Imp) {
      for (int i = 0; i < 2; ++i) {
        path.push_back(i);
        self(self, i == 0 ? u.left() : u.right());
        path.pop_back();
      }
    }
  };
  walk(walk, t);
  return out;
}

AlgTerm formula_to_term(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Zero:
      return AlgTerm::zero();
    case FormulaKind::Var:
      return AlgTerm::atom(f.var_name());
    case FormulaKind::Conj:
      return AlgTerm::sum({formula_to_term(f.left()), formula_to_term(f.right())});
    case FormulaKind::Imp:
      return AlgTerm::imp(formula_to_term(f.left()), formula_to_term(f.right()));
    case FormulaKind::One:
      throw std::invalid_argument("constant 1 has no algebra-term translation");
    case FormulaKind::Half:
      throw std::invalid_argument("halving has no algebra-term translation");
  }
  throw std::invalid_argument("unreachable formula kind");
}

AlgTerm sequent_term(const Sequent& s) {
  AlgTerm succ = formula_to_term(s.succedent);
  if (s.antecedent.empty()) return ac_normalize(succ);
  std::vector<AlgTerm> parts;
  for (const auto& f : s.antecedent) parts.push_back(formula_to_term(f));
  return ac_normalize(AlgTerm::imp(AlgTerm::sum(std::move(parts)), std::move(succ)));
}

AlgTerm parse_alg_term(const std::string& text) {
  return ac_normalize(formula_to_term(parse_alg_formula(text)));
}

namespace {

int term_prec(const AlgTerm& t) {
  switch (t.kind()) {
    case AlgTerm::Kind::Imp: return 0;
    case AlgTerm::Kind::Sum: return 1;
    default: return 2;
  }
}

std::string render(const AlgTerm& t, int min_prec) {
  std::string s;
  switch (t.kind()) {
    case AlgTerm::Kind::Zero:
      s = "0";
      break;
    case AlgTerm::Kind::Atom:
      s = t.atom_name();
      break;
    case AlgTerm::Kind::Sum:
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i) s += " + ";
        s += render(t.args()[i], 2);
      }
      break;
    case AlgTerm::Kind::Imp:
      s = render(t.left(), 1) + " -> " + render(t.right(), 0);
      break;
  }
  if (term_prec(t) < min_prec) return "(" + s + ")";
  return s;
}

}  // namespace

std::string render_alg_term(const AlgTerm& t) { return render(t, 0); }

std::vector<std::string> collect_atoms(const AlgTerm& t) {
  std::set<std::string> names;
  auto walk = [&](auto&& self, const AlgTerm& u) -> void {
    if (u.kind() == AlgTerm::Kind::Atom) names.insert(u.atom_name());
    if (u.kind() == AlgTerm::Kind::Sum)
      for (const auto& a : u.args()) self(self, a);
    if (u.kind() == AlgTerm::Kind::Imp) {
      self(self, u.left());
      self(self, u.right());
    }
  };
  walk(walk, t);
  return {names.begin(), names.end()};
}

}  // namespace coopkit
