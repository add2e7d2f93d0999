#include "coopkit/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace coopkit {

Formula Formula::zero() {
  static const auto n = std::make_shared<const Node>(Node{FormulaKind::Zero, "", nullptr, nullptr});
  return Formula(n);
}

Formula Formula::one() {
  static const auto n = std::make_shared<const Node>(Node{FormulaKind::One, "", nullptr, nullptr});
  return Formula(n);
}

Formula Formula::var(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
    throw std::invalid_argument("bad variable name: " + name);
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      throw std::invalid_argument("bad variable name: " + name);
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Var, name, nullptr, nullptr}));
}

Formula Formula::conj(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Conj, "", l.node_, r.node_}));
}

Formula Formula::imp(Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Imp, "", l.node_, r.node_}));
}

Formula Formula::half(Formula b) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Half, "", b.node_, nullptr}));
}

int Formula::compare(const Formula& x, const Formula& y) {
  if (x.node_ == y.node_) return 0;
  auto rank = [](FormulaKind k) { return static_cast<int>(k); };
  if (rank(x.kind()) != rank(y.kind())) return rank(x.kind()) < rank(y.kind()) ? -1 : 1;
  switch (x.kind()) {
    case FormulaKind::Zero:
    case FormulaKind::One:
      return 0;
    case FormulaKind::Var:
      return x.var_name().compare(y.var_name()) < 0   ? -1
             : x.var_name().compare(y.var_name()) > 0 ? 1
                                                      : 0;
    case FormulaKind::Half:
      return compare(x.body(), y.body());
    case FormulaKind::Conj:
    case FormulaKind::Imp: {
      int c = compare(x.left(), y.left());
      return c != 0 ? c : compare(x.right(), y.right());
    }
  }
  return 0;
}

LanguageId classify_language(const Formula& f) {
  bool has_one = false, has_half = false;
  auto walk = [&](auto&& self, const Formula& g) -> void {
    switch (g.kind()) {
      case FormulaKind::One:
        has_one = true;
        break;
      case FormulaKind::Half:
        has_half = true;
        self(self, g.body());
        break;
      case FormulaKind::Conj:
      case FormulaKind::Imp:
        self(self, g.left());
        self(self, g.right());
        break;
      default:
        break;
    }
  };
  walk(walk, f);
  if (has_one && has_half) return LanguageId::Lih;
  if (has_one) return LanguageId::Li;
  if (has_half) return LanguageId::Lh;
  return LanguageId::Lo;
}

bool language_leq(LanguageId sub, LanguageId super) {
  if (sub == LanguageId::Lo || sub == super || super == LanguageId::Lih) return true;
  return false;
}

std::string to_string(LanguageId id) {
  switch (id) {
    case LanguageId::Lo: return "Lo";
    case LanguageId::Li: return "Li";
    case LanguageId::Lh: return "Lh";
    case LanguageId::Lih: return "Lih";
  }
  return "?";
}

Sequent::Sequent(std::vector<Formula> ante, Formula succ)
    : antecedent(std::move(ante)), succedent(std::move(succ)) {
  std::sort(antecedent.begin(), antecedent.end());
}

bool operator==(const Sequent& a, const Sequent& b) {
  return a.succedent == b.succedent && a.antecedent.size() == b.antecedent.size() &&
         std::equal(a.antecedent.begin(), a.antecedent.end(), b.antecedent.begin());
}

namespace {

struct Token {
  enum Kind { End, Ident, Zero, One, Two, Conj, Arrow, Slash, Caret, LParen, RParen, Comma, Turnstile };
  Kind kind;
  std::string text;
  std::size_t pos;
};

// Two concrete syntaxes over the same trees: the logic flavor (`*`, `-o`, `^`)
// and the algebra flavor (`+`, `->`).
std::vector<Token> lex(const std::string& text, bool algebra) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string id;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        id += text[i++];
      out.push_back({Token::Ident, id, start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        digits += text[i++];
      if (digits == "0")
        out.push_back({Token::Zero, digits, start});
      else if (digits == "1")
        out.push_back({Token::One, digits, start});
      else if (digits == "2")
        out.push_back({Token::Two, digits, start});
      else
        throw SyntaxError("unexpected number '" + digits + "'", start);
      continue;
    }
    switch (c) {
      case '*':
        if (algebra) throw SyntaxError("'*' is not valid here; use '+'", i);
        out.push_back({Token::Conj, "*", i++});
        continue;
      case '+':
        if (!algebra) throw SyntaxError("'+' is not valid here; use '*'", i);
        out.push_back({Token::Conj, "+", i++});
        continue;
      case '-':
        if (!algebra && i + 1 < text.size() && text[i + 1] == 'o') {
          out.push_back({Token::Arrow, "-o", i});
          i += 2;
          continue;
        }
        if (algebra && i + 1 < text.size() && text[i + 1] == '>') {
          out.push_back({Token::Arrow, "->", i});
          i += 2;
          continue;
        }
        throw SyntaxError("unexpected '-'", i);
      case '/':
        out.push_back({Token::Slash, "/", i++});
        continue;
      case '^':
        if (algebra) throw SyntaxError("'^' is not valid in algebra terms", i);
        out.push_back({Token::Caret, "^", i++});
        continue;
      case '(':
        out.push_back({Token::LParen, "(", i++});
        continue;
      case ')':
        out.push_back({Token::RParen, ")", i++});
        continue;
      case ',':
        out.push_back({Token::Comma, ",", i++});
        continue;
      case '|':
        if (i + 1 < text.size() && text[i + 1] == '-') {
          out.push_back({Token::Turnstile, "|-", i});
          i += 2;
          continue;
        }
        throw SyntaxError("unexpected '|'", i);
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Token::End, "", text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Formula formula() {
    Formula f = imp();
    expect(Token::End, "end of input");
    return f;
  }

  Sequent sequent() {
    std::vector<Formula> ante;
    if (peek().kind != Token::Turnstile) {
      ante.push_back(imp());
      while (peek().kind == Token::Comma) {
        ++idx_;
        ante.push_back(imp());
      }
    }
    expect(Token::Turnstile, "'|-'");
    Formula succ = imp();
    expect(Token::End, "end of input");
    return Sequent(std::move(ante), std::move(succ));
  }

 private:
  const Token& peek() const { return toks_[idx_]; }

  void expect(Token::Kind k, const std::string& what) {
    if (peek().kind != k) throw SyntaxError("expected " + what, peek().pos);
    ++idx_;
  }

  Formula imp() {
    Formula l = conj();
    if (peek().kind == Token::Arrow) {
      ++idx_;
      return Formula::imp(std::move(l), imp());
    }
    return l;
  }

  Formula conj() {
    Formula l = postfix();
    while (peek().kind == Token::Conj) {
      ++idx_;
      l = Formula::conj(std::move(l), postfix());
    }
    return l;
  }

  Formula postfix() {
    Formula f = atom();
    for (;;) {
      if (peek().kind == Token::Slash) {
        ++idx_;
        expect(Token::Two, "'2' after '/'");
        f = Formula::half(std::move(f));
      } else if (peek().kind == Token::Caret) {
        ++idx_;
        f = Formula::lnot(std::move(f));
      } else {
        return f;
      }
    }
  }

  Formula atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Zero:
        ++idx_;
        return Formula::zero();
      case Token::One:
        ++idx_;
        return Formula::one();
      case Token::Ident:
        ++idx_;
        return Formula::var(t.text);
      case Token::LParen: {
        ++idx_;
        Formula f = imp();
        expect(Token::RParen, "')'");
        return f;
      }
      default:
        throw SyntaxError("expected a formula", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t idx_ = 0;
};

// Precedence levels: implication 0 (lowest), conjunction 1, postfix 2, atoms 3.
int prec(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Imp: return 0;
    case FormulaKind::Conj: return 1;
    case FormulaKind::Half: return 2;
    default: return 3;
  }
}

std::string render(const Formula& f, int min_prec, bool algebra) {
  std::string s;
  switch (f.kind()) {
    case FormulaKind::Zero: s = "0"; break;
    case FormulaKind::One: s = "1"; break;
    case FormulaKind::Var: s = f.var_name(); break;
    case FormulaKind::Half: s = render(f.body(), 2, algebra) + "/2"; break;
    case FormulaKind::Conj:
      s = render(f.left(), 1, algebra) + (algebra ? " + " : " * ") +
          render(f.right(), 2, algebra);
      break;
    case FormulaKind::Imp:
      s = render(f.left(), 1, algebra) + (algebra ? " -> " : " -o ") +
          render(f.right(), 0, algebra);
      break;
  }
  if (prec(f) < min_prec) return "(" + s + ")";
  return s;
}

}  // namespace

Formula parse_formula(const std::string& text) { return Parser(lex(text, false)).formula(); }

std::string render_formula(const Formula& f) { return render(f, 0, false); }

Sequent parse_sequent(const std::string& text) { return Parser(lex(text, false)).sequent(); }

std::string render_sequent(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.antecedent.size(); ++i) {
    if (i) out += ", ";
    out += render_formula(s.antecedent[i]);
  }
  if (!s.antecedent.empty()) out += " ";
  out += "|- " + render_formula(s.succedent);
  return out;
}

Formula parse_alg_formula(const std::string& text) { return Parser(lex(text, true)).formula(); }

std::string render_alg_formula(const Formula& f) { return render(f, 0, true); }

std::vector<std::string> collect_vars(const Formula& f) {
  std::set<std::string> names;
  auto walk = [&](auto&& self, const Formula& g) -> void {
    switch (g.kind()) {
      case FormulaKind::Var: names.insert(g.var_name()); break;
      case FormulaKind::Half: self(self, g.body()); break;
      case FormulaKind::Conj:
      case FormulaKind::Imp:
        self(self, g.left());
        self(self, g.right());
        break;
      default: break;
    }
  };
  walk(walk, f);
  return {names.begin(), names.end()};
}

}  // namespace coopkit
