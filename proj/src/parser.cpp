#include "grs/parser.hpp"

#include <cctype>
#include <map>
#include <set>
#include <utility>

#include "grs/atoms.hpp"

namespace grs {

ParseError::ParseError(const std::string& msg, uint32_t line, uint32_t column)
    : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

namespace {

enum class Tok : uint8_t {
  Ident,      // lowercase identifier or integer (constant / predicate name)
  Variable,   // capitalized identifier
  ColonDash,  // :-
  Dot,
  DotDot,
  Comma,
  LParen,
  RParen,
  NotEq,      // !=
  Slash,
  Minus,
  Directive,  // #name
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  uint32_t line = 1;
  uint32_t col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
  uint32_t line_ = 1;
  uint32_t col_ = 1;
  Token tok_;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  int cur() const { return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_]) : -1; }

  void bump() {
    if (pos_ < text_.size()) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void skip_space_and_comments() {
    while (true) {
      int c = cur();
      if (c == '%') {
        while (cur() != -1 && cur() != '\n') bump();
      } else if (c != -1 && std::isspace(c)) {
        bump();
      } else {
        return;
      }
    }
  }

  void advance() {
    skip_space_and_comments();
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    int c = cur();
    if (c == -1) {
      tok_.kind = Tok::End;
      return;
    }
    if (std::isdigit(c)) {
      std::string text;
      while (cur() != -1 && std::isdigit(cur())) {
        text.push_back(static_cast<char>(cur()));
        bump();
      }
      tok_.kind = Tok::Ident;
      tok_.text = std::move(text);
      return;
    }
    if (std::isalpha(c)) {
      std::string text;
      while (cur() != -1 && (std::isalnum(cur()) || cur() == '_')) {
        text.push_back(static_cast<char>(cur()));
        bump();
      }
      tok_.kind = std::isupper(static_cast<unsigned char>(text[0])) ? Tok::Variable : Tok::Ident;
      tok_.text = std::move(text);
      return;
    }
    switch (c) {
      case ':':
        bump();
        if (cur() != '-') fail("expected '-' after ':'");
        bump();
        tok_.kind = Tok::ColonDash;
        return;
      case '.':
        bump();
        if (cur() == '.') {
          bump();
          tok_.kind = Tok::DotDot;
        } else {
          tok_.kind = Tok::Dot;
        }
        return;
      case ',':
        bump();
        tok_.kind = Tok::Comma;
        return;
      case '(':
        bump();
        tok_.kind = Tok::LParen;
        return;
      case ')':
        bump();
        tok_.kind = Tok::RParen;
        return;
      case '!':
        bump();
        if (cur() != '=') fail("expected '=' after '!'");
        bump();
        tok_.kind = Tok::NotEq;
        return;
      case '/':
        bump();
        tok_.kind = Tok::Slash;
        return;
      case '-':
        bump();
        tok_.kind = Tok::Minus;
        return;
      case '#': {
        bump();
        std::string text;
        while (cur() != -1 && std::isalpha(cur())) {
          text.push_back(static_cast<char>(cur()));
          bump();
        }
        if (text.empty()) fail("expected directive name after '#'");
        tok_.kind = Tok::Directive;
        tok_.text = std::move(text);
        return;
      }
      default:
        fail(std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
};

class ProgramParser {
 public:
  explicit ProgramParser(std::string_view text) : lex_(text) {}

  Program parse() {
    while (lex_.peek().kind != Tok::End) {
      if (lex_.peek().kind == Tok::Directive) {
        directive();
      } else {
        rule();
      }
    }
    validate();
    return std::move(prog_);
  }

 private:
  Lexer lex_;
  Program prog_;
  std::vector<std::pair<uint32_t, uint32_t>> rule_pos_;  // line/col per rule

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(msg, t.line, t.col);
  }

  Token expect(Tok kind, const char* what) {
    Token t = lex_.take();
    if (t.kind != kind) fail(t, std::string("expected ") + what);
    return t;
  }

  void directive() {
    Token d = lex_.take();
    if (d.text == "abducible") {
      Token name = expect(Tok::Ident, "predicate name");
      expect(Tok::Slash, "'/'");
      Token arity = expect(Tok::Ident, "arity");
      if (!std::isdigit(static_cast<unsigned char>(arity.text[0])))
        fail(arity, "arity must be an integer");
      expect(Tok::Dot, "'.'");
      prog_.abducibles.insert(
          prog_.preds.intern(name.text, static_cast<uint32_t>(std::stoul(arity.text))));
    } else if (d.text == "domain") {
      if (!prog_.domain.empty()) fail(d, "duplicate #domain directive");
      Token lo = expect(Tok::Ident, "integer");
      expect(Tok::DotDot, "'..'");
      Token hi = expect(Tok::Ident, "integer");
      expect(Tok::Dot, "'.'");
      if (!std::isdigit(static_cast<unsigned char>(lo.text[0])) ||
          !std::isdigit(static_cast<unsigned char>(hi.text[0])))
        fail(lo, "#domain bounds must be integers");
      long a = std::stol(lo.text), b = std::stol(hi.text);
      if (a > b) fail(lo, "empty #domain range");
      for (long v = a; v <= b; ++v) prog_.domain.push_back(prog_.consts.intern(std::to_string(v)));
    } else {
      fail(d, "unknown directive #" + d.text);
    }
  }

  struct RuleScope {
    std::map<std::string, VarId> vars;
    Rule* rule;
  };

  Term term(RuleScope& scope) {
    Token t = lex_.take();
    if (t.kind == Tok::Variable) {
      auto it = scope.vars.find(t.text);
      if (it != scope.vars.end()) return Term::variable(it->second);
      VarId v = scope.rule->var_count++;
      scope.vars.emplace(t.text, v);
      scope.rule->var_names.push_back(t.text);
      return Term::variable(v);
    }
    if (t.kind == Tok::Ident) return Term::constant(prog_.consts.intern(t.text));
    fail(t, "expected term");
  }

  Atom atom_from(Token name, RuleScope& scope) {
    std::vector<Term> args;
    if (lex_.peek().kind == Tok::LParen) {
      lex_.take();
      args.push_back(term(scope));
      while (lex_.peek().kind == Tok::Comma) {
        lex_.take();
        args.push_back(term(scope));
      }
      expect(Tok::RParen, "')'");
    }
    Atom a;
    a.pred = prog_.preds.intern(name.text, static_cast<uint32_t>(args.size()));
    a.args = std::move(args);
    return a;
  }

  void body_item(RuleScope& scope, Rule& r) {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Ident && t.text == "not") {
      lex_.take();
      Token name = expect(Tok::Ident, "atom after 'not'");
      r.neg_body.push_back(atom_from(name, scope));
      return;
    }
    if (t.kind == Tok::Variable || (t.kind == Tok::Ident && std::isdigit(static_cast<unsigned char>(t.text[0])))) {
      // can only start a constraint
      Term lhs = term(scope);
      expect(Tok::NotEq, "'!='");
      Term rhs = term(scope);
      r.constraints.push_back({lhs, rhs});
      return;
    }
    if (t.kind == Tok::Ident) {
      Token name = lex_.take();
      if (lex_.peek().kind == Tok::NotEq) {
        lex_.take();
        Term lhs = Term::constant(prog_.consts.intern(name.text));
        Term rhs = term(scope);
        r.constraints.push_back({lhs, rhs});
        return;
      }
      r.pos_body.push_back(atom_from(name, scope));
      return;
    }
    fail(t, "expected body literal or constraint");
  }

  void rule() {
    Token start = lex_.peek();
    Rule r;
    RuleScope scope{{}, &r};
    Token name = expect(Tok::Ident, "rule head");
    if (name.text == "not") fail(name, "'not' cannot head a rule");
    r.head = atom_from(name, scope);
    if (lex_.peek().kind == Tok::ColonDash) {
      lex_.take();
      body_item(scope, r);
      while (lex_.peek().kind == Tok::Comma) {
        lex_.take();
        body_item(scope, r);
      }
    }
    expect(Tok::Dot, "'.'");
    prog_.rules.push_back(std::move(r));
    rule_pos_.emplace_back(start.line, start.col);
  }

  void validate() const {
    for (size_t i = 0; i < prog_.rules.size(); ++i) {
      const Rule& r = prog_.rules[i];
      auto [line, col] = rule_pos_[i];
      if (prog_.is_abducible(r.head.pred)) {
        const PredSig& sig = prog_.preds.sig(r.head.pred);
        throw ParseError("abducible predicate " + sig.name + "/" + std::to_string(sig.arity) +
                             " used as a rule head",
                         line, col);
      }
      if (prog_.domain.empty()) {
        std::set<VarId> head_vars;
        for (const Term& t : r.head.args)
          if (t.is_variable()) head_vars.insert(t.id);
        auto check = [&](const Term& t) {
          if (t.is_variable() && head_vars.count(t.id) == 0)
            throw ParseError("variable " + r.var_names[t.id] +
                                 " occurs only in the body and no #domain is declared",
                             line, col);
        };
        for (const Atom& a : r.pos_body)
          for (const Term& t : a.args) check(t);
        for (const Atom& a : r.neg_body)
          for (const Term& t : a.args) check(t);
        for (const InequalityConstraint& c : r.constraints) {
          check(c.lhs);
          check(c.rhs);
        }
      }
    }
  }
};

struct ParsedQuery {
  bool positive = true;
  std::string pred;
  std::vector<std::string> args;
};

ParsedQuery parse_query_text(std::string_view text) {
  Lexer lex(text);
  ParsedQuery q;
  if (lex.peek().kind == Tok::Minus) {
    lex.take();
    q.positive = false;
  }
  Token name = lex.take();
  if (name.kind != Tok::Ident) throw ParseError("expected atom", name.line, name.col);
  q.pred = name.text;
  if (lex.peek().kind == Tok::LParen) {
    lex.take();
    while (true) {
      Token t = lex.take();
      if (t.kind == Tok::Variable)
        throw ParseError("query must be ground, found variable " + t.text, t.line, t.col);
      if (t.kind != Tok::Ident) throw ParseError("expected constant", t.line, t.col);
      q.args.push_back(t.text);
      Token sep = lex.take();
      if (sep.kind == Tok::RParen) break;
      if (sep.kind != Tok::Comma) throw ParseError("expected ',' or ')'", sep.line, sep.col);
    }
  }
  Token end = lex.take();
  if (end.kind != Tok::End) throw ParseError("trailing input after query", end.line, end.col);
  return q;
}

}  // namespace

Program parse_program(std::string_view text) { return ProgramParser(text).parse(); }

Literal parse_query(std::string_view text, Program& program) {
  ParsedQuery q = parse_query_text(text);
  Literal l;
  l.positive = q.positive;
  l.atom.pred = program.preds.intern(q.pred, static_cast<uint32_t>(q.args.size()));
  for (const std::string& a : q.args) l.atom.args.push_back(Term::constant(program.consts.intern(a)));
  return l;
}

Lit AtomTable::parse_lit(std::string_view text) {
  ParsedQuery q = parse_query_text(text);
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<SymbolId> args;
  args.reserve(q.args.size());
  for (const std::string& a : q.args) args.push_back(consts_.intern(a));
  PredId pred = preds_.intern(q.pred, static_cast<uint32_t>(args.size()));
  return make_lit(intern_unlocked(pred, args), q.positive);
}

}  // namespace grs
