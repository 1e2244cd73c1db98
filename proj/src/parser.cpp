#include "hoprep/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace hoprep {

namespace {

enum class Tok { LParen, RParen, Name, Nat, End };

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

const char* kStructuralKeywords[] = {"type", "sym", "clause", "vars", "pi",
                                     "eq",   "neq", "pos",    "neg",  "inst",
                                     "app",  "lam", "->"};

bool is_structural(const std::string& s) {
  for (auto* k : kStructuralKeywords)
    if (s == k) return true;
  return false;
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' ||
         c == '-' || c == '>';
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
        continue;
      }
      break;
    }
    SourceSpan span{pos_, pos_, line_, col_};
    if (pos_ >= text_.size()) {
      tok_ = Token{Tok::End, "", span};
      return;
    }
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ++col_;
      span.end = pos_;
      tok_ = Token{Tok::LParen, "(", span};
      return;
    }
    if (c == ')') {
      ++pos_;
      ++col_;
      span.end = pos_;
      tok_ = Token{Tok::RParen, ")", span};
      return;
    }
    if (is_name_char(c)) {
      size_t start = pos_;
      while (pos_ < text_.size() && is_name_char(text_[pos_])) {
        ++pos_;
        ++col_;
      }
      std::string s = text_.substr(start, pos_ - start);
      span.end = pos_;
      bool nat = std::all_of(s.begin(), s.end(), [](char d) {
        return std::isdigit(static_cast<unsigned char>(d));
      });
      tok_ = Token{nat ? Tok::Nat : Tok::Name, s, span};
      return;
    }
    throw ParseError(span, std::string("unexpected character '") + c + "'");
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {
    set_.sig = Signature::with_builtins();
  }

  ClauseSet run() {
    while (lex_.peek().kind != Tok::End) item();
    return std::move(set_);
  }

 private:
  Token expect(Tok k, const char* what) {
    Token t = lex_.next();
    if (t.kind != k) throw ParseError(t.span, std::string("expected ") + what);
    return t;
  }

  Token expect_name() {
    Token t = lex_.next();
    if (t.kind != Tok::Name && t.kind != Tok::Nat)
      throw ParseError(t.span, "expected identifier");
    if (is_structural(t.text) || Signature::is_logical(t.text))
      throw ParseError(t.span, "reserved word used as name: " + t.text);
    return t;
  }

  void item() {
    expect(Tok::LParen, "'('");
    Token kw = lex_.next();
    if (kw.text == "type") {
      Token name = expect_name();
      Token arity = expect(Tok::Nat, "arity");
      if (set_.sig.has_type_ctor(name.text))
        throw ParseError(name.span, "duplicate type constructor: " + name.text);
      set_.sig.declare_type_ctor(name.text, std::stoi(arity.text));
      expect(Tok::RParen, "')'");
    } else if (kw.text == "sym") {
      Token name = expect_name();
      if (set_.sig.has_symbol(name.text))
        throw ParseError(name.span, "duplicate symbol: " + name.text);
      TypeScheme sch = parse_scheme();
      set_.sig.declare_symbol(name.text, std::move(sch));
      expect(Tok::RParen, "')'");
    } else if (kw.text == "clause") {
      parse_clause();
    } else {
      throw ParseError(kw.span, "expected 'type', 'sym', or 'clause'");
    }
  }

  TypeScheme parse_scheme() {
    if (lex_.peek().kind == Tok::LParen) {
      // Peek past '(' for 'pi'.
      Token lp = lex_.next();
      if (lex_.peek().text == "pi") {
        lex_.next();
        expect(Tok::LParen, "'('");
        std::vector<std::string> vars;
        while (lex_.peek().kind != Tok::RParen) {
          Token v = expect_name();
          if (std::find(vars.begin(), vars.end(), v.text) != vars.end())
            throw ParseError(v.span, "duplicate type variable: " + v.text);
          vars.push_back(v.text);
        }
        lex_.next();
        TypePtr body = parse_type(&vars, nullptr);
        expect(Tok::RParen, "')'");
        return TypeScheme{std::move(vars), std::move(body)};
      }
      // Not a pi: a compound type starting at lp.
      TypePtr body = parse_type_tail(lp, nullptr, nullptr);
      return TypeScheme{{}, std::move(body)};
    }
    TypePtr body = parse_type(nullptr, nullptr);
    return TypeScheme{{}, std::move(body)};
  }

  // bound: pi-bound type variables (schemes); clause_tvs: implicit clause
  // type variables, collected on the fly (clause context). Exactly one of
  // the two contexts is active.
  TypePtr parse_type(const std::vector<std::string>* bound,
                     std::vector<std::string>* clause_tvs) {
    Token t = lex_.next();
    return parse_type_tail(t, bound, clause_tvs);
  }

  TypePtr parse_type_tail(Token t, const std::vector<std::string>* bound,
                          std::vector<std::string>* clause_tvs) {
    if (t.kind == Tok::Name || t.kind == Tok::Nat) {
      return atom_type(t, bound, clause_tvs);
    }
    if (t.kind != Tok::LParen) throw ParseError(t.span, "expected a type");
    Token head = lex_.next();
    if (head.text == "->") {
      std::vector<TypePtr> parts;
      while (lex_.peek().kind != Tok::RParen)
        parts.push_back(parse_type(bound, clause_tvs));
      Token rp = lex_.next();
      if (parts.size() < 2)
        throw ParseError(rp.span, "'->' needs at least two arguments");
      TypePtr res = parts.back();
      for (size_t i = parts.size() - 1; i-- > 0;) res = ty_fun(parts[i], res);
      return res;
    }
    if (head.kind != Tok::Name)
      throw ParseError(head.span, "expected a type constructor");
    auto it = set_.sig.type_ctors.find(head.text);
    if (it == set_.sig.type_ctors.end())
      throw ParseError(head.span, "unknown type constructor: " + head.text);
    std::vector<TypePtr> args;
    while (lex_.peek().kind != Tok::RParen)
      args.push_back(parse_type(bound, clause_tvs));
    Token rp = lex_.next();
    if (static_cast<int>(args.size()) != it->second)
      throw ParseError(rp.span, "type constructor " + head.text + " expects " +
                                    std::to_string(it->second) + " arguments");
    return ty_ctor(head.text, std::move(args));
  }

  TypePtr atom_type(const Token& t, const std::vector<std::string>* bound,
                    std::vector<std::string>* clause_tvs) {
    if (bound &&
        std::find(bound->begin(), bound->end(), t.text) != bound->end())
      return ty_var(t.text);
    auto it = set_.sig.type_ctors.find(t.text);
    if (it != set_.sig.type_ctors.end()) {
      if (it->second != 0)
        throw ParseError(t.span, "type constructor " + t.text +
                                     " expects arguments");
      return ty_ctor(t.text);
    }
    if (clause_tvs) {
      // In clause context an undeclared type name is a clause type variable.
      if (std::find(clause_tvs->begin(), clause_tvs->end(), t.text) ==
          clause_tvs->end())
        clause_tvs->push_back(t.text);
      return ty_var(t.text);
    }
    throw ParseError(t.span, "unknown identifier: " + t.text);
  }

  void parse_clause() {
    expect(Tok::LParen, "'('");
    Token kw = lex_.next();
    if (kw.text != "vars") throw ParseError(kw.span, "expected 'vars'");
    std::vector<std::pair<std::string, TypePtr>> vars;
    std::vector<std::string> clause_tvs;
    while (lex_.peek().kind != Tok::RParen) {
      expect(Tok::LParen, "'('");
      Token v = expect_name();
      TypePtr ty = parse_type(nullptr, &clause_tvs);
      expect(Tok::RParen, "')'");
      for (auto& [n, t2] : vars)
        if (n == v.text)
          throw ParseError(v.span, "duplicate clause variable: " + v.text);
      vars.emplace_back(v.text, std::move(ty));
    }
    lex_.next();

    Clause c;
    std::vector<std::pair<std::string, TypePtr>> binders;  // lambda stack
    while (lex_.peek().kind != Tok::RParen) {
      expect(Tok::LParen, "'('");
      Token lkw = lex_.next();
      if (lkw.text == "eq" || lkw.text == "neq") {
        TermPtr l = parse_term(vars, clause_tvs, binders);
        Token before = lex_.peek();
        TermPtr r = parse_term(vars, clause_tvs, binders);
        if (!type_equal(l->ty, r->ty))
          throw ParseError(before.span, "equation sides have different types");
        c.lits.push_back(mk_literal(set_.sig, lkw.text == "eq", l, r));
      } else if (lkw.text == "pos" || lkw.text == "neg") {
        Token at = lex_.peek();
        TermPtr t = parse_term(vars, clause_tvs, binders);
        if (!is_bool(t->ty))
          throw ParseError(at.span, "pos/neg literal must have type o");
        c.lits.push_back(mk_pred_literal(set_.sig, lkw.text == "pos", t));
      } else {
        throw ParseError(lkw.span, "expected 'eq', 'neq', 'pos', or 'neg'");
      }
      expect(Tok::RParen, "')'");
    }
    lex_.next();
    set_.clauses.push_back(std::move(c));
  }

  TermPtr parse_term(const std::vector<std::pair<std::string, TypePtr>>& vars,
                     std::vector<std::string>& clause_tvs,
                     std::vector<std::pair<std::string, TypePtr>>& binders) {
    Token t = lex_.next();
    if (t.kind == Tok::Name || t.kind == Tok::Nat)
      return atom_term(t, vars, binders);
    if (t.kind != Tok::LParen) throw ParseError(t.span, "expected a term");
    Token head = lex_.next();
    if (head.text == "inst") {
      Token name = lex_.next();
      if (name.kind != Tok::Name)
        throw ParseError(name.span, "expected a symbol");
      if (!set_.sig.has_symbol(name.text))
        throw ParseError(name.span, "unknown identifier: " + name.text);
      std::vector<TypePtr> tys;
      while (lex_.peek().kind != Tok::RParen)
        tys.push_back(parse_type(nullptr, &clause_tvs));
      Token rp = lex_.next();
      const auto& sch = set_.sig.scheme(name.text);
      if (sch.vars.size() != tys.size())
        throw ParseError(rp.span, "symbol " + name.text + " expects " +
                                      std::to_string(sch.vars.size()) +
                                      " type arguments");
      return mk_sym(set_.sig, name.text, std::move(tys));
    }
    if (head.text == "app") {
      Token at = lex_.peek();
      TermPtr f = parse_term(vars, clause_tvs, binders);
      bool any = false;
      while (lex_.peek().kind != Tok::RParen) {
        Token argt = lex_.peek();
        TermPtr a = parse_term(vars, clause_tvs, binders);
        try {
          f = mk_app(std::move(f), std::move(a));
        } catch (const std::invalid_argument& e) {
          throw ParseError(argt.span, e.what());
        }
        any = true;
      }
      lex_.next();
      if (!any) throw ParseError(at.span, "'app' needs arguments");
      return f;
    }
    if (head.text == "lam") {
      expect(Tok::LParen, "'('");
      Token v = expect_name();
      TypePtr ty = parse_type(nullptr, &clause_tvs);
      expect(Tok::RParen, "')'");
      binders.emplace_back(v.text, ty);
      TermPtr body = parse_term(vars, clause_tvs, binders);
      binders.pop_back();
      expect(Tok::RParen, "')'");
      return mk_lam(ty, body);
    }
    throw ParseError(head.span, "expected 'inst', 'app', or 'lam'");
  }

  TermPtr atom_term(const Token& t,
                    const std::vector<std::pair<std::string, TypePtr>>& vars,
                    const std::vector<std::pair<std::string, TypePtr>>& binders) {
    // Innermost lambda binder wins.
    for (size_t i = binders.size(); i-- > 0;) {
      if (binders[i].first == t.text)
        return mk_bound(static_cast<int>(binders.size() - 1 - i),
                        binders[i].second);
    }
    for (auto& [n, ty] : vars)
      if (n == t.text) return mk_free(n, ty);
    if (!set_.sig.has_symbol(t.text))
      throw ParseError(t.span, "unknown identifier: " + t.text);
    const auto& sch = set_.sig.scheme(t.text);
    if (!sch.vars.empty())
      throw ParseError(t.span, "missing type arguments for " + t.text +
                                   " (use inst)");
    return mk_sym(set_.sig, t.text);
  }

  Lexer lex_;
  ClauseSet set_;
};

std::string print_type(const TypePtr& t) {
  if (t->is_var || t->args.empty()) return t->name;
  if (is_fun(t)) {
    std::string s = "(->";
    TypePtr cur = t;
    while (is_fun(cur)) {
      s += " " + print_type(cur->args[0]);
      cur = cur->args[1];
    }
    return s + " " + print_type(cur) + ")";
  }
  std::string s = "(" + t->name;
  for (auto& a : t->args) s += " " + print_type(a);
  return s + ")";
}

void print_term(const TermPtr& t, int depth, std::string& out) {
  switch (t->kind) {
    case TermKind::FreeVar:
      out += t->name;
      return;
    case TermKind::Bound:
      out += "x" + std::to_string(depth - 1 - t->index);
      return;
    case TermKind::Sym:
      if (t->ty_args.empty()) {
        out += t->name;
      } else {
        out += "(inst " + t->name;
        for (auto& ta : t->ty_args) out += " " + print_type(ta);
        out += ")";
      }
      return;
    case TermKind::App: {
      out += "(app ";
      std::vector<TermPtr> args = spine_args(t);
      print_term(spine_head(t), depth, out);
      for (auto& a : args) {
        out += " ";
        print_term(a, depth, out);
      }
      out += ")";
      return;
    }
    case TermKind::Lam:
      out += "(lam (x" + std::to_string(depth) + " " + print_type(t->binder) +
             ") ";
      print_term(t->f, depth + 1, out);
      out += ")";
      return;
  }
}

void print_literal(const Literal& l, std::string& out) {
  TermPtr atom;
  if (is_sym(l.rhs, "true") && is_bool(l.lhs->ty))
    atom = l.lhs;
  else if (is_sym(l.lhs, "true") && is_bool(l.rhs->ty))
    atom = l.rhs;
  if (atom) {
    out += l.positive ? "(pos " : "(neg ";
    print_term(atom, 0, out);
    out += ")";
    return;
  }
  out += l.positive ? "(eq " : "(neq ";
  print_term(l.lhs, 0, out);
  out += " ";
  print_term(l.rhs, 0, out);
  out += ")";
}

}  // namespace

ClauseSet parse_problem(const std::string& text) { return Parser(text).run(); }

std::string print_problem(const ClauseSet& set) {
  std::string out;
  for (auto& n : set.sig.type_decl_order)
    out += "(type " + n + " " + std::to_string(set.sig.type_ctors.at(n)) +
           ")\n";
  for (auto& n : set.sig.decl_order) {
    const TypeScheme& sch = set.sig.symbols.at(n);
    out += "(sym " + n + " ";
    if (sch.vars.empty()) {
      out += print_type(sch.body);
    } else {
      out += "(pi (";
      for (size_t i = 0; i < sch.vars.size(); ++i)
        out += (i ? " " : "") + sch.vars[i];
      out += ") " + print_type(sch.body) + ")";
    }
    out += ")\n";
  }
  for (auto& c0 : set.clauses) {
    Clause c = canonicalize_clause_vars(c0);
    out += "(clause (vars";
    for (auto& [n, ty] : clause_free_vars(c))
      out += " (" + n + " " + print_type(ty) + ")";
    out += ")";
    for (auto& l : c.lits) {
      out += " ";
      print_literal(l, out);
    }
    out += ")\n";
  }
  return out;
}

}  // namespace hoprep
