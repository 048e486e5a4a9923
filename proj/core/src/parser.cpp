#include "stella/parser.hpp"

#include <algorithm>
#include <cstdlib>

#include "stella/lexer.hpp"

namespace stella {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& source) : tokens_(tokenize(source)) {}

  Program program() {
    Program p;
    expect_keyword("language");
    Token lang = expect(TokenKind::Identifier, "language name");
    if (lang.text != "core") {
      error(lang.span, "unknown language '" + lang.text + "' (expected core)",
            {"core"});
    }
    p.language = lang.text;
    expect_punct(";");
    while (at_keyword("extend")) {
      next();
      expect_keyword("with");
      for (;;) {
        Token ext = expect(TokenKind::ExtensionName, "extension name");
        if (std::find(p.extensions.begin(), p.extensions.end(), ext.text) ==
            p.extensions.end()) {
          p.extensions.push_back(ext.text);
        }
        if (at_punct(",")) {
          next();
          continue;
        }
        break;
      }
      expect_punct(";");
    }
    while (peek().kind != TokenKind::EndOfInput) {
      p.decls.push_back(decl());
    }
    return p;
  }

  ExprPtr expression_only() {
    ExprPtr e = expr();
    expect_end();
    return e;
  }

  TypePtr type_only() {
    TypePtr t = type();
    expect_end();
    return t;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::int64_t next_meta_ = 1;

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  Token next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

  [[noreturn]] void error(Span span, std::string message,
                          std::vector<std::string> expected = {}) {
    throw ParseException({std::move(message), span, std::move(expected)});
  }

  bool at_keyword(const std::string& kw) const {
    return peek().kind == TokenKind::Keyword && peek().text == kw;
  }
  bool at_punct(const std::string& tx) const {
    return peek().kind == TokenKind::Punctuation && peek().text == tx;
  }
  bool at_ident(const std::string& tx) const {
    return peek().kind == TokenKind::Identifier && peek().text == tx;
  }

  Token expect(TokenKind kind, const std::string& what) {
    if (peek().kind != kind) {
      error(peek().span, "expected " + what + ", found '" + peek().text + "'",
            {what});
    }
    return next();
  }
  void expect_keyword(const std::string& kw) {
    if (!at_keyword(kw)) {
      error(peek().span, "expected '" + kw + "', found '" + peek().text + "'",
            {kw});
    }
    next();
  }
  void expect_punct(const std::string& tx) {
    if (!at_punct(tx)) {
      error(peek().span, "expected '" + tx + "', found '" + peek().text + "'",
            {tx});
    }
    next();
  }
  void expect_end() {
    if (peek().kind != TokenKind::EndOfInput) {
      error(peek().span, "unexpected '" + peek().text + "' after expression");
    }
  }

  Span span_from(const Span& start) const {
    Span s = start;
    const Span& prev = tokens_[pos_ ? pos_ - 1 : 0].span;
    s.end_line = prev.end_line;
    s.end_col = prev.end_col;
    return s;
  }

  // -- declarations --------------------------------------------------------

  DeclPtr decl() {
    Span start = peek().span;
    if (at_keyword("type")) {
      next();
      Token name = expect(TokenKind::Identifier, "type alias name");
      expect_punct("=");
      auto d = std::make_shared<Decl>();
      d->kind = DeclKind::TypeAlias;
      d->name = name.text;
      d->type = type();
      d->span = span_from(start);
      return d;
    }
    if (at_keyword("exception")) {
      next();
      auto d = std::make_shared<Decl>();
      if (at_keyword("type")) {
        next();
        expect_punct("=");
        d->kind = DeclKind::ExceptionType;
        d->type = type();
      } else if (at_keyword("variant")) {
        next();
        Token label = expect(TokenKind::Identifier, "exception variant label");
        expect_punct(":");
        d->kind = DeclKind::ExceptionVariant;
        d->name = label.text;
        d->type = type();
      } else {
        error(peek().span, "expected 'type' or 'variant' after 'exception'",
              {"type", "variant"});
      }
      d->span = span_from(start);
      return d;
    }
    if (at_keyword("generic") || at_keyword("fn")) {
      return fn_decl();
    }
    error(peek().span, "expected a declaration, found '" + peek().text + "'",
          {"fn", "generic", "type", "exception"});
  }

  DeclPtr fn_decl() {
    Span start = peek().span;
    auto d = std::make_shared<Decl>();
    d->kind = DeclKind::Function;
    if (at_keyword("generic")) {
      next();
      expect_keyword("fn");
      Token name = expect(TokenKind::Identifier, "function name");
      d->name = name.text;
      expect_punct("[");
      d->generic_binders = binder_list();
      expect_punct("]");
    } else {
      expect_keyword("fn");
      Token name = expect(TokenKind::Identifier, "function name");
      d->name = name.text;
    }
    expect_punct("(");
    d->params = param_list();
    expect_punct(")");
    expect_punct("->");
    d->type = type();
    expect_punct("{");
    while (at_keyword("fn") || at_keyword("generic")) {
      d->nested.push_back(fn_decl());
    }
    expect_keyword("return");
    d->body = expr();
    if (at_punct(";")) next();
    expect_punct("}");
    d->span = span_from(start);
    return d;
  }

  std::vector<std::string> binder_list() {
    std::vector<std::string> names;
    for (;;) {
      Token t = expect(TokenKind::Identifier, "type variable");
      names.push_back(t.text);
      if (at_punct(",")) {
        next();
        continue;
      }
      break;
    }
    return names;
  }

  std::vector<Param> param_list() {
    std::vector<Param> params;
    if (at_punct(")")) return params;
    for (;;) {
      Token name = expect(TokenKind::Identifier, "parameter name");
      expect_punct(":");
      params.push_back({name.text, type()});
      if (at_punct(",")) {
        next();
        continue;
      }
      break;
    }
    return params;
  }

  // -- types ---------------------------------------------------------------

  TypePtr type() {
    if (at_keyword("forall")) {
      next();
      std::vector<std::string> binders = binder_list();
      expect_punct(".");
      return ty::forall(std::move(binders), type());
    }
    if (at_keyword("rec")) {
      next();
      Token binder = expect(TokenKind::Identifier, "type variable");
      expect_punct(".");
      return ty::mu(binder.text, type());
    }
    if (at_keyword("fn")) {
      next();
      expect_punct("(");
      std::vector<TypePtr> params;
      if (!at_punct(")")) {
        for (;;) {
          params.push_back(type());
          if (at_punct(",")) {
            next();
            continue;
          }
          break;
        }
      }
      expect_punct(")");
      expect_punct("->");
      return ty::fn(std::move(params), type());
    }
    return type_sum();
  }

  TypePtr type_sum() {
    TypePtr left = type_atom();
    if (at_punct("+")) {
      next();
      return ty::sum(std::move(left), type_sum());
    }
    return left;
  }

  TypePtr type_atom() {
    const Token& t = peek();
    if (t.kind == TokenKind::Identifier) {
      next();
      if (t.text == "Bool") return ty::boolean();
      if (t.text == "Nat") return ty::nat();
      if (t.text == "Unit") return ty::unit();
      if (t.text == "Top") return ty::top();
      if (t.text == "Bot") return ty::bot();
      return ty::var(t.text);
    }
    if (at_keyword("auto")) {
      next();
      return ty::meta(next_meta_++);
    }
    if (at_punct("(")) {
      next();
      TypePtr inner = type();
      expect_punct(")");
      return inner;
    }
    if (at_punct("&")) {
      next();
      return ty::ref(type_atom());
    }
    if (at_punct("[")) {
      next();
      TypePtr elem = type();
      expect_punct("]");
      return ty::list(std::move(elem));
    }
    if (at_punct("<|")) {
      next();
      std::vector<TypeField> fields;
      if (!at_punct("|>")) {
        for (;;) {
          Token label = expect(TokenKind::Identifier, "variant label");
          expect_punct(":");
          fields.push_back({label.text, type()});
          if (at_punct(",")) {
            next();
            continue;
          }
          break;
        }
      }
      expect_punct("|>");
      return ty::variant(std::move(fields));
    }
    if (at_punct("{")) {
      next();
      // record when the first item is `label : ...`
      if (peek().kind == TokenKind::Identifier && peek(1).kind ==
              TokenKind::Punctuation && peek(1).text == ":") {
        std::vector<TypeField> fields;
        for (;;) {
          Token label = expect(TokenKind::Identifier, "record label");
          expect_punct(":");
          fields.push_back({label.text, type()});
          if (at_punct(",")) {
            next();
            continue;
          }
          break;
        }
        expect_punct("}");
        return ty::record(std::move(fields));
      }
      std::vector<TypePtr> components;
      if (!at_punct("}")) {
        for (;;) {
          components.push_back(type());
          if (at_punct(",")) {
            next();
            continue;
          }
          break;
        }
      }
      expect_punct("}");
      return ty::tuple(std::move(components));
    }
    error(t.span, "expected a type, found '" + t.text + "'", {"type"});
  }

  // -- patterns ------------------------------------------------------------

  PatternPtr pattern() {
    PatternPtr p = pattern_prim();
    while (at_keyword("as")) {
      Span start = p->span;
      next();
      p = pat::ascription(std::move(p), type(), span_from(start));
    }
    return p;
  }

  PatternPtr pattern_prim() {
    Span start = peek().span;
    const Token& t = peek();
    if (t.kind == TokenKind::Identifier) {
      next();
      if (t.text == "_") return pat::wildcard(span_from(start));
      return pat::var(t.text, span_from(start));
    }
    if (t.kind == TokenKind::Integer) {
      next();
      std::uint64_t v = std::strtoull(t.text.c_str(), nullptr, 10);
      if (v == 0) return pat::zero(span_from(start));
      return pat::intlit(v, span_from(start));
    }
    if (at_keyword("true")) {
      next();
      return pat::ptrue(span_from(start));
    }
    if (at_keyword("false")) {
      next();
      return pat::pfalse(span_from(start));
    }
    if (at_keyword("unit")) {
      next();
      return pat::punit(span_from(start));
    }
    auto unary = [&](auto&& make) {
      next();
      expect_punct("(");
      PatternPtr child = pattern();
      expect_punct(")");
      return make(std::move(child), span_from(start));
    };
    if (at_keyword("succ")) {
      return unary([](PatternPtr c, Span s) { return pat::succ(std::move(c), s); });
    }
    if (at_keyword("inl")) {
      return unary([](PatternPtr c, Span s) { return pat::inl(std::move(c), s); });
    }
    if (at_keyword("inr")) {
      return unary([](PatternPtr c, Span s) { return pat::inr(std::move(c), s); });
    }
    if (at_keyword("cons")) {
      next();
      expect_punct("(");
      PatternPtr head = pattern();
      expect_punct(",");
      PatternPtr tail = pattern();
      expect_punct(")");
      return pat::cons(std::move(head), std::move(tail), span_from(start));
    }
    if (at_punct("<|")) {
      next();
      Token label = expect(TokenKind::Identifier, "variant label");
      expect_punct("=");
      PatternPtr child = pattern();
      expect_punct("|>");
      return pat::variant(label.text, std::move(child), span_from(start));
    }
    if (at_punct("[")) {
      next();
      std::vector<PatternPtr> elems;
      if (!at_punct("]")) {
        for (;;) {
          elems.push_back(pattern());
          if (at_punct(",")) {
            next();
            continue;
          }
          break;
        }
      }
      expect_punct("]");
      return pat::list(std::move(elems), span_from(start));
    }
    if (at_punct("{")) {
      next();
      if (peek().kind == TokenKind::Identifier && peek(1).kind ==
              TokenKind::Punctuation && peek(1).text == "=") {
        std::vector<PatternField> fields;
        for (;;) {
          Token label = expect(TokenKind::Identifier, "record label");
          expect_punct("=");
          fields.push_back({label.text, pattern()});
          if (at_punct(",")) {
            next();
            continue;
          }
          break;
        }
        expect_punct("}");
        return pat::record(std::move(fields), span_from(start));
      }
      std::vector<PatternPtr> elems;
      if (!at_punct("}")) {
        for (;;) {
          elems.push_back(pattern());
          if (at_punct(",")) {
            next();
            continue;
          }
          break;
        }
      }
      expect_punct("}");
      return pat::tuple(std::move(elems), span_from(start));
    }
    if (at_punct("(")) {
      next();
      PatternPtr p = pattern();
      expect_punct(")");
      return p;
    }
    error(t.span, "expected a pattern, found '" + t.text + "'", {"pattern"});
  }

  // -- expressions ---------------------------------------------------------
  // Levels: seq > assign > ascription > deref > postfix > primary.

  ExprPtr expr() { return expr_seq(); }

  ExprPtr expr_seq() {
    Span start = peek().span;
    ExprPtr left = expr_assign();
    if (at_punct(";")) {
      // trailing ';' before '}' is allowed and means nothing
      if (peek(1).kind == TokenKind::Punctuation && peek(1).text == "}") {
        return left;
      }
      next();
      ExprPtr right = expr_seq();
      return ex::sequence(std::move(left), std::move(right), span_from(start));
    }
    return left;
  }

  ExprPtr expr_assign() {
    Span start = peek().span;
    ExprPtr left = expr_asc();
    if (at_punct(":=")) {
      next();
      ExprPtr right = expr_assign();
      return ex::assign(std::move(left), std::move(right), span_from(start));
    }
    return left;
  }

  ExprPtr expr_asc() {
    Span start = peek().span;
    ExprPtr e = expr_deref();
    for (;;) {
      if (at_keyword("as")) {
        next();
        e = ex::ascription(std::move(e), type(), span_from(start));
        continue;
      }
      if (at_keyword("cast")) {
        next();
        expect_keyword("as");
        e = ex::cast_as(std::move(e), type(), span_from(start));
        continue;
      }
      break;
    }
    return e;
  }

  ExprPtr expr_deref() {
    if (at_punct("*")) {
      Span start = peek().span;
      next();
      return ex::deref(expr_deref(), span_from(start));
    }
    return expr_postfix();
  }

  ExprPtr expr_postfix() {
    Span start = peek().span;
    ExprPtr e = expr_primary();
    for (;;) {
      if (at_punct("(")) {
        next();
        std::vector<ExprPtr> args;
        if (!at_punct(")")) {
          for (;;) {
            args.push_back(expr());
            if (at_punct(",")) {
              next();
              continue;
            }
            break;
          }
        }
        expect_punct(")");
        e = ex::application(std::move(e), std::move(args), span_from(start));
        continue;
      }
      if (at_punct("[")) {
        next();
        std::vector<TypePtr> targs;
        for (;;) {
          targs.push_back(type());
          if (at_punct(",")) {
            next();
            continue;
          }
          break;
        }
        expect_punct("]");
        e = ex::type_application(std::move(e), std::move(targs),
                                 span_from(start));
        continue;
      }
      if (at_punct(".")) {
        next();
        if (peek().kind == TokenKind::Integer) {
          Token idx = next();
          e = ex::tuple_proj(std::move(e),
                             std::strtoull(idx.text.c_str(), nullptr, 10),
                             span_from(start));
        } else {
          Token label = expect(TokenKind::Identifier, "field label");
          e = ex::record_proj(std::move(e), label.text, span_from(start));
        }
        continue;
      }
      break;
    }
    return e;
  }

  void call_args(std::size_t min_args, std::size_t max_args,
                 std::vector<ExprPtr>& out) {
    expect_punct("(");
    if (!at_punct(")")) {
      for (;;) {
        out.push_back(expr());
        if (at_punct(",")) {
          next();
          continue;
        }
        break;
      }
    }
    Token close = peek();
    expect_punct(")");
    if (out.size() < min_args || out.size() > max_args) {
      error(close.span, "wrong number of arguments for builtin form");
    }
  }

  ExprPtr fn_abstraction(Span start) {
    expect_keyword("fn");
    expect_punct("(");
    std::vector<Param> params = param_list();
    expect_punct(")");
    expect_punct("{");
    expect_keyword("return");
    ExprPtr body = expr();
    if (at_punct(";")) next();
    expect_punct("}");
    return ex::abstraction(std::move(params), std::move(body),
                           span_from(start));
  }

  ExprPtr expr_primary() {
    Span start = peek().span;
    const Token& t = peek();
    if (t.kind == TokenKind::Integer) {
      next();
      std::uint64_t v = std::strtoull(t.text.c_str(), nullptr, 10);
      if (v == 0) return ex::zero(span_from(start));
      return ex::nat_lit(v, span_from(start));
    }
    if (t.kind == TokenKind::Identifier) {
      // Nat::iszero etc.
      if ((t.text == "Nat" || t.text == "List") && peek(1).kind ==
              TokenKind::Punctuation && peek(1).text == "::") {
        std::string ns = t.text;
        next();
        next();
        // `rec` is reserved (recursive types) but also names a builtin
        Token op = peek();
        if (op.kind == TokenKind::Identifier ||
            (op.kind == TokenKind::Keyword && op.text == "rec")) {
          next();
        } else {
          op = expect(TokenKind::Identifier, "builtin name");
        }
        std::vector<ExprPtr> args;
        if (ns == "Nat" && op.text == "iszero") {
          call_args(1, 1, args);
          return ex::nat_iszero(std::move(args[0]), span_from(start));
        }
        if (ns == "Nat" && op.text == "pred") {
          call_args(1, 1, args);
          return ex::nat_pred(std::move(args[0]), span_from(start));
        }
        if (ns == "Nat" && op.text == "rec") {
          call_args(3, 3, args);
          return ex::nat_rec(std::move(args[0]), std::move(args[1]),
                             std::move(args[2]), span_from(start));
        }
        if (ns == "List" && op.text == "head") {
          call_args(1, 1, args);
          return ex::list_head(std::move(args[0]), span_from(start));
        }
        if (ns == "List" && op.text == "tail") {
          call_args(1, 1, args);
          return ex::list_tail(std::move(args[0]), span_from(start));
        }
        if (ns == "List" && op.text == "isempty") {
          call_args(1, 1, args);
          return ex::list_isempty(std::move(args[0]), span_from(start));
        }
        error(op.span, "unknown builtin '" + ns + "::" + op.text + "'");
      }
      next();
      return ex::var(t.text, span_from(start));
    }
    if (at_keyword("true")) {
      next();
      return ex::etrue(span_from(start));
    }
    if (at_keyword("false")) {
      next();
      return ex::efalse(span_from(start));
    }
    if (at_keyword("unit")) {
      next();
      return ex::unit(span_from(start));
    }
    if (at_keyword("panic!")) {
      next();
      return ex::panic(span_from(start));
    }
    auto builtin1 = [&](auto&& make) {
      next();
      std::vector<ExprPtr> args;
      call_args(1, 1, args);
      return make(std::move(args[0]), span_from(start));
    };
    if (at_keyword("succ")) {
      return builtin1([](ExprPtr e, Span s) { return ex::succ(std::move(e), s); });
    }
    if (at_keyword("inl")) {
      return builtin1([](ExprPtr e, Span s) { return ex::inl(std::move(e), s); });
    }
    if (at_keyword("inr")) {
      return builtin1([](ExprPtr e, Span s) { return ex::inr(std::move(e), s); });
    }
    if (at_keyword("new")) {
      return builtin1(
          [](ExprPtr e, Span s) { return ex::new_ref(std::move(e), s); });
    }
    if (at_keyword("throw")) {
      return builtin1(
          [](ExprPtr e, Span s) { return ex::throw_(std::move(e), s); });
    }
    if (at_keyword("fix")) {
      return builtin1([](ExprPtr e, Span s) { return ex::fix(std::move(e), s); });
    }
    if (at_keyword("cons")) {
      next();
      std::vector<ExprPtr> args;
      call_args(2, 2, args);
      return ex::cons(std::move(args[0]), std::move(args[1]),
                      span_from(start));
    }
    if (at_keyword("if")) {
      next();
      ExprPtr c = expr();
      expect_keyword("then");
      ExprPtr th = expr();
      expect_keyword("else");
      ExprPtr el = expr();
      return ex::cond(std::move(c), std::move(th), std::move(el),
                      span_from(start));
    }
    if (at_keyword("match")) {
      next();
      ExprPtr scrutinee = expr();
      expect_punct("{");
      std::vector<MatchCase> cases;
      if (!at_punct("}")) {
        for (;;) {
          PatternPtr p = pattern();
          expect_punct("=>");
          ExprPtr body = expr();
          cases.push_back({std::move(p), std::move(body)});
          if (at_punct("|")) {
            next();
            continue;
          }
          break;
        }
      }
      expect_punct("}");
      return ex::match(std::move(scrutinee), std::move(cases),
                       span_from(start));
    }
    if (at_keyword("let")) {
      next();
      Token name = expect(TokenKind::Identifier, "binding name");
      expect_punct("=");
      ExprPtr value = expr();
      expect_keyword("in");
      ExprPtr body = expr();
      return ex::let({{name.text, nullptr, std::move(value)}},
                     std::move(body), span_from(start));
    }
    if (at_keyword("letrec")) {
      next();
      Token name = expect(TokenKind::Identifier, "binding name");
      expect_punct(":");
      TypePtr ann = type();
      expect_punct("=");
      ExprPtr value = expr();
      expect_keyword("in");
      ExprPtr body = expr();
      return ex::letrec({{name.text, std::move(ann), std::move(value)}},
                        std::move(body), span_from(start));
    }
    if (at_keyword("fn")) {
      return fn_abstraction(start);
    }
    if (at_keyword("generic")) {
      next();
      expect_punct("[");
      std::vector<std::string> binders = binder_list();
      expect_punct("]");
      ExprPtr inner = fn_abstraction(start);
      return ex::generic_abstraction(std::move(binders), std::move(inner),
                                     span_from(start));
    }
    if (at_keyword("try")) {
      next();
      expect_punct("{");
      ExprPtr body = expr();
      expect_punct("}");
      if (at_keyword("with")) {
        next();
        expect_punct("{");
        ExprPtr fallback = expr();
        expect_punct("}");
        return ex::try_with(std::move(body), std::move(fallback),
                            span_from(start));
      }
      expect_keyword("catch");
      expect_punct("{");
      PatternPtr p = pattern();
      expect_punct("=>");
      ExprPtr handler = expr();
      expect_punct("}");
      return ex::try_catch(std::move(body), std::move(p), std::move(handler),
                           span_from(start));
    }
    if (at_keyword("fold") || at_keyword("unfold")) {
      bool is_fold = t.text == "fold";
      next();
      expect_punct("[");
      TypePtr ann = type();
      expect_punct("]");
      ExprPtr operand = expr_deref();
      if (is_fold) {
        return ex::fold(std::move(ann), std::move(operand), span_from(start));
      }
      return ex::unfold(std::move(ann), std::move(operand), span_from(start));
    }
    if (at_punct("<|")) {
      next();
      Token label = expect(TokenKind::Identifier, "variant label");
      expect_punct("=");
      ExprPtr payload = expr();
      expect_punct("|>");
      return ex::variant(label.text, std::move(payload), span_from(start));
    }
    if (at_punct("[")) {
      next();
      std::vector<ExprPtr> elems;
      if (!at_punct("]")) {
        for (;;) {
          elems.push_back(expr());
          if (at_punct(",")) {
            next();
            continue;
          }
          break;
        }
      }
      expect_punct("]");
      return ex::list(std::move(elems), span_from(start));
    }
    if (at_punct("{")) {
      next();
      if (peek().kind == TokenKind::Identifier && peek(1).kind ==
              TokenKind::Punctuation && peek(1).text == "=") {
        std::vector<ExprField> fields;
        for (;;) {
          Token label = expect(TokenKind::Identifier, "record label");
          expect_punct("=");
          fields.push_back({label.text, expr()});
          if (at_punct(",")) {
            next();
            continue;
          }
          break;
        }
        expect_punct("}");
        return ex::record(std::move(fields), span_from(start));
      }
      std::vector<ExprPtr> elems;
      if (!at_punct("}")) {
        for (;;) {
          elems.push_back(expr());
          if (at_punct(",")) {
            next();
            continue;
          }
          break;
        }
      }
      expect_punct("}");
      return ex::tuple(std::move(elems), span_from(start));
    }
    if (at_punct("(")) {
      next();
      ExprPtr e = expr();
      expect_punct(")");
      return e;
    }
    error(t.span, "expected an expression, found '" + t.text + "'",
          {"expression"});
  }
};

}  // namespace

Program parse_program(const std::string& source) {
  Parser p(source);
  return p.program();
}

ExprPtr parse_expr(const std::string& source) {
  Parser p(source);
  return p.expression_only();
}

TypePtr parse_type(const std::string& source) {
  Parser p(source);
  return p.type_only();
}

}  // namespace stella

