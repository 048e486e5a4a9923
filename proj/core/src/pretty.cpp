#include "stella/pretty.hpp"

#include <sstream>

namespace stella {

namespace {

// Type precedence: 0 = fn/forall/rec (greedy tail), 1 = sum, 2 = atom.
void print_type(std::ostream& os, const TypePtr& t, int level);

void print_type_atom_child(std::ostream& os, const TypePtr& t) {
  print_type(os, t, 2);
}

void print_type(std::ostream& os, const TypePtr& t, int level) {
  auto paren = [&](int own, auto&& body) {
    bool wrap = own < level;
    if (wrap) os << '(';
    body();
    if (wrap) os << ')';
  };
  switch (t->kind) {
    case TypeKind::Bool: os << "Bool"; break;
    case TypeKind::Nat: os << "Nat"; break;
    case TypeKind::Unit: os << "Unit"; break;
    case TypeKind::Top: os << "Top"; break;
    case TypeKind::Bot: os << "Bot"; break;
    case TypeKind::Meta: os << "auto"; break;
    case TypeKind::Var:
    case TypeKind::Alias:
      os << t->name;
      break;
    case TypeKind::Fn:
      paren(0, [&] {
        os << "fn(";
        for (std::size_t i = 0; i < t->params.size(); ++i) {
          if (i) os << ", ";
          print_type(os, t->params[i], 0);
        }
        os << ") -> ";
        print_type(os, t->inner, 0);
      });
      break;
    case TypeKind::Forall:
      paren(0, [&] {
        os << "forall ";
        for (std::size_t i = 0; i < t->binders.size(); ++i) {
          if (i) os << ", ";
          os << t->binders[i];
        }
        os << ". ";
        print_type(os, t->inner, 0);
      });
      break;
    case TypeKind::Mu:
      paren(0, [&] {
        os << "rec " << t->name << ". ";
        print_type(os, t->inner, 0);
      });
      break;
    case TypeKind::Sum:
      paren(1, [&] {
        print_type(os, t->params[0], 2);
        os << " + ";
        print_type(os, t->params[1], 1);
      });
      break;
    case TypeKind::Tuple:
      os << '{';
      for (std::size_t i = 0; i < t->params.size(); ++i) {
        if (i) os << ", ";
        print_type(os, t->params[i], 0);
      }
      os << '}';
      break;
    case TypeKind::Record:
      os << '{';
      for (std::size_t i = 0; i < t->fields.size(); ++i) {
        if (i) os << ", ";
        os << t->fields[i].label << " : ";
        print_type(os, t->fields[i].type, 0);
      }
      os << '}';
      break;
    case TypeKind::Variant:
      os << "<|";
      for (std::size_t i = 0; i < t->fields.size(); ++i) {
        if (i) os << ",";
        os << ' ' << t->fields[i].label << " : ";
        print_type(os, t->fields[i].type, 0);
      }
      os << " |>";
      break;
    case TypeKind::List:
      os << '[';
      print_type(os, t->inner, 0);
      os << ']';
      break;
    case TypeKind::Ref:
      os << '&';
      print_type_atom_child(os, t->inner);
      break;
  }
}

void print_pattern(std::ostream& os, const PatternPtr& p) {
  switch (p->kind) {
    case PatternKind::Var: os << p->name; break;
    case PatternKind::Wildcard: os << '_'; break;
    case PatternKind::True: os << "true"; break;
    case PatternKind::False: os << "false"; break;
    case PatternKind::Zero: os << '0'; break;
    case PatternKind::Unit: os << "unit"; break;
    case PatternKind::Int: os << p->value; break;
    case PatternKind::Succ:
      os << "succ(";
      print_pattern(os, p->args[0]);
      os << ')';
      break;
    case PatternKind::Inl:
      os << "inl(";
      print_pattern(os, p->args[0]);
      os << ')';
      break;
    case PatternKind::Inr:
      os << "inr(";
      print_pattern(os, p->args[0]);
      os << ')';
      break;
    case PatternKind::Cons:
      os << "cons(";
      print_pattern(os, p->args[0]);
      os << ", ";
      print_pattern(os, p->args[1]);
      os << ')';
      break;
    case PatternKind::Variant:
      os << "<| " << p->name << " = ";
      print_pattern(os, p->args[0]);
      os << " |>";
      break;
    case PatternKind::Tuple:
      os << '{';
      for (std::size_t i = 0; i < p->args.size(); ++i) {
        if (i) os << ", ";
        print_pattern(os, p->args[i]);
      }
      os << '}';
      break;
    case PatternKind::Record:
      os << '{';
      for (std::size_t i = 0; i < p->fields.size(); ++i) {
        if (i) os << ", ";
        os << p->fields[i].label << " = ";
        print_pattern(os, p->fields[i].pat);
      }
      os << '}';
      break;
    case PatternKind::List:
      os << '[';
      for (std::size_t i = 0; i < p->args.size(); ++i) {
        if (i) os << ", ";
        print_pattern(os, p->args[i]);
      }
      os << ']';
      break;
    case PatternKind::Ascription: {
      bool wrap = p->args[0]->kind == PatternKind::Ascription;
      if (wrap) os << '(';
      print_pattern(os, p->args[0]);
      if (wrap) os << ')';
      os << " as ";
      print_type(os, p->type, 0);
      break;
    }
  }
}

// Expression precedence levels, loosest to tightest:
// 0 seq, 1 assign, 2 ascription/cast, 3 deref, 4 postfix, 5 primary.
// If/Let/LetRec have a greedy tail and print at level 0.
void print_expr(std::ostream& os, const ExprPtr& e, int level);

void print_call(std::ostream& os, const char* name, const ExprPtr& e) {
  os << name << '(';
  for (std::size_t i = 0; i < e->args.size(); ++i) {
    if (i) os << ", ";
    print_expr(os, e->args[i], 0);
  }
  os << ')';
}

void print_fn_body(std::ostream& os, const ExprPtr& body) {
  os << "{ return ";
  print_expr(os, body, 0);
  os << " }";
}

void print_expr(std::ostream& os, const ExprPtr& e, int level) {
  auto paren = [&](int own, auto&& body) {
    bool wrap = own < level;
    if (wrap) os << '(';
    body();
    if (wrap) os << ')';
  };
  switch (e->kind) {
    case ExprKind::Var: os << e->name; break;
    case ExprKind::True: os << "true"; break;
    case ExprKind::False: os << "false"; break;
    case ExprKind::Zero: os << '0'; break;
    case ExprKind::NatLit: os << e->nat; break;
    case ExprKind::Unit: os << "unit"; break;
    case ExprKind::Panic: os << "panic!"; break;
    case ExprKind::Succ: print_call(os, "succ", e); break;
    case ExprKind::Inl: print_call(os, "inl", e); break;
    case ExprKind::Inr: print_call(os, "inr", e); break;
    case ExprKind::ConsList: print_call(os, "cons", e); break;
    case ExprKind::NewRef: print_call(os, "new", e); break;
    case ExprKind::Throw: print_call(os, "throw", e); break;
    case ExprKind::Fix: print_call(os, "fix", e); break;
    case ExprKind::NatIsZero: print_call(os, "Nat::iszero", e); break;
    case ExprKind::NatPred: print_call(os, "Nat::pred", e); break;
    case ExprKind::NatRec: print_call(os, "Nat::rec", e); break;
    case ExprKind::ListHead: print_call(os, "List::head", e); break;
    case ExprKind::ListTail: print_call(os, "List::tail", e); break;
    case ExprKind::ListIsEmpty: print_call(os, "List::isempty", e); break;
    case ExprKind::Sequence:
      paren(0, [&] {
        print_expr(os, e->args[0], 1);
        os << "; ";
        print_expr(os, e->args[1], 0);
      });
      break;
    case ExprKind::Assign:
      paren(1, [&] {
        print_expr(os, e->args[0], 2);
        os << " := ";
        print_expr(os, e->args[1], 1);
      });
      break;
    case ExprKind::Ascription:
      paren(2, [&] {
        print_expr(os, e->args[0], 2);
        os << " as ";
        print_type(os, e->type_args[0], 0);
      });
      break;
    case ExprKind::CastAs:
      paren(2, [&] {
        print_expr(os, e->args[0], 2);
        os << " cast as ";
        print_type(os, e->type_args[0], 0);
      });
      break;
    case ExprKind::Deref:
      paren(3, [&] {
        os << '*';
        print_expr(os, e->args[0], 3);
      });
      break;
    case ExprKind::Application:
      paren(4, [&] {
        print_expr(os, e->args[0], 4);
        os << '(';
        for (std::size_t i = 1; i < e->args.size(); ++i) {
          if (i > 1) os << ", ";
          print_expr(os, e->args[i], 0);
        }
        os << ')';
      });
      break;
    case ExprKind::TypeApplication:
      paren(4, [&] {
        print_expr(os, e->args[0], 4);
        os << '[';
        for (std::size_t i = 0; i < e->type_args.size(); ++i) {
          if (i) os << ", ";
          print_type(os, e->type_args[i], 0);
        }
        os << ']';
      });
      break;
    case ExprKind::TupleProj:
      paren(4, [&] {
        print_expr(os, e->args[0], 4);
        os << '.' << e->index;
      });
      break;
    case ExprKind::RecordProj:
      paren(4, [&] {
        print_expr(os, e->args[0], 4);
        os << '.' << e->name;
      });
      break;
    case ExprKind::If:
      paren(0, [&] {
        os << "if ";
        print_expr(os, e->args[0], 1);
        os << " then ";
        print_expr(os, e->args[1], 1);
        os << " else ";
        print_expr(os, e->args[2], 0);
      });
      break;
    case ExprKind::Let:
      paren(0, [&] {
        os << "let " << e->bindings[0].name << " = ";
        print_expr(os, e->bindings[0].value, 1);
        os << " in ";
        print_expr(os, e->args[0], 0);
      });
      break;
    case ExprKind::LetRec:
      paren(0, [&] {
        os << "letrec " << e->bindings[0].name << " : ";
        print_type(os, e->bindings[0].type, 0);
        os << " = ";
        print_expr(os, e->bindings[0].value, 1);
        os << " in ";
        print_expr(os, e->args[0], 0);
      });
      break;
    case ExprKind::Abstraction:
      os << "fn(";
      for (std::size_t i = 0; i < e->params.size(); ++i) {
        if (i) os << ", ";
        os << e->params[i].name << " : ";
        print_type(os, e->params[i].type, 0);
      }
      os << ") ";
      print_fn_body(os, e->args[0]);
      break;
    case ExprKind::GenericAbstraction:
      os << "generic [";
      for (std::size_t i = 0; i < e->binders.size(); ++i) {
        if (i) os << ", ";
        os << e->binders[i];
      }
      os << "] ";
      print_expr(os, e->args[0], 5);
      break;
    case ExprKind::Tuple:
      os << '{';
      for (std::size_t i = 0; i < e->args.size(); ++i) {
        if (i) os << ", ";
        print_expr(os, e->args[i], 0);
      }
      os << '}';
      break;
    case ExprKind::Record:
      os << '{';
      for (std::size_t i = 0; i < e->fields.size(); ++i) {
        if (i) os << ", ";
        os << e->fields[i].label << " = ";
        print_expr(os, e->fields[i].value, 0);
      }
      os << '}';
      break;
    case ExprKind::Variant:
      os << "<| " << e->name << " = ";
      print_expr(os, e->args[0], 0);
      os << " |>";
      break;
    case ExprKind::ListLit:
      os << '[';
      for (std::size_t i = 0; i < e->args.size(); ++i) {
        if (i) os << ", ";
        print_expr(os, e->args[i], 0);
      }
      os << ']';
      break;
    case ExprKind::Match:
      os << "match ";
      print_expr(os, e->args[0], 1);
      os << " {";
      for (std::size_t i = 0; i < e->cases.size(); ++i) {
        os << (i ? " | " : " ");
        print_pattern(os, e->cases[i].pattern);
        os << " => ";
        print_expr(os, e->cases[i].body, 0);
      }
      os << " }";
      break;
    case ExprKind::TryWith:
      os << "try { ";
      print_expr(os, e->args[0], 0);
      os << " } with { ";
      print_expr(os, e->args[1], 0);
      os << " }";
      break;
    case ExprKind::TryCatch:
      os << "try { ";
      print_expr(os, e->args[0], 0);
      os << " } catch { ";
      print_pattern(os, e->cases[0].pattern);
      os << " => ";
      print_expr(os, e->args[1], 0);
      os << " }";
      break;
    case ExprKind::Fold:
      os << "fold [";
      print_type(os, e->type_args[0], 0);
      os << "] ";
      print_expr(os, e->args[0], 3);
      break;
    case ExprKind::Unfold:
      os << "unfold [";
      print_type(os, e->type_args[0], 0);
      os << "] ";
      print_expr(os, e->args[0], 3);
      break;
  }
}

void print_decl(std::ostream& os, const DeclPtr& d, int indent) {
  std::string pad(indent, ' ');
  switch (d->kind) {
    case DeclKind::TypeAlias:
      os << pad << "type " << d->name << " = ";
      print_type(os, d->type, 0);
      os << "\n";
      break;
    case DeclKind::ExceptionType:
      os << pad << "exception type = ";
      print_type(os, d->type, 0);
      os << "\n";
      break;
    case DeclKind::ExceptionVariant:
      os << pad << "exception variant " << d->name << " : ";
      print_type(os, d->type, 0);
      os << "\n";
      break;
    case DeclKind::Function: {
      os << pad;
      if (!d->generic_binders.empty()) {
        os << "generic ";
      }
      os << "fn " << d->name;
      if (!d->generic_binders.empty()) {
        os << '[';
        for (std::size_t i = 0; i < d->generic_binders.size(); ++i) {
          if (i) os << ", ";
          os << d->generic_binders[i];
        }
        os << ']';
      }
      os << '(';
      for (std::size_t i = 0; i < d->params.size(); ++i) {
        if (i) os << ", ";
        os << d->params[i].name << " : ";
        print_type(os, d->params[i].type, 0);
      }
      os << ") -> ";
      print_type(os, d->type, 0);
      os << " {\n";
      for (const auto& nested : d->nested) {
        print_decl(os, nested, indent + 2);
      }
      os << pad << "  return ";
      print_expr(os, d->body, 0);
      os << "\n" << pad << "}\n";
      break;
    }
  }
}

}  // namespace

std::string pretty_print(const Program& p) {
  std::ostringstream os;
  os << "language " << p.language << ";\n";
  if (!p.extensions.empty()) {
    os << "\nextend with ";
    for (std::size_t i = 0; i < p.extensions.size(); ++i) {
      if (i) os << ", ";
      os << p.extensions[i];
    }
    os << ";\n";
  }
  for (const auto& d : p.decls) {
    os << "\n";
    print_decl(os, d, 0);
  }
  return os.str();
}

std::string type_to_string(const TypePtr& t) {
  std::ostringstream os;
  print_type(os, t, 0);
  return os.str();
}

std::string expr_to_string(const ExprPtr& e) {
  std::ostringstream os;
  print_expr(os, e, 0);
  return os.str();
}

std::string pattern_to_string(const PatternPtr& p) {
  std::ostringstream os;
  print_pattern(os, p);
  return os.str();
}

}  // namespace stella
