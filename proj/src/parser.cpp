#include "houe/parser.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "houe/error.hpp"

namespace houe {

namespace {

enum class Tok {
  Ident,
  Int,
  LParen,
  RParen,
  Comma,
  Dot,
  Colon,
  Tilde,
  Amp,
  Bar,
  Imp,
  Iff,
  Equals,
  Arrow,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$' ||
         c == '\'';
}

std::vector<Token> tokenize(std::string_view text, std::size_t line,
                            std::size_t column) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t l = line;
    const std::size_t col = column;
    auto emit = [&](Tok kind, std::size_t len) {
      out.push_back(Token{kind, std::string(text.substr(i, len)), l, col});
      advance(len);
    };
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && ident_char(text[j])) ++j;
      emit(Tok::Ident, j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      emit(Tok::Int, j - i);
    } else if (text.substr(i, 3) == "<=>") {
      emit(Tok::Iff, 3);
    } else if (text.substr(i, 2) == "=>") {
      emit(Tok::Imp, 2);
    } else if (text.substr(i, 2) == "->") {
      emit(Tok::Arrow, 2);
    } else {
      switch (c) {
        case '(': emit(Tok::LParen, 1); break;
        case ')': emit(Tok::RParen, 1); break;
        case ',': emit(Tok::Comma, 1); break;
        case '.': emit(Tok::Dot, 1); break;
        case ':': emit(Tok::Colon, 1); break;
        case '~': emit(Tok::Tilde, 1); break;
        case '&': emit(Tok::Amp, 1); break;
        case '|': emit(Tok::Bar, 1); break;
        case '=': emit(Tok::Equals, 1); break;
        default:
          throw ParseError(ErrorCode::SyntaxError,
                           std::string("unexpected character '") + c + "'", l,
                           col);
      }
    }
  }
  out.push_back(Token{Tok::End, "", line, column});
  return out;
}

bool is_reserved_name(const std::string& name) {
  return name.empty() || name[0] == '$' || name[0] == '_';
}

bool is_keyword(const std::string& name) {
  return name == "lam" || name == "unique";
}

struct Typed {
  Term term;
  Type type;
};

/// Recursive-descent parser over tokens [pos, end). Precedence, loosest
/// first: binders, <=>, =>, |, &, ~, =, application.
class TermParser {
 public:
  TermParser(const std::vector<Token>& toks, std::size_t begin,
             std::size_t end, const Signature* sig,
             const std::optional<Term>* restrictor)
      : toks_(toks), pos_(begin), end_(end), sig_(sig), restrictor_(restrictor) {}

  Term parse_all() {
    Typed t = parse_iff();
    expect_end();
    return t.term;
  }

  Type parse_type_all() {
    Type t = parse_type();
    expect_end();
    return t;
  }

  Type parse_type() {
    Type dom = parse_type_atom();
    if (peek().kind == Tok::Arrow) {
      next();
      return Type::arrow(dom, parse_type());
    }
    return dom;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t p = pos_ + ahead;
    if (p >= end_) return end_token();
    return toks_[p];
  }

  const Token& end_token() const {
    if (end_ < toks_.size()) {
      static thread_local Token t;
      t = Token{Tok::End, "", toks_[end_].line, toks_[end_].column};
      return t;
    }
    return toks_.back();
  }

  const Token& next() {
    const Token& t = peek();
    if (pos_ < end_) ++pos_;
    return t;
  }

  [[noreturn]] void fail(ErrorCode code, const std::string& msg,
                         const Token& at) const {
    throw ParseError(code, msg, at.line, at.column);
  }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      fail(ErrorCode::SyntaxError,
           std::string("expected ") + what + ", found '" + peek().text + "'",
           peek());
    }
    return next();
  }

  void expect_end() {
    if (peek().kind != Tok::End) {
      fail(ErrorCode::SyntaxError, "unexpected '" + peek().text + "'", peek());
    }
  }

  Type parse_type_atom() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      next();
      Type inner = parse_type();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind == Tok::Ident && t.text == "e") {
      next();
      return Type::ind();
    }
    if (t.kind == Tok::Ident && t.text == "t") {
      next();
      return Type::prop();
    }
    fail(ErrorCode::SyntaxError, "expected a type, found '" + t.text + "'", t);
  }

  void require(const Typed& x, const Type& want, const Token& at) const {
    if (x.type != want) {
      fail(ErrorCode::IllTyped,
           "expected type " + want.str() + ", found " + x.type.str(), at);
    }
  }

  using Builder = Term (*)(Term, Term);

  Typed binary(Typed (TermParser::*lhs_fn)(), Typed (TermParser::*rhs_fn)(),
               Tok op, Builder build) {
    const Token& start = peek();
    Typed l = (this->*lhs_fn)();
    if (peek().kind != op) return l;
    const Token& at = next();
    require(l, Type::prop(), start);
    const Token& rstart = peek();
    Typed r = (this->*rhs_fn)();
    require(r, Type::prop(), rstart);
    (void)at;
    return Typed{build(std::move(l.term), std::move(r.term)), Type::prop()};
  }

  Typed parse_iff() {
    return binary(&TermParser::parse_imp, &TermParser::parse_iff, Tok::Iff,
                  &logic::iff);
  }
  Typed parse_imp() {
    return binary(&TermParser::parse_or, &TermParser::parse_imp, Tok::Imp,
                  &logic::imp);
  }
  Typed parse_or() {
    return binary(&TermParser::parse_and, &TermParser::parse_or, Tok::Bar,
                  &logic::or_);
  }
  Typed parse_and() {
    return binary(&TermParser::parse_unary, &TermParser::parse_and, Tok::Amp,
                  &logic::and_);
  }

  bool at_binder() const {
    const Token& t = peek();
    return t.kind == Tok::Ident &&
           (t.text == "lam" || t.text == "forall" || t.text == "exists") &&
           peek(1).kind == Tok::Ident && peek(2).kind == Tok::Colon;
  }

  Typed parse_unary() {
    if (peek().kind == Tok::Tilde) {
      next();
      const Token& at = peek();
      Typed inner = parse_unary();
      require(inner, Type::prop(), at);
      return Typed{logic::not_(std::move(inner.term)), Type::prop()};
    }
    if (at_binder()) return parse_binder();
    return parse_eq();
  }

  Typed parse_binder() {
    const Token& kw = next();
    const Token& var = next();
    if (is_reserved_name(var.text)) {
      fail(ErrorCode::SyntaxError, "reserved name '" + var.text + "'", var);
    }
    expect(Tok::Colon, "':'");
    Type ty = parse_type();
    expect(Tok::Dot, "'.'");
    scope_.emplace_back(var.text, ty);
    const Token& body_at = peek();
    Typed body = parse_iff();
    scope_.pop_back();
    if (kw.text == "lam") {
      return Typed{Term::lam(var.text, ty, std::move(body.term)),
                   Type::arrow(ty, body.type)};
    }
    if (ty != Type::ind()) {
      fail(ErrorCode::IllTyped, "quantified variables must have type e", var);
    }
    require(body, Type::prop(), body_at);
    Term out = kw.text == "forall"
                   ? logic::forall(var.text, ty, std::move(body.term))
                   : logic::exists(var.text, ty, std::move(body.term));
    return Typed{std::move(out), Type::prop()};
  }

  Typed parse_eq() {
    const Token& start = peek();
    Typed l = parse_app();
    if (peek().kind != Tok::Equals) return l;
    next();
    require(l, Type::ind(), start);
    const Token& rstart = peek();
    Typed r = parse_app();
    require(r, Type::ind(), rstart);
    return Typed{logic::eq(std::move(l.term), std::move(r.term)), Type::prop()};
  }

  Typed parse_app() {
    const Token& start = peek();
    if (start.kind == Tok::Ident && start.text == "unique" &&
        !(sig_ && sig_->has("unique")) && lookup_scope("unique") < 0) {
      return parse_unique();
    }
    Typed head = parse_atom();
    while (peek().kind == Tok::LParen) {
      next();
      while (true) {
        const Token& at = peek();
        Typed arg = parse_iff();
        if (!head.type.is_arrow()) {
          fail(ErrorCode::IllTyped,
               "too many arguments: head has type " + head.type.str(), at);
        }
        if (head.type.domain() != arg.type) {
          fail(ErrorCode::IllTyped,
               "argument has type " + arg.type.str() + ", expected " +
                   head.type.domain().str(),
               at);
        }
        Type cod = head.type.codomain();
        head = Typed{Term::app(std::move(head.term), std::move(arg.term)), cod};
        if (peek().kind == Tok::Comma) {
          next();
          continue;
        }
        expect(Tok::RParen, "')' or ','");
        break;
      }
    }
    return head;
  }

  Typed parse_unique() {
    const Token& kw = next();
    if (!restrictor_ || !restrictor_->has_value()) {
      fail(ErrorCode::UnknownName,
           "'unique' used without a 'unique of' declaration", kw);
    }
    expect(Tok::LParen, "'('");
    const Token& at = peek();
    Typed x = parse_iff();
    require(x, Type::ind(), at);
    expect(Tok::RParen, "')'");
    const Term& r = **restrictor_;
    // forall z:e. R(z) <=> z = x, with x lifted under the new binder.
    Term body = logic::iff(Term::app(shift(r, 1), Term::bound(0)),
                           logic::eq(Term::bound(0), shift(x.term, 1)));
    return Typed{logic::forall("z", Type::ind(), std::move(body)), Type::prop()};
  }

  long lookup_scope(const std::string& name) const {
    for (std::size_t i = scope_.size(); i-- > 0;) {
      if (scope_[i].first == name) return static_cast<long>(scope_.size() - 1 - i);
    }
    return -1;
  }

  Typed parse_atom() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      next();
      Typed inner = parse_iff();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind != Tok::Ident) {
      fail(ErrorCode::SyntaxError, "expected a term, found '" + t.text + "'", t);
    }
    next();
    if (is_reserved_name(t.text)) {
      fail(ErrorCode::SyntaxError, "reserved name '" + t.text + "'", t);
    }
    long idx = lookup_scope(t.text);
    if (idx >= 0) {
      const Type& ty = scope_[scope_.size() - 1 - static_cast<std::size_t>(idx)].second;
      return Typed{Term::bound(static_cast<std::size_t>(idx)), ty};
    }
    if (logic::is_logical(t.text)) {
      Term c = Term::constant(t.text, logic::logical_type(t.text));
      return Typed{c, c.type()};
    }
    if (sig_) {
      if (auto ty = sig_->constant_type(t.text)) {
        return Typed{Term::constant(t.text, *ty), *ty};
      }
      if (auto ty = sig_->meta_type(t.text)) {
        return Typed{Term::meta(t.text, *ty), *ty};
      }
    }
    fail(ErrorCode::UnknownName, "unknown name '" + t.text + "'", t);
  }

  const std::vector<Token>& toks_;
  std::size_t pos_;
  std::size_t end_;
  const Signature* sig_;
  const std::optional<Term>* restrictor_;
  std::vector<std::pair<std::string, Type>> scope_;
};

// ---------------------------------------------------------------------------
// Printing

enum Prec : int {
  kPrecBinder = 0,
  kPrecIff = 1,
  kPrecImp = 2,
  kPrecOr = 3,
  kPrecAnd = 4,
  kPrecNot = 5,
  kPrecEq = 6,
  kPrecAtom = 7,
};

void collect_names(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Const:
    case Term::Kind::Meta:
      out.insert(t.name());
      return;
    case Term::Kind::Lam:
      collect_names(t.body(), out);
      return;
    case Term::Kind::App:
      collect_names(t.fn(), out);
      collect_names(t.arg(), out);
      return;
    default:
      return;
  }
}

class Printer {
 public:
  explicit Printer(const Term& root) { collect_names(root, taken_); }

  std::string print(const Term& t, int prec) {
    std::ostringstream os;
    emit(os, t, prec);
    return os.str();
  }

 private:
  std::string fresh_name(const std::string& hint) {
    std::string base = hint.empty() || is_reserved_name(hint) ? "x" : hint;
    auto clash = [&](const std::string& n) {
      if (taken_.count(n) || logic::is_logical(n) || is_keyword(n) ||
          n == "e" || n == "t") {
        return true;
      }
      for (const auto& s : scope_) {
        if (s == n) return true;
      }
      return false;
    };
    if (!clash(base)) return base;
    for (int k = 1;; ++k) {
      std::string cand = base + std::to_string(k);
      if (!clash(cand)) return cand;
    }
  }

  void emit_binder(std::ostream& os, const char* kw, const Term& lam) {
    std::string name = fresh_name(lam.name());
    os << kw << ' ' << name << ':' << lam.type().str() << ". ";
    scope_.push_back(name);
    emit(os, lam.body(), kPrecBinder);
    scope_.pop_back();
  }

  void emit_infix(std::ostream& os, const char* op, int prec, const Term& l,
                  const Term& r) {
    emit(os, l, prec + 1);
    os << ' ' << op << ' ';
    emit(os, r, prec);
  }

  void emit(std::ostream& os, const Term& t, int ctx) {
    int prec = precedence(t);
    bool paren = prec < ctx;
    if (paren) os << '(';
    emit_bare(os, t);
    if (paren) os << ')';
  }

  static int precedence(const Term& t) {
    if (t.is_lam()) return kPrecBinder;
    if (!t.is_app()) return kPrecAtom;
    using namespace logic;
    if (is_app_of(t, kForall, 1) && t.arg().is_lam()) return kPrecBinder;
    if (is_app_of(t, kExists, 1) && t.arg().is_lam()) return kPrecBinder;
    if (is_app_of(t, kIff, 2)) return kPrecIff;
    if (is_app_of(t, kImp, 2)) return kPrecImp;
    if (is_app_of(t, kOr, 2)) return kPrecOr;
    if (is_app_of(t, kAnd, 2)) return kPrecAnd;
    if (is_app_of(t, kNot, 1)) return kPrecNot;
    if (is_app_of(t, kEq, 2)) return kPrecEq;
    return kPrecAtom;
  }

  void emit_bare(std::ostream& os, const Term& t) {
    using namespace logic;
    switch (t.kind()) {
      case Term::Kind::Const:
      case Term::Kind::Meta:
        os << t.name();
        return;
      case Term::Kind::Bound:
        if (t.index() < scope_.size()) {
          os << scope_[scope_.size() - 1 - t.index()];
        } else {
          os << "#" << t.index();
        }
        return;
      case Term::Kind::Lam:
        emit_binder(os, "lam", t);
        return;
      case Term::Kind::App:
        break;
    }
    Spine sp = spine(t);
    const int prec = precedence(t);
    if (prec == kPrecBinder) {
      emit_binder(os, sp.head.name() == kForall ? "forall" : "exists",
                  sp.args[0]);
      return;
    }
    switch (prec) {
      case kPrecIff: emit_infix(os, "<=>", prec, sp.args[0], sp.args[1]); return;
      case kPrecImp: emit_infix(os, "=>", prec, sp.args[0], sp.args[1]); return;
      case kPrecOr: emit_infix(os, "|", prec, sp.args[0], sp.args[1]); return;
      case kPrecAnd: emit_infix(os, "&", prec, sp.args[0], sp.args[1]); return;
      case kPrecNot:
        os << '~';
        emit(os, sp.args[0], kPrecNot);
        return;
      case kPrecEq:
        emit(os, sp.args[0], kPrecAtom);
        os << " = ";
        emit(os, sp.args[1], kPrecAtom);
        return;
      default:
        break;
    }
    if (sp.head.is_lam()) {
      os << '(';
      emit_bare(os, sp.head);
      os << ')';
    } else {
      emit_bare(os, sp.head);
    }
    os << '(';
    for (std::size_t i = 0; i < sp.args.size(); ++i) {
      if (i) os << ", ";
      emit(os, sp.args[i], kPrecBinder);
    }
    os << ')';
  }

  std::set<std::string> taken_;
  std::vector<std::string> scope_;
};

// ---------------------------------------------------------------------------
// Problem files

std::size_t find_top_level(const std::vector<Token>& toks, std::size_t begin,
                           std::size_t end, Tok kind) {
  int depth = 0;
  for (std::size_t i = begin; i < end; ++i) {
    if (toks[i].kind == Tok::LParen) ++depth;
    if (toks[i].kind == Tok::RParen) --depth;
    if (depth == 0 && toks[i].kind == kind) return i;
  }
  return end;
}

class ProblemParser {
 public:
  ProblemFile parse(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t nl = text.find('\n', start);
      if (nl == std::string_view::npos) nl = text.size();
      ++line_no;
      std::string_view line = text.substr(start, nl - start);
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      directive(line, line_no);
      start = nl + 1;
    }
    finish();
    return std::move(file_);
  }

 private:
  [[noreturn]] static void fail(ErrorCode code, const std::string& msg,
                                const Token& at) {
    throw ParseError(code, msg, at.line, at.column);
  }

  Term term_range(const std::vector<Token>& toks, std::size_t begin,
                  std::size_t end) {
    if (begin >= end) {
      fail(ErrorCode::SyntaxError, "expected a term", toks[std::min(begin, toks.size() - 1)]);
    }
    TermParser p(toks, begin, end, &file_.signature, &restrictor_);
    return p.parse_all();
  }

  Term checked(const Term& term, const Token& at) {
    try {
      return normalize(term);
    } catch (const Error& e) {
      fail(e.code(), e.what(), at);
    }
  }

  void directive(std::string_view line, std::size_t line_no) {
    std::vector<Token> toks = tokenize(line, line_no, 1);
    if (toks.front().kind == Tok::End) return;
    const Token& kw = toks.front();
    if (kw.kind != Tok::Ident) fail(ErrorCode::SyntaxError, "expected a directive", kw);
    const std::size_t end = toks.size() - 1;

    if (kw.text == "const" || kw.text == "meta") {
      if (toks.size() < 4 || toks[1].kind != Tok::Ident || toks[2].kind != Tok::Colon) {
        fail(ErrorCode::SyntaxError, "expected '" + kw.text + " <name> : <type>'", kw);
      }
      const Token& name = toks[1];
      if (is_reserved_name(name.text) || is_keyword(name.text) ||
          name.text == "e" || name.text == "t") {
        fail(ErrorCode::SyntaxError, "reserved name '" + name.text + "'", name);
      }
      TermParser tp(toks, 3, end, nullptr, nullptr);
      Type ty = tp.parse_type_all();
      try {
        if (kw.text == "const") {
          file_.signature.add_constant(name.text, ty);
        } else {
          file_.signature.add_meta(name.text, ty);
        }
      } catch (const Error& e) {
        fail(e.code(), e.what(), name);
      }
    } else if (kw.text == "axiom" || kw.text == "goal") {
      Term f = term_range(toks, 1, end);
      Term n = checked(f, toks[1]);
      if (!type_of(n).is_prop()) fail(ErrorCode::IllTyped, kw.text + " must have type t", toks[1]);
      (kw.text == "axiom" ? file_.axioms : file_.goals).push_back(std::move(n));
    } else if (kw.text == "eq") {
      std::size_t eq = find_top_level(toks, 1, end, Tok::Equals);
      if (eq == end) fail(ErrorCode::SyntaxError, "expected 'eq <term> = <term>'", kw);
      Term lhs = checked(term_range(toks, 1, eq), toks[1]);
      Term rhs = checked(term_range(toks, eq + 1, end), toks[eq]);
      if (type_of(lhs) != type_of(rhs)) {
        fail(ErrorCode::IllTyped,
             "equation sides have types " + type_of(lhs).str() + " and " +
                 type_of(rhs).str(),
             toks[eq]);
      }
      file_.equations.push_back(Equation{std::move(lhs), std::move(rhs)});
    } else if (kw.text == "primary") {
      if (toks.size() < 5 || toks[1].kind != Tok::Int || toks[2].kind != Tok::Ident) {
        fail(ErrorCode::SyntaxError, "expected 'primary <eq-index> <lhs|rhs> <path>'", kw);
      }
      PrimaryMark mark;
      mark.equation = std::stoul(toks[1].text);
      if (toks[2].text == "lhs") {
        mark.side = Side::Lhs;
      } else if (toks[2].text == "rhs") {
        mark.side = Side::Rhs;
      } else {
        fail(ErrorCode::SyntaxError, "expected 'lhs' or 'rhs'", toks[2]);
      }
      for (std::size_t i = 3; i < end; ++i) {
        if (toks[i].kind != Tok::Int) fail(ErrorCode::SyntaxError, "bad path", toks[i]);
        mark.path.push_back(std::stoul(toks[i].text));
        if (i + 1 < end) {
          if (toks[i + 1].kind != Tok::Dot) fail(ErrorCode::SyntaxError, "bad path", toks[i + 1]);
          ++i;
        }
      }
      mark_lines_.push_back(kw);
      file_.marks.push_back(std::move(mark));
    } else if (kw.text == "kind") {
      if (toks.size() != 3 || toks[1].kind != Tok::Ident) {
        fail(ErrorCode::SyntaxError, "expected 'kind <unify|prove|houe|correction>'", kw);
      }
      const std::string& k = toks[1].text;
      if (k == "unify") file_.kind = ProblemKind::Unify;
      else if (k == "prove") file_.kind = ProblemKind::Prove;
      else if (k == "houe") file_.kind = ProblemKind::Houe;
      else if (k == "correction") file_.kind = ProblemKind::Correction;
      else fail(ErrorCode::SyntaxError, "unknown problem kind '" + k + "'", toks[1]);
    } else if (kw.text == "unique") {
      if (toks.size() < 3 || toks[1].text != "of") {
        fail(ErrorCode::SyntaxError, "expected 'unique of <term>'", kw);
      }
      Term r = term_range(toks, 2, end);
      if (type_of(r) != Type::arrow(Type::ind(), Type::prop())) {
        fail(ErrorCode::IllTyped, "uniqueness restrictor must have type e -> t", toks[2]);
      }
      restrictor_ = r;
    } else if (kw.text == "parallel") {
      std::size_t tilde = find_top_level(toks, 1, end, Tok::Tilde);
      if (tilde == end) fail(ErrorCode::SyntaxError, "expected 'parallel <source> ~ <target>'", kw);
      Term src = checked(term_range(toks, 1, tilde), toks[1]);
      Term tgt = checked(term_range(toks, tilde + 1, end), toks[tilde]);
      if (type_of(src) != type_of(tgt)) {
        fail(ErrorCode::IllTyped, "parallel elements have different types", toks[tilde]);
      }
      file_.parallel.push_back(ParallelPair{std::move(src), std::move(tgt)});
    } else {
      fail(ErrorCode::SyntaxError, "unknown directive '" + kw.text + "'", kw);
    }
  }

  void finish() {
    for (std::size_t i = 0; i < file_.marks.size(); ++i) {
      const PrimaryMark& m = file_.marks[i];
      const Token& at = mark_lines_[i];
      if (m.equation < 1 || m.equation > file_.equations.size()) {
        fail(ErrorCode::BadMark, "mark refers to missing equation " + std::to_string(m.equation), at);
      }
      Equation& eq = file_.equations[m.equation - 1];
      Term& side = m.side == Side::Lhs ? eq.lhs : eq.rhs;
      try {
        side = mark_primary(side, m.path);
      } catch (const Error& e) {
        fail(ErrorCode::BadMark, e.what(), at);
      }
    }
    const Token at{Tok::End, "", 1, 1};
    switch (file_.kind) {
      case ProblemKind::Prove:
        if (file_.goals.empty()) fail(ErrorCode::MissingEquations, "prove problem without a goal", at);
        break;
      case ProblemKind::Correction:
        if (file_.equations.size() != 2) {
          fail(ErrorCode::MissingEquations, "correction problems need exactly two equations", at);
        }
        if (file_.parallel.empty()) {
          fail(ErrorCode::MissingEquations, "correction problem without parallel elements", at);
        }
        break;
      default:
        if (file_.equations.empty()) fail(ErrorCode::MissingEquations, "no equations", at);
        break;
    }
  }

  ProblemFile file_;
  std::optional<Term> restrictor_;
  std::vector<Token> mark_lines_;
};

}  // namespace

Type parse_type(std::string_view text) {
  std::vector<Token> toks = tokenize(text, 1, 1);
  TermParser p(toks, 0, toks.size() - 1, nullptr, nullptr);
  return p.parse_type_all();
}

Term parse_term(std::string_view text, const Signature& sig,
                const ParseOptions& options) {
  std::vector<Token> toks = tokenize(text, options.line, options.column);
  TermParser p(toks, 0, toks.size() - 1, &sig, &options.unique_restrictor);
  return p.parse_all();
}

std::string pretty_print(const Term& term) {
  Printer p(term);
  return p.print(term, kPrecBinder);
}

std::string pretty_print(const Substitution& subst) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, value] : subst.bindings()) {
    if (!first) out += ", ";
    first = false;
    out += name + " := " + pretty_print(value);
  }
  return out + "}";
}

std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Unify: return "unify";
    case ProblemKind::Prove: return "prove";
    case ProblemKind::Houe: return "houe";
    case ProblemKind::Correction: return "correction";
  }
  return "?";
}

ProblemFile parse_problem(std::string_view text) {
  return ProblemParser{}.parse(text);
}

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

}  // namespace houe
