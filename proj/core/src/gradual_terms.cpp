#include <cgc/gradual.hpp>

#include <cctype>
#include <set>

namespace cgc::gradual {

namespace {

using K = Term::Kind;

TermPtr make(Term t) { return std::make_shared<const Term>(std::move(t)); }

} // namespace

TermPtr var_e(std::string name) { return make({K::Var, std::move(name), false, nullptr, {}, {}, {}}); }
TermPtr bool_e(bool b) { return make({K::Bool, "", b, nullptr, {}, {}, {}}); }
TermPtr lam_e(std::string x, TypePtr annot, TermPtr body) {
  return make({K::Lam, std::move(x), false, std::move(annot), std::move(body), {}, {}});
}
TermPtr app_e(TermPtr f, TermPtr arg) {
  return make({K::App, "", false, nullptr, std::move(f), std::move(arg), {}});
}
TermPtr if_e(TermPtr g, TermPtr t, TermPtr e) {
  return make({K::If, "", false, nullptr, std::move(g), std::move(t), std::move(e)});
}
TermPtr ascribe_e(TermPtr e, TypePtr t) {
  return make({K::Ascribe, "", false, std::move(t), std::move(e), {}, {}});
}

namespace {

// 0: lambda / if, 1: ascription, 2: application, 3: atom
int prec(const Term& e) {
  switch (e.kind) {
  case K::Lam:
  case K::If: return 0;
  case K::Ascribe: return 1;
  case K::App: return 2;
  default: return 3;
  }
}

std::string print(const Term& e, int min) {
  std::string s;
  switch (e.kind) {
  case K::Var: s = e.name; break;
  case K::Bool: s = e.value ? "true" : "false"; break;
  case K::Lam:
    s = "\\" + e.name + (e.type ? ":" + to_string(*e.type) : "") + ". " + print(*e.a, 0);
    break;
  case K::App: s = print(*e.a, 2) + " " + print(*e.b, 3); break;
  case K::If:
    s = "if " + print(*e.a, 0) + " then " + print(*e.b, 0) + " else " + print(*e.c, 0);
    break;
  case K::Ascribe: s = print(*e.a, 1) + " :: " + to_string(*e.type); break;
  }
  return prec(e) < min ? "(" + s + ")" : s;
}

bool closed_under(const Term& e, std::set<std::string>& scope) {
  switch (e.kind) {
  case K::Var: return scope.count(e.name) > 0;
  case K::Bool: return true;
  case K::Lam: {
    const bool fresh = scope.insert(e.name).second;
    const bool ok = closed_under(*e.a, scope);
    if (fresh) {
      scope.erase(e.name);
    }
    return ok;
  }
  case K::App: return closed_under(*e.a, scope) && closed_under(*e.b, scope);
  case K::If:
    return closed_under(*e.a, scope) && closed_under(*e.b, scope) &&
           closed_under(*e.c, scope);
  case K::Ascribe: return closed_under(*e.a, scope);
  }
  return false;
}

// --- lexer / parser shared by types and terms ---

enum class Tok {
  Ident, True, False, If, Then, Else, Bool, None, Any, Unknown,
  Lambda, Colon, DColon, Dot, Arrow, LParen, RParen, End
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    const int l = line;
    const int c = col;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                                src[j] == '_' || src[j] == '\'')) {
        ++j;
      }
      std::string w(src.substr(i, j - i));
      static const std::map<std::string, Tok> kw = {
          {"true", Tok::True}, {"false", Tok::False}, {"if", Tok::If},
          {"then", Tok::Then}, {"else", Tok::Else},   {"Bool", Tok::Bool},
          {"None", Tok::None}, {"Any", Tok::Any}};
      auto it = kw.find(w);
      out.push_back({it == kw.end() ? Tok::Ident : it->second, w, l, c});
      advance(j - i);
      continue;
    }
    auto two = src.substr(i, 2);
    if (two == "::") {
      out.push_back({Tok::DColon, "::", l, c});
      advance(2);
      continue;
    }
    if (two == "->") {
      out.push_back({Tok::Arrow, "->", l, c});
      advance(2);
      continue;
    }
    Tok k;
    switch (ch) {
    case '\\': k = Tok::Lambda; break;
    case ':': k = Tok::Colon; break;
    case '.': k = Tok::Dot; break;
    case '?': k = Tok::Unknown; break;
    case '(': k = Tok::LParen; break;
    case ')': k = Tok::RParen; break;
    default:
      throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
    }
    out.push_back({k, std::string(1, ch), l, c});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

std::string describe(const Token& t) {
  return t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
}

class Parser {
 public:
  Parser(std::vector<Token> toks, bool untyped) : m_toks(std::move(toks)), m_untyped(untyped) {}

  TermPtr whole_term() {
    auto e = term();
    finish();
    return e;
  }

  TypePtr whole_type() {
    auto t = type();
    finish();
    return t;
  }

 private:
  const Token& peek() const { return m_toks[m_pos]; }
  bool at(Tok k) const { return peek().kind == k; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().column);
  }
  Token expect(Tok k, std::string_view what) {
    if (!at(k)) {
      fail("expected " + std::string(what) + ", found " + describe(peek()));
    }
    return m_toks[m_pos++];
  }
  void finish() {
    if (!at(Tok::End)) {
      fail("unexpected " + describe(peek()));
    }
  }

  TypePtr type() {
    auto lhs = base_type();
    if (at(Tok::Arrow)) {
      ++m_pos;
      return arrow(std::move(lhs), type());
    }
    return lhs;
  }

  TypePtr base_type() {
    switch (peek().kind) {
    case Tok::Bool: ++m_pos; return bool_t();
    case Tok::None: ++m_pos; return none_t();
    case Tok::Any: ++m_pos; return any_t();
    case Tok::Unknown: ++m_pos; return unknown_t();
    case Tok::LParen: {
      ++m_pos;
      auto t = type();
      expect(Tok::RParen, "')'");
      return t;
    }
    default: fail("expected a type, found " + describe(peek()));
    }
  }

  TermPtr term() {
    if (at(Tok::Lambda)) {
      ++m_pos;
      std::string x = expect(Tok::Ident, "a variable").text;
      TypePtr annot;
      if (m_untyped) {
        if (at(Tok::Colon)) {
          fail("annotations are not allowed in untyped terms");
        }
      } else {
        expect(Tok::Colon, "':'");
        annot = type();
      }
      expect(Tok::Dot, "'.'");
      return lam_e(std::move(x), std::move(annot), term());
    }
    if (at(Tok::If)) {
      ++m_pos;
      auto g = term();
      expect(Tok::Then, "'then'");
      auto t = term();
      expect(Tok::Else, "'else'");
      return if_e(std::move(g), std::move(t), term());
    }
    auto e = application();
    while (at(Tok::DColon)) {
      if (m_untyped) {
        fail("ascriptions are not allowed in untyped terms");
      }
      ++m_pos;
      e = ascribe_e(std::move(e), type());
    }
    return e;
  }

  bool starts_atom() const {
    return at(Tok::Ident) || at(Tok::True) || at(Tok::False) || at(Tok::LParen);
  }

  TermPtr application() {
    auto f = atom();
    while (starts_atom()) {
      f = app_e(std::move(f), atom());
    }
    return f;
  }

  TermPtr atom() {
    switch (peek().kind) {
    case Tok::Ident: return var_e(m_toks[m_pos++].text);
    case Tok::True: ++m_pos; return bool_e(true);
    case Tok::False: ++m_pos; return bool_e(false);
    case Tok::LParen: {
      ++m_pos;
      auto e = term();
      expect(Tok::RParen, "')'");
      return e;
    }
    default: fail("expected a term, found " + describe(peek()));
    }
  }

  std::vector<Token> m_toks;
  std::size_t m_pos = 0;
  bool m_untyped;
};

// --- type checking ---

struct Checker {
  bool gradual;

  std::string rule(std::string_view base) const {
    return gradual ? "G-" + std::string(base) : std::string(base);
  }

  TypeError error(std::string_view r, const Term& e, std::string detail) const {
    return TypeError{rule(r), to_string(e), std::move(detail)};
  }

  bool sub(const TypePtr& a, const TypePtr& b) const {
    return gradual ? consistent_subtype(a, b) : subtype(a, b);
  }

  TypePtr join_of(const TypePtr& a, const TypePtr& b) const {
    return gradual ? gradual_join(a, b) : join(a, b);
  }

  bool admissible(const TypePtr& t) const { return gradual || is_precise(*t); }

  TypeResult check(Context& ctx, const Term& e) const {
    switch (e.kind) {
    case K::Var:
      for (auto it = ctx.rbegin(); it != ctx.rend(); ++it) {
        if (it->first == e.name) {
          return it->second;
        }
      }
      return error("Var", e, "unbound variable " + e.name);
    case K::Bool:
      return bool_t();
    case K::Lam: {
      if (!e.type) {
        return error("Lam", e, "missing annotation on " + e.name);
      }
      if (!admissible(e.type)) {
        return error("Lam", e, "imprecise annotation " + to_string(*e.type));
      }
      ctx.emplace_back(e.name, e.type);
      auto body = check(ctx, *e.a);
      ctx.pop_back();
      if (auto* err = std::get_if<TypeError>(&body)) {
        return *err;
      }
      return arrow(e.type, std::get<TypePtr>(body));
    }
    case K::App: {
      auto f = check(ctx, *e.a);
      if (std::holds_alternative<TypeError>(f)) return f;
      auto x = check(ctx, *e.b);
      if (std::holds_alternative<TypeError>(x)) return x;
      const auto& ft = std::get<TypePtr>(f);
      const auto& xt = std::get<TypePtr>(x);
      TypePtr dom;
      TypePtr cod;
      if (ft->kind == Type::Kind::Arrow) {
        dom = ft->dom;
        cod = ft->cod;
      } else if (gradual && ft->kind == Type::Kind::Unknown) {
        dom = unknown_t();
        cod = unknown_t();
      } else {
        return error("App", e, "operator has non-function type " + to_string(*ft));
      }
      if (!sub(xt, dom)) {
        return error("App", e,
                     "argument type " + to_string(*xt) + " is not " +
                         (gradual ? "consistent with " : "a subtype of ") + to_string(*dom));
      }
      return cod;
    }
    case K::If: {
      auto g = check(ctx, *e.a);
      if (std::holds_alternative<TypeError>(g)) return g;
      auto t = check(ctx, *e.b);
      if (std::holds_alternative<TypeError>(t)) return t;
      auto f = check(ctx, *e.c);
      if (std::holds_alternative<TypeError>(f)) return f;
      const auto& gt = std::get<TypePtr>(g);
      if (!sub(gt, bool_t())) {
        return error("If", e, "guard has type " + to_string(*gt));
      }
      return join_of(std::get<TypePtr>(t), std::get<TypePtr>(f));
    }
    case K::Ascribe: {
      if (!admissible(e.type)) {
        return error("Coe", e, "imprecise ascription " + to_string(*e.type));
      }
      auto inner = check(ctx, *e.a);
      if (std::holds_alternative<TypeError>(inner)) return inner;
      const auto& it = std::get<TypePtr>(inner);
      if (!sub(it, e.type)) {
        return error("Coe", e,
                     to_string(*it) + " is not " +
                         (gradual ? "consistent with " : "a subtype of ") +
                         to_string(*e.type));
      }
      return e.type;
    }
    }
    return error("Var", e, "unknown term");
  }
};

} // namespace

std::string to_string(const Term& e) { return print(e, 0); }

bool equal(const Term& a, const Term& b) {
  if (a.kind != b.kind || a.name != b.name || a.value != b.value) {
    return false;
  }
  if (static_cast<bool>(a.type) != static_cast<bool>(b.type) ||
      (a.type && !equal(*a.type, *b.type))) {
    return false;
  }
  auto same = [](const TermPtr& x, const TermPtr& y) {
    return (!x && !y) || (x && y && equal(*x, *y));
  };
  return same(a.a, b.a) && same(a.b, b.b) && same(a.c, b.c);
}

int size(const Term& e) {
  int n = 1;
  for (const auto* child : {&e.a, &e.b, &e.c}) {
    if (*child) {
      n += size(**child);
    }
  }
  return n;
}

bool is_closed(const Term& e) {
  std::set<std::string> scope;
  return closed_under(e, scope);
}

bool is_precise(const Term& e) {
  if (e.type && !is_precise(*e.type)) {
    return false;
  }
  for (const auto* child : {&e.a, &e.b, &e.c}) {
    if (*child && !is_precise(**child)) {
      return false;
    }
  }
  return true;
}

bool is_untyped(const Term& e) {
  if (e.type || e.kind == K::Ascribe) {
    return false;
  }
  for (const auto* child : {&e.a, &e.b, &e.c}) {
    if (*child && !is_untyped(**child)) {
      return false;
    }
  }
  return true;
}

TypePtr parse_type(std::string_view src) { return Parser(lex(src), false).whole_type(); }
TermPtr parse_term(std::string_view src) { return Parser(lex(src), false).whole_term(); }
TermPtr parse_untyped(std::string_view src) { return Parser(lex(src), true).whole_term(); }

std::string TypeError::message() const {
  return rule + ": " + detail + " in " + subterm;
}

TypeResult typecheck_precise(const Context& ctx, const Term& e) {
  Context c = ctx;
  return Checker{false}.check(c, e);
}

TypeResult typecheck_gradual(const Context& ctx, const Term& e) {
  Context c = ctx;
  return Checker{true}.check(c, e);
}

namespace {

TermPtr embed(const Term& e) {
  switch (e.kind) {
  case K::Var: return var_e(e.name);
  case K::Bool: return ascribe_e(bool_e(e.value), unknown_t());
  case K::Lam: return ascribe_e(lam_e(e.name, unknown_t(), embed(*e.a)), unknown_t());
  case K::App: return ascribe_e(app_e(embed(*e.a), embed(*e.b)), unknown_t());
  case K::If:
    return ascribe_e(if_e(embed(*e.a), embed(*e.b), embed(*e.c)), unknown_t());
  case K::Ascribe: break;
  }
  throw DomainError("embed_dynamic: ascription in an untyped term");
}

} // namespace

TermPtr embed_dynamic(const Term& un) {
  if (!is_untyped(un)) {
    throw DomainError("embed_dynamic: term carries type annotations");
  }
  if (!is_closed(un)) {
    throw DomainError("embed_dynamic: open term " + to_string(un));
  }
  return embed(un);
}

bool term_precision_leq(const Term& a, const Term& b) {
  if (a.kind != b.kind || a.name != b.name || a.value != b.value) {
    return false;
  }
  if (static_cast<bool>(a.type) != static_cast<bool>(b.type) ||
      (a.type && !precision_leq(a.type, b.type))) {
    return false;
  }
  auto rel = [](const TermPtr& x, const TermPtr& y) {
    return (!x && !y) || (x && y && term_precision_leq(*x, *y));
  };
  return rel(a.a, b.a) && rel(a.b, b.b) && rel(a.c, b.c);
}

} // namespace cgc::gradual
