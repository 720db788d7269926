#include <cgc/while_lang.hpp>

#include <cctype>
#include <charconv>

namespace cgc::whilelang {

std::string_view symbol(AOp op) {
  switch (op) {
  case AOp::Add: return "+";
  case AOp::Sub: return "-";
  case AOp::Mul: return "*";
  case AOp::Div: return "/";
  }
  return "?";
}

std::string_view symbol(CmpOp op) { return op == CmpOp::Lt ? "<" : "="; }
std::string_view symbol(BOp op) { return op == BOp::Or ? "||" : "&&"; }

AexpPtr num(long long i) { return std::make_shared<const Aexp>(Aexp{Aexp::Int{i}}); }
AexpPtr var(std::string name) {
  return std::make_shared<const Aexp>(Aexp{Aexp::Var{std::move(name)}});
}
AexpPtr rand_exp() { return std::make_shared<const Aexp>(Aexp{Aexp::Rand{}}); }
AexpPtr bin(AOp op, AexpPtr lhs, AexpPtr rhs) {
  return std::make_shared<const Aexp>(Aexp{Aexp::Bin{op, std::move(lhs), std::move(rhs)}});
}
BexpPtr boolean(bool b) { return std::make_shared<const Bexp>(Bexp{Bexp::Bool{b}}); }
BexpPtr cmp(CmpOp op, AexpPtr lhs, AexpPtr rhs) {
  return std::make_shared<const Bexp>(Bexp{Bexp::Cmp{op, std::move(lhs), std::move(rhs)}});
}
BexpPtr bin(BOp op, BexpPtr lhs, BexpPtr rhs) {
  return std::make_shared<const Bexp>(Bexp{Bexp::Bin{op, std::move(lhs), std::move(rhs)}});
}
CexpPtr skip() { return std::make_shared<const Cexp>(Cexp{Cexp::Skip{}}); }
CexpPtr seq(CexpPtr first, CexpPtr second) {
  return std::make_shared<const Cexp>(Cexp{Cexp::Seq{std::move(first), std::move(second)}});
}
CexpPtr assign(std::string v, AexpPtr value) {
  return std::make_shared<const Cexp>(Cexp{Cexp::Assign{std::move(v), std::move(value)}});
}
CexpPtr if_(BexpPtr guard, CexpPtr then_branch, CexpPtr else_branch) {
  return std::make_shared<const Cexp>(
      Cexp{Cexp::If{std::move(guard), std::move(then_branch), std::move(else_branch)}});
}
CexpPtr while_(BexpPtr guard, CexpPtr body) {
  return std::make_shared<const Cexp>(Cexp{Cexp::While{std::move(guard), std::move(body)}});
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

CexpPtr renumber_rec(const Cexp& c, int& next) {
  return std::visit(
      overloaded{
          [&](const Cexp::Seq& s) -> CexpPtr {
            auto first = renumber_rec(*s.first, next);
            auto second = renumber_rec(*s.second, next);
            return seq(std::move(first), std::move(second));
          },
          [&](const Cexp::If& i) -> CexpPtr {
            Cexp out{Cexp::Skip{}, next++};
            auto t = renumber_rec(*i.then_branch, next);
            auto e = renumber_rec(*i.else_branch, next);
            out.node = Cexp::If{i.guard, std::move(t), std::move(e)};
            return std::make_shared<const Cexp>(std::move(out));
          },
          [&](const Cexp::While& w) -> CexpPtr {
            Cexp out{Cexp::Skip{}, next++};
            out.node = Cexp::While{w.guard, renumber_rec(*w.body, next)};
            return std::make_shared<const Cexp>(std::move(out));
          },
          [&](const auto& leaf) -> CexpPtr {
            return std::make_shared<const Cexp>(Cexp{leaf, next++});
          },
      },
      c.node);
}

// --- lexer ---

enum class Tok {
  Ident, Int, Skip, If, Then, Else, While, Do, Rand, True, False,
  Assign, Semi, LParen, RParen, Plus, Minus, Star, Slash, Lt, Eq, Or, And, End
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string describe(const Token& t) {
  return t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    if (ch == '#') { // comment to end of line
      while (i < src.size() && src[i] != '\n') {
        advance(1);
      }
      continue;
    }
    const int l = line;
    const int c = col;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        ++j;
      }
      std::string word(src.substr(i, j - i));
      static const std::map<std::string, Tok> keywords = {
          {"skip", Tok::Skip}, {"if", Tok::If},       {"then", Tok::Then},
          {"else", Tok::Else}, {"while", Tok::While}, {"do", Tok::Do},
          {"rand", Tok::Rand}, {"true", Tok::True},   {"false", Tok::False}};
      auto kw = keywords.find(word);
      out.push_back({kw == keywords.end() ? Tok::Ident : kw->second, word, l, c});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
        ++j;
      }
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), l, c});
      advance(j - i);
      continue;
    }
    auto two = src.substr(i, 2);
    if (two == ":=") {
      out.push_back({Tok::Assign, ":=", l, c});
      advance(2);
      continue;
    }
    if (two == "||") {
      out.push_back({Tok::Or, "||", l, c});
      advance(2);
      continue;
    }
    if (two == "&&") {
      out.push_back({Tok::And, "&&", l, c});
      advance(2);
      continue;
    }
    Tok kind;
    switch (ch) {
    case ';': kind = Tok::Semi; break;
    case '(': kind = Tok::LParen; break;
    case ')': kind = Tok::RParen; break;
    case '+': kind = Tok::Plus; break;
    case '-': kind = Tok::Minus; break;
    case '*': kind = Tok::Star; break;
    case '/': kind = Tok::Slash; break;
    case '<': kind = Tok::Lt; break;
    case '=': kind = Tok::Eq; break;
    default:
      throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
    }
    out.push_back({kind, std::string(1, ch), l, c});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : m_toks(std::move(toks)) {}

  CexpPtr program() {
    auto c = cexp();
    if (peek().kind != Tok::End) {
      fail("expected ';' or end of input, found " + describe(peek()));
    }
    return c;
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

  CexpPtr cexp() {
    auto first = simple();
    if (at(Tok::Semi)) {
      ++m_pos;
      return seq(std::move(first), cexp());
    }
    return first;
  }

  CexpPtr simple() {
    switch (peek().kind) {
    case Tok::Skip:
      ++m_pos;
      return skip();
    case Tok::Ident: {
      std::string name = m_toks[m_pos++].text;
      expect(Tok::Assign, "':='");
      return assign(std::move(name), aexp());
    }
    case Tok::If: {
      ++m_pos;
      auto g = bexp();
      expect(Tok::Then, "'then'");
      auto t = simple();
      expect(Tok::Else, "'else'");
      auto e = simple();
      return if_(std::move(g), std::move(t), std::move(e));
    }
    case Tok::While: {
      ++m_pos;
      auto g = bexp();
      expect(Tok::Do, "'do'");
      return while_(std::move(g), simple());
    }
    case Tok::LParen: {
      ++m_pos;
      auto c = cexp();
      expect(Tok::RParen, "')'");
      return c;
    }
    default:
      fail("expected a command, found " + describe(peek()));
    }
  }

  BexpPtr bexp() {
    auto lhs = bconj();
    while (at(Tok::Or)) {
      ++m_pos;
      lhs = bin(BOp::Or, std::move(lhs), bconj());
    }
    return lhs;
  }

  BexpPtr bconj() {
    auto lhs = batom();
    while (at(Tok::And)) {
      ++m_pos;
      lhs = bin(BOp::And, std::move(lhs), batom());
    }
    return lhs;
  }

  BexpPtr batom() {
    if (at(Tok::True) || at(Tok::False)) {
      return boolean(m_toks[m_pos++].kind == Tok::True);
    }
    // A '(' may open either an arithmetic operand of a comparison or a
    // parenthesized boolean; try the comparison first.
    const std::size_t save = m_pos;
    try {
      auto lhs = aexp();
      if (!at(Tok::Lt) && !at(Tok::Eq)) {
        fail("expected '<' or '=', found " + describe(peek()));
      }
      const CmpOp op = m_toks[m_pos++].kind == Tok::Lt ? CmpOp::Lt : CmpOp::Eq;
      return cmp(op, std::move(lhs), aexp());
    } catch (const ParseError& first) {
      if (m_toks[save].kind != Tok::LParen) {
        throw;
      }
      m_pos = save + 1;
      try {
        auto b = bexp();
        expect(Tok::RParen, "')'");
        return b;
      } catch (const ParseError& second) {
        const bool first_further =
            std::pair(first.line(), first.column()) >= std::pair(second.line(), second.column());
        if (first_further) {
          throw first;
        }
        throw;
      }
    }
  }

  AexpPtr aexp() {
    auto lhs = term();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      const AOp op = m_toks[m_pos++].kind == Tok::Plus ? AOp::Add : AOp::Sub;
      lhs = bin(op, std::move(lhs), term());
    }
    return lhs;
  }

  AexpPtr term() {
    auto lhs = factor();
    while (at(Tok::Star) || at(Tok::Slash)) {
      const AOp op = m_toks[m_pos++].kind == Tok::Star ? AOp::Mul : AOp::Div;
      lhs = bin(op, std::move(lhs), factor());
    }
    return lhs;
  }

  AexpPtr factor() {
    switch (peek().kind) {
    case Tok::Int:
      return num(integer(m_toks[m_pos++], false));
    case Tok::Minus: {
      ++m_pos;
      if (!at(Tok::Int)) {
        fail("expected an integer after '-', found " + describe(peek()));
      }
      return num(integer(m_toks[m_pos++], true));
    }
    case Tok::Ident:
      return var(m_toks[m_pos++].text);
    case Tok::Rand:
      ++m_pos;
      return rand_exp();
    case Tok::LParen: {
      ++m_pos;
      auto e = aexp();
      expect(Tok::RParen, "')'");
      return e;
    }
    default:
      fail("expected an arithmetic expression, found " + describe(peek()));
    }
  }

  long long integer(const Token& t, bool negative) const {
    long long v = 0;
    std::string text = negative ? "-" + t.text : t.text;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc()) {
      throw ParseError("integer literal out of range", t.line, t.column);
    }
    return v;
  }

  std::vector<Token> m_toks;
  std::size_t m_pos = 0;
};

int aprec(const Aexp& e) {
  if (const auto* b = std::get_if<Aexp::Bin>(&e.node)) {
    return (b->op == AOp::Add || b->op == AOp::Sub) ? 1 : 2;
  }
  return 3;
}

std::string print_a(const Aexp& e, int min_prec) {
  std::string s = std::visit(
      overloaded{
          [](const Aexp::Int& i) { return std::to_string(i.value); },
          [](const Aexp::Var& v) { return v.name; },
          [](const Aexp::Rand&) { return std::string("rand"); },
          [](const Aexp::Bin& b) {
            const int p = (b.op == AOp::Add || b.op == AOp::Sub) ? 1 : 2;
            // left-associative: the right operand needs a strictly higher level
            return print_a(*b.lhs, p) + " " + std::string(symbol(b.op)) + " " +
                   print_a(*b.rhs, p + 1);
          },
      },
      e.node);
  return aprec(e) < min_prec ? "(" + s + ")" : s;
}

int bprec(const Bexp& e) {
  if (const auto* b = std::get_if<Bexp::Bin>(&e.node)) {
    return b->op == BOp::Or ? 1 : 2;
  }
  return 3;
}

std::string print_b(const Bexp& e, int min_prec) {
  std::string s = std::visit(
      overloaded{
          [](const Bexp::Bool& b) { return std::string(b.value ? "true" : "false"); },
          [](const Bexp::Cmp& c) {
            return print_a(*c.lhs, 1) + " " + std::string(symbol(c.op)) + " " +
                   print_a(*c.rhs, 1);
          },
          [](const Bexp::Bin& b) {
            const int p = b.op == BOp::Or ? 1 : 2;
            return print_b(*b.lhs, p) + " " + std::string(symbol(b.op)) + " " +
                   print_b(*b.rhs, p + 1);
          },
      },
      e.node);
  return bprec(e) < min_prec ? "(" + s + ")" : s;
}

std::string print_c(const Cexp& c, bool simple_required) {
  return std::visit(
      overloaded{
          [](const Cexp::Skip&) { return std::string("skip"); },
          [&](const Cexp::Seq& s) {
            std::string body = print_c(*s.first, true) + "; " + print_c(*s.second, false);
            return simple_required ? "(" + body + ")" : body;
          },
          [](const Cexp::Assign& a) { return a.var + " := " + print_a(*a.value, 0); },
          [](const Cexp::If& i) {
            return "if " + print_b(*i.guard, 0) + " then " + print_c(*i.then_branch, true) +
                   " else " + print_c(*i.else_branch, true);
          },
          [](const Cexp::While& w) {
            return "while " + print_b(*w.guard, 0) + " do " + print_c(*w.body, true);
          },
      },
      c.node);
}

void collect_points(const Cexp& c, std::vector<const Cexp*>& out) {
  if (c.point != kNoPoint) {
    if (out.size() <= static_cast<std::size_t>(c.point)) {
      out.resize(c.point + 1, nullptr);
    }
    out[c.point] = &c;
  }
  std::visit(overloaded{
                 [&](const Cexp::Seq& s) {
                   collect_points(*s.first, out);
                   collect_points(*s.second, out);
                 },
                 [&](const Cexp::If& i) {
                   collect_points(*i.then_branch, out);
                   collect_points(*i.else_branch, out);
                 },
                 [&](const Cexp::While& w) { collect_points(*w.body, out); },
                 [](const auto&) {},
             },
             c.node);
}

void vars_a(const Aexp& e, std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const Aexp::Var& v) { out.insert(v.name); },
                 [&](const Aexp::Bin& b) {
                   vars_a(*b.lhs, out);
                   vars_a(*b.rhs, out);
                 },
                 [](const auto&) {},
             },
             e.node);
}

void vars_b(const Bexp& e, std::set<std::string>& out) {
  std::visit(overloaded{
                 [&](const Bexp::Cmp& c) {
                   vars_a(*c.lhs, out);
                   vars_a(*c.rhs, out);
                 },
                 [&](const Bexp::Bin& b) {
                   vars_b(*b.lhs, out);
                   vars_b(*b.rhs, out);
                 },
                 [](const auto&) {},
             },
             e.node);
}

void vars_c(const Cexp& c, std::set<std::string>& used, std::set<std::string>& assigned) {
  std::visit(overloaded{
                 [&](const Cexp::Seq& s) {
                   vars_c(*s.first, used, assigned);
                   vars_c(*s.second, used, assigned);
                 },
                 [&](const Cexp::Assign& a) {
                   assigned.insert(a.var);
                   vars_a(*a.value, used);
                 },
                 [&](const Cexp::If& i) {
                   vars_b(*i.guard, used);
                   vars_c(*i.then_branch, used, assigned);
                   vars_c(*i.else_branch, used, assigned);
                 },
                 [&](const Cexp::While& w) {
                   vars_b(*w.guard, used);
                   vars_c(*w.body, used, assigned);
                 },
                 [](const Cexp::Skip&) {},
             },
             c.node);
}

} // namespace

CexpPtr renumber(const CexpPtr& root) {
  int next = 0;
  return renumber_rec(*root, next);
}

CexpPtr parse(std::string_view src) {
  Parser p(lex(src));
  return renumber(p.program());
}

std::string to_string(const Aexp& e) { return print_a(e, 0); }
std::string to_string(const Bexp& e) { return print_b(e, 0); }
std::string to_string(const Cexp& c) { return print_c(c, false); }

bool equal(const Aexp& a, const Aexp& b) {
  if (a.node.index() != b.node.index()) {
    return false;
  }
  return std::visit(
      overloaded{
          [&](const Aexp::Int& x) { return x.value == std::get<Aexp::Int>(b.node).value; },
          [&](const Aexp::Var& x) { return x.name == std::get<Aexp::Var>(b.node).name; },
          [](const Aexp::Rand&) { return true; },
          [&](const Aexp::Bin& x) {
            const auto& y = std::get<Aexp::Bin>(b.node);
            return x.op == y.op && equal(*x.lhs, *y.lhs) && equal(*x.rhs, *y.rhs);
          },
      },
      a.node);
}

bool equal(const Bexp& a, const Bexp& b) {
  if (a.node.index() != b.node.index()) {
    return false;
  }
  return std::visit(
      overloaded{
          [&](const Bexp::Bool& x) { return x.value == std::get<Bexp::Bool>(b.node).value; },
          [&](const Bexp::Cmp& x) {
            const auto& y = std::get<Bexp::Cmp>(b.node);
            return x.op == y.op && equal(*x.lhs, *y.lhs) && equal(*x.rhs, *y.rhs);
          },
          [&](const Bexp::Bin& x) {
            const auto& y = std::get<Bexp::Bin>(b.node);
            return x.op == y.op && equal(*x.lhs, *y.lhs) && equal(*x.rhs, *y.rhs);
          },
      },
      a.node);
}

bool equal(const Cexp& a, const Cexp& b) {
  if (a.node.index() != b.node.index()) {
    return false;
  }
  return std::visit(
      overloaded{
          [](const Cexp::Skip&) { return true; },
          [&](const Cexp::Seq& x) {
            const auto& y = std::get<Cexp::Seq>(b.node);
            return equal(*x.first, *y.first) && equal(*x.second, *y.second);
          },
          [&](const Cexp::Assign& x) {
            const auto& y = std::get<Cexp::Assign>(b.node);
            return x.var == y.var && equal(*x.value, *y.value);
          },
          [&](const Cexp::If& x) {
            const auto& y = std::get<Cexp::If>(b.node);
            return equal(*x.guard, *y.guard) && equal(*x.then_branch, *y.then_branch) &&
                   equal(*x.else_branch, *y.else_branch);
          },
          [&](const Cexp::While& x) {
            const auto& y = std::get<Cexp::While>(b.node);
            return equal(*x.guard, *y.guard) && equal(*x.body, *y.body);
          },
      },
      a.node);
}

std::set<std::string> assigned_vars(const Cexp& c) {
  std::set<std::string> used;
  std::set<std::string> assigned;
  vars_c(c, used, assigned);
  return assigned;
}

std::set<std::string> free_vars(const Cexp& c) {
  std::set<std::string> used;
  std::set<std::string> assigned;
  vars_c(c, used, assigned);
  return used;
}

std::set<std::string> free_vars(const Aexp& e) {
  std::set<std::string> out;
  vars_a(e, out);
  return out;
}

std::set<std::string> free_vars(const Bexp& e) {
  std::set<std::string> out;
  vars_b(e, out);
  return out;
}

std::vector<const Cexp*> points(const Cexp& root) {
  std::vector<const Cexp*> out;
  collect_points(root, out);
  return out;
}

int point_of(const Cexp& c) {
  if (const auto* s = std::get_if<Cexp::Seq>(&c.node)) {
    const int head = point_of(*s->first);
    return head == kExitPoint ? point_of(*s->second) : head;
  }
  return c.point; // residual skips are unnumbered: kExitPoint
}

std::string continuation_key(const Cexp& c) {
  if (const auto* s = std::get_if<Cexp::Seq>(&c.node)) {
    return "(" + continuation_key(*s->first) + ";" + continuation_key(*s->second) + ")";
  }
  if (c.point != kNoPoint) {
    return "#" + std::to_string(c.point);
  }
  if (c.is_skip()) {
    return "S";
  }
  // Unnumbered non-skip commands only arise from hand-built ASTs.
  return "[" + to_string(c) + "]";
}

} // namespace cgc::whilelang
