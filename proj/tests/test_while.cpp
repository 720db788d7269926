#include <cgc/while_lang.hpp>

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cgc;
using namespace cgc::whilelang;

namespace {

Env env_of(std::initializer_list<std::pair<const std::string, long long>> xs) { return Env(xs); }

// Naive reference: random expression trees kept as text plus their value
// sets, built bottom-up without touching the library.
struct Ref {
  std::string text;
  std::set<long long> values;
};

struct RefB {
  std::string text;
  std::set<bool> values;
};

constexpr int kWindow = 4;

Ref gen_a(std::mt19937_64& rng, int depth, const Env& env) {
  std::uniform_int_distribution<int> pick(0, depth > 1 ? 6 : 2);
  switch (pick(rng)) {
  case 0: {
    long long v = std::uniform_int_distribution<long long>(-9, 9)(rng);
    return {std::to_string(v), {v}};
  }
  case 1: {
    auto it = env.begin();
    std::advance(it, std::uniform_int_distribution<std::size_t>(0, env.size() - 1)(rng));
    return {it->first, {it->second}};
  }
  case 2: {
    std::set<long long> all;
    for (long long i = -kWindow; i <= kWindow; ++i) all.insert(i);
    return {"rand", all};
  }
  default: break;
  }
  const char ops[] = {'+', '-', '*', '/'};
  const char op = ops[std::uniform_int_distribution<int>(0, 3)(rng)];
  Ref l = gen_a(rng, depth - 1, env);
  Ref r = gen_a(rng, depth - 1, env);
  std::set<long long> out;
  for (long long a : l.values) {
    for (long long b : r.values) {
      switch (op) {
      case '+': out.insert(a + b); break;
      case '-': out.insert(a - b); break;
      case '*': out.insert(a * b); break;
      case '/':
        if (b != 0) {
          // round toward zero by hand
          long long q = (a < 0 ? -a : a) / (b < 0 ? -b : b);
          out.insert((a < 0) != (b < 0) ? -q : q);
        }
        break;
      }
    }
  }
  return {"(" + l.text + " " + op + " " + r.text + ")", out};
}

RefB gen_b(std::mt19937_64& rng, int depth, const Env& env) {
  std::uniform_int_distribution<int> pick(0, depth > 1 ? 4 : 1);
  const int k = pick(rng);
  if (k == 0) {
    const bool v = rng() & 1;
    return {v ? "true" : "false", {v}};
  }
  if (k <= 2) {
    const bool lt = k == 1;
    Ref l = gen_a(rng, std::max(1, depth - 1), env);
    Ref r = gen_a(rng, std::max(1, depth - 1), env);
    std::set<bool> out;
    for (long long a : l.values) {
      for (long long b : r.values) {
        out.insert(lt ? a < b : a == b);
      }
    }
    return {l.text + (lt ? " < " : " = ") + r.text, out};
  }
  const bool conj = k == 3;
  RefB l = gen_b(rng, depth - 1, env);
  RefB r = gen_b(rng, depth - 1, env);
  std::set<bool> out;
  for (bool a : l.values) {
    for (bool b : r.values) {
      out.insert(conj ? (a && b) : (a || b));
    }
  }
  return {"(" + l.text + (conj ? " && " : " || ") + r.text + ")", out};
}

AexpPtr aexp_of(const std::string& text) {
  auto c = parse("t := " + text);
  return std::get<Cexp::Assign>(c->node).value;
}

BexpPtr bexp_of(const std::string& text) {
  auto c = parse("if " + text + " then skip else skip");
  return std::get<Cexp::If>(c->node).guard;
}

std::set<Env> terminal_envs(const Reachable& r) {
  std::set<Env> out;
  for (const auto& s : r.states) {
    if (s.terminal()) out.insert(s.env);
  }
  return out;
}

} // namespace

TEST(Parse, Examples) {
  EXPECT_TRUE(parse("skip")->is_skip());
  EXPECT_TRUE(equal(*parse("x := rand"), *assign("x", rand_exp())));
  auto loop = while_(cmp(CmpOp::Lt, var("x"), num(3)),
                     assign("x", bin(AOp::Add, var("x"), num(1))));
  EXPECT_TRUE(equal(*parse("while x < 3 do x := x + 1"), *loop));
}

TEST(Parse, PrecedenceAndAssociativity) {
  auto e = aexp_of("1 + 2 * 3 - 4");
  EXPECT_EQ(to_string(*e), "1 + 2 * 3 - 4");
  EXPECT_EQ(eval_aexp(*e, {}, IntWindow(1)), (std::set<long long>{3}));
  EXPECT_EQ(eval_aexp(*aexp_of("8 - 4 - 2"), {}, IntWindow(1)), (std::set<long long>{2}));
  EXPECT_EQ(eval_aexp(*aexp_of("8 / 4 / 2"), {}, IntWindow(1)), (std::set<long long>{1}));
  auto b = bexp_of("true || false && false");
  EXPECT_EQ(eval_bexp(*b, {}, IntWindow(1)), (std::set<bool>{true}));
  auto c = parse("x := 1; y := 2; z := 3");
  const auto& s = std::get<Cexp::Seq>(c->node);
  EXPECT_TRUE(std::holds_alternative<Cexp::Seq>(s.second->node));
}

TEST(Parse, WhileBodyIsASingleCommand) {
  auto c = parse("while x < 3 do x := x + 1; y := x");
  ASSERT_TRUE(std::holds_alternative<Cexp::Seq>(c->node));
  EXPECT_TRUE(std::holds_alternative<Cexp::While>(std::get<Cexp::Seq>(c->node).first->node));
}

TEST(Parse, NegativeLiteralsAndComments) {
  auto c = parse("# header\nx := -3 # trailing\n");
  EXPECT_TRUE(equal(*c, *assign("x", num(-3))));
}

TEST(Parse, ErrorsCarryPositions) {
  try {
    parse("x := 1;\n  y := ");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_GE(e.column(), 7);
  }
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("x = 1"), ParseError);
  EXPECT_THROW(parse("if x then skip else skip"), ParseError);
  EXPECT_THROW(parse("while true do"), ParseError);
  EXPECT_THROW(parse("x := 1 +"), ParseError);
  EXPECT_THROW(parse("skip skip"), ParseError);
}

TEST(Parse, PrintRoundTripsFixtures) {
  for (const auto& p : fixtures::programs()) {
    auto c = parse(p.source);
    auto again = parse(to_string(*c));
    EXPECT_TRUE(equal(*c, *again)) << p.name;
    EXPECT_EQ(to_string(*c), to_string(*again)) << p.name;
  }
}

TEST(Points, PreOrderNumbering) {
  auto c = parse("x := 1; while x < 3 do x := x + 1");
  auto ps = points(*c);
  ASSERT_EQ(ps.size(), 3u);
  EXPECT_EQ(to_string(*ps[0]), "x := 1");
  EXPECT_TRUE(std::holds_alternative<Cexp::While>(ps[1]->node));
  EXPECT_EQ(to_string(*ps[2]), "x := x + 1");
  EXPECT_EQ(point_of(*c), 0);
  EXPECT_EQ(point_of(*residual_skip()), kExitPoint);
}

TEST(Points, IfNumbersBranchesAfterItself) {
  auto c = parse("if x < 0 then y := 1 else (y := 2; z := 3)");
  auto ps = points(*c);
  ASSERT_EQ(ps.size(), 4u);
  EXPECT_EQ(to_string(*ps[3]), "z := 3");
}

TEST(Vars, AssignedAndFree) {
  auto c = parse("x := y + 1; if z < 0 then w := x else skip");
  EXPECT_EQ(assigned_vars(*c), (std::set<std::string>{"w", "x"}));
  EXPECT_EQ(free_vars(*c), (std::set<std::string>{"x", "y", "z"}));
}

TEST(Denote, Examples) {
  EXPECT_EQ(denote_aop(AOp::Add, 2, 3), std::optional<long long>(5));
  EXPECT_EQ(denote_aop(AOp::Div, 7, 0), std::nullopt);
  EXPECT_EQ(denote_aop(AOp::Div, -7, 2), std::optional<long long>(-3));
  EXPECT_EQ(denote_aop(AOp::Div, 7, -2), std::optional<long long>(-3));
  EXPECT_TRUE(denote_cmp(CmpOp::Lt, -1, 0));
  EXPECT_FALSE(denote_cmp(CmpOp::Eq, -1, 0));
  EXPECT_TRUE(denote_bop(BOp::Or, false, true));
}

TEST(Denote, OverflowIsAnError) {
  const long long big = std::numeric_limits<long long>::max();
  EXPECT_THROW(denote_aop(AOp::Add, big, 1), AnalysisError);
  EXPECT_THROW(denote_aop(AOp::Mul, big, 2), AnalysisError);
  EXPECT_THROW(denote_aop(AOp::Div, std::numeric_limits<long long>::min(), -1), AnalysisError);
}

TEST(Eval, Examples) {
  EXPECT_EQ(eval_aexp(*num(3), {}, IntWindow(2)), (std::set<long long>{3}));
  EXPECT_EQ(eval_aexp(*rand_exp(), {}, IntWindow(2)), (std::set<long long>{-2, -1, 0, 1, 2}));
  EXPECT_EQ(eval_aexp(*bin(AOp::Div, num(1), rand_exp()), {}, IntWindow(1)),
            (std::set<long long>{-1, 1}));
  EXPECT_EQ(eval_bexp(*cmp(CmpOp::Lt, rand_exp(), num(0)), {}, IntWindow(1)),
            (std::set<bool>{false, true}));
  EXPECT_EQ(eval_bexp(*bin(BOp::And, boolean(true), boolean(false)), {}, IntWindow(1)),
            (std::set<bool>{false}));
}

TEST(Eval, UnboundVariable) {
  try {
    eval_aexp(*var("y"), env_of({{"x", 1}}), IntWindow(1));
    FAIL();
  } catch (const AnalysisError& e) {
    EXPECT_NE(std::string(e.what()).find("'y'"), std::string::npos);
  }
}

TEST(Eval, AgreesWithReferenceOnRandomExpressions) {
  std::mt19937_64 rng(20240611);
  const Env env = env_of({{"x", 2}, {"y", -3}, {"z", 0}});
  const IntWindow w(kWindow);
  for (int i = 0; i < 1000; ++i) {
    auto ref = gen_a(rng, 4, env);
    auto e = aexp_of(ref.text);
    ASSERT_EQ(eval_aexp(*e, env, w), ref.values) << ref.text;
    auto refb = gen_b(rng, 4, env);
    auto b = bexp_of(refb.text);
    ASSERT_EQ(eval_bexp(*b, env, w), refb.values) << refb.text;
  }
}

TEST(Step, Examples) {
  const IntWindow w(1);
  EXPECT_TRUE(step({{}, skip()}, w).empty());

  auto loop = parse("while x < 3 do x := x + 1");
  auto next = step({env_of({{"x", 1}}), loop}, w);
  ASSERT_EQ(next.size(), 1u);
  EXPECT_TRUE(equal(*next[0].cmd, *seq(assign("x", bin(AOp::Add, var("x"), num(1))), loop)));
  EXPECT_EQ(next[0].env, env_of({{"x", 1}}));

  auto draws = step({env_of({{"x", 0}}), parse("x := rand")}, w);
  ASSERT_EQ(draws.size(), 3u);
  std::set<long long> xs;
  for (const auto& s : draws) {
    EXPECT_TRUE(s.terminal());
    xs.insert(s.env.at("x"));
  }
  EXPECT_EQ(xs, (std::set<long long>{-1, 0, 1}));
}

TEST(Step, SeqAndIfRules) {
  const IntWindow w(1);
  auto c = parse("skip; x := 1");
  auto next = step({{}, c}, w);
  ASSERT_EQ(next.size(), 1u);
  EXPECT_EQ(to_string(*next[0].cmd), "x := 1");

  auto branch = step({{}, parse("if rand < 0 then x := 1 else x := 2")}, w);
  ASSERT_EQ(branch.size(), 2u);

  auto dead = step({{}, parse("if 1 / 0 < 0 then skip else skip")}, w);
  EXPECT_TRUE(dead.empty());
}

TEST(Step, NeverDropsBindings) {
  const IntWindow w(2);
  for (const auto& p : fixtures::programs()) {
    Env init;
    for (const auto& v : free_vars(*parse(p.source))) init[v] = 0;
    for (const auto& v : assigned_vars(*parse(p.source))) init[v] = 0;
    auto r = reachable({init, parse(p.source)}, w, 200);
    for (const auto& s : r.states) {
      for (const auto& [k, _] : init) {
        EXPECT_TRUE(s.env.contains(k)) << p.name << " lost " << k;
      }
    }
  }
}

TEST(Reachable, Examples) {
  const IntWindow w(8);
  auto r = reachable({{}, skip()}, w, 10);
  ASSERT_EQ(r.states.size(), 1u);
  EXPECT_FALSE(r.exhausted);

  auto loop = reachable({env_of({{"x", 1}}), parse("while x < 3 do x := x + 1")}, w, 50);
  EXPECT_FALSE(loop.exhausted);
  EXPECT_EQ(terminal_envs(loop), (std::set<Env>{env_of({{"x", 3}})}));

  auto forever = reachable({env_of({{"x", 1}}), parse("while true do x := x + 1")}, w, 5);
  EXPECT_TRUE(forever.exhausted);
}

TEST(Reachable, DeterministicProgramsStayLinear) {
  const IntWindow w(2);
  auto r = reachable({env_of({{"x", 0}, {"y", 0}}), parse("x := 5; y := 0; while 0 < x do (y := y + x; x := x - 1)")},
                     w, 1000);
  EXPECT_FALSE(r.exhausted);
  EXPECT_EQ(terminal_envs(r), (std::set<Env>{env_of({{"x", 0}, {"y", 15}})}));
}
