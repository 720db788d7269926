#include <cgc/sign.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cgc;
using namespace cgc::sign;
using whilelang::parse;

namespace {

oracle::Mask m(Sign s) { return oracle::mask(name(s)); }

unsigned bool_mask(AbsBool b) {
  switch (b) {
  case AbsBool::None: return 0;
  case AbsBool::FF: return 1;
  case AbsBool::TT: return 2;
  case AbsBool::Any: return 3;
  }
  return 0;
}

const AOp kAops[] = {AOp::Add, AOp::Sub, AOp::Mul, AOp::Div};

oracle::BinOp oracle_op(AOp op) {
  switch (op) {
  case AOp::Add: return oracle::plus;
  case AOp::Sub: return oracle::minus;
  case AOp::Mul: return oracle::times;
  case AOp::Div: return oracle::divide;
  }
  return oracle::plus;
}

whilelang::Env env_of(std::initializer_list<std::pair<const std::string, long long>> xs) {
  return whilelang::Env(xs);
}

} // namespace

TEST(SignLattice, OrderIsInclusionOfAtoms) {
  for (Sign a : kAllSigns) {
    for (Sign b : kAllSigns) {
      EXPECT_EQ(leq(a, b), oracle::sub(m(a), m(b))) << name(a) << " " << name(b);
      EXPECT_EQ(m(join(a, b)), m(a) | m(b));
      EXPECT_EQ(m(meet(a, b)), m(a) & m(b));
      EXPECT_EQ(sign_domain()->leq(id(a), id(b)), leq(a, b));
    }
  }
}

TEST(SignLattice, NamesRoundTrip) {
  for (Sign s : kAllSigns) {
    EXPECT_EQ(parse_sign(name(s)), std::optional<Sign>(s));
  }
  EXPECT_EQ(parse_sign("zero"), std::nullopt);
}

TEST(SignGC, Examples) {
  IntWindow w(2);
  auto gc = sign_gc(w);
  EXPECT_EQ(eta(0), Sign::Zer);
  EXPECT_EQ(gc.abstract()->label(gc.eta()(w.id(0))), "zer");
  EXPECT_EQ(gc.mu()(id(Sign::NZer)).to_string(), "{-2,-1,1,2}");
  EXPECT_TRUE(gc.mu()(id(Sign::None)).empty());
}

TEST(SignGC, MuMatchesAtomMembership) {
  IntWindow w(8);
  auto gc = sign_gc(w);
  for (Sign s : kAllSigns) {
    for (long long i : w.values()) {
      EXPECT_EQ(gc.mu()(id(s)).contains(w.id(i)), oracle::member(i, m(s)));
      EXPECT_EQ(in_mu(i, s), oracle::member(i, m(s)));
    }
  }
}

TEST(SignGC, Laws) {
  for (int bound : {1, 3, 8}) {
    auto gc = sign_gc(IntWindow(bound));
    EXPECT_TRUE(check_correspondence(gc).passed());
    EXPECT_TRUE(check_expansive(gc).passed());
    EXPECT_TRUE(check_reductive(gc).passed());
  }
  auto b = absbool_gc();
  EXPECT_TRUE(check_correspondence(b).passed());
  EXPECT_TRUE(check_expansive(b).passed());
  EXPECT_TRUE(check_reductive(b).passed());
}

TEST(AbsAop, Examples) {
  EXPECT_EQ(abs_aop(AOp::Add, Sign::Pos, Sign::Pos), Sign::Pos);
  EXPECT_EQ(abs_aop(AOp::Add, Sign::Pos, Sign::Neg), Sign::Any);
  EXPECT_EQ(abs_aop(AOp::Add, Sign::Zer, Sign::Zer), Sign::Zer);
  EXPECT_EQ(abs_aop(AOp::Div, Sign::Pos, Sign::Zer), Sign::None);
  EXPECT_EQ(abs_aop(AOp::Div, Sign::Pos, Sign::Pos), Sign::PosZ);
  EXPECT_EQ(abs_aop(AOp::Div, Sign::Neg, Sign::Pos), Sign::NegZ);
  EXPECT_EQ(abs_aop(AOp::Mul, Sign::Zer, Sign::Any), Sign::Zer);
}

TEST(AbsAop, EqualsBruteForceBestOnWindowEight) {
  for (AOp op : kAops) {
    for (Sign a : kAllSigns) {
      for (Sign b : kAllSigns) {
        EXPECT_EQ(m(abs_aop(op, a, b)), oracle::best(oracle_op(op), m(a), m(b), 8))
            << whilelang::symbol(op) << " " << name(a) << " " << name(b);
      }
    }
  }
}

TEST(AbsAop, PlusAgreesWithFiveCaseJoinAwayFromNone) {
  int disagreements = 0;
  for (Sign a : kAllSigns) {
    for (Sign b : kAllSigns) {
      const auto lit = oracle::five_case_plus(m(a), m(b));
      if (a == Sign::None || b == Sign::None) {
        disagreements += lit != m(abs_aop(AOp::Add, a, b));
        continue;
      }
      EXPECT_EQ(m(abs_aop(AOp::Add, a, b)), lit) << name(a) << " " << name(b);
    }
  }
  // the literal join keeps the other operand's atoms when one side is none
  EXPECT_EQ(disagreements, 12);
}

TEST(AbsAop, MinusIsPlusOfNegation) {
  for (Sign a : kAllSigns) {
    for (Sign b : kAllSigns) {
      EXPECT_EQ(abs_aop(AOp::Sub, a, b), abs_aop(AOp::Add, a, negate(b)));
    }
  }
}

TEST(AbsAop, TablesAreCheckedThroughTheLibraryToo) {
  IntWindow w(4);
  auto out = result_window(w);
  auto in_gc = sign_gc(w);
  auto pin = product_gc(in_gc, in_gc);
  auto gout = sign_gc(out);
  for (AOp op : kAops) {
    auto f = aop_fn(op, pin.concrete, w, out);
    auto fs = aop_sharp_fn(op, pin.abstract);
    EXPECT_TRUE(check_soundness(f, fs, pin.gc, gout, Variant::MuEta).passed());
    EXPECT_TRUE(check_optimality(f, fs, pin.gc, gout).passed()) << whilelang::symbol(op);
  }
}

TEST(AbsCmp, Examples) {
  EXPECT_EQ(abs_cmp(CmpOp::Lt, Sign::Neg, Sign::Pos), AbsBool::TT);
  EXPECT_EQ(abs_cmp(CmpOp::Eq, Sign::Pos, Sign::Pos), AbsBool::Any);
  EXPECT_EQ(abs_bop(BOp::And, AbsBool::TT, AbsBool::Any), AbsBool::Any);
  EXPECT_EQ(abs_cmp(CmpOp::Eq, Sign::None, Sign::Pos), AbsBool::None);
}

TEST(AbsCmp, EqualsBruteForceBest) {
  for (CmpOp op : {CmpOp::Lt, CmpOp::Eq}) {
    for (Sign a : kAllSigns) {
      for (Sign b : kAllSigns) {
        unsigned best = 0;
        for (long long i = -8; i <= 8; ++i) {
          for (long long j = -8; j <= 8; ++j) {
            if (oracle::member(i, m(a)) && oracle::member(j, m(b))) {
              const bool r = op == CmpOp::Lt ? i < j : i == j;
              best |= r ? 2u : 1u;
            }
          }
        }
        EXPECT_EQ(bool_mask(abs_cmp(op, a, b)), best)
            << oracle::bool_name(best) << " for " << name(a) << " " << name(b);
      }
    }
  }
}

TEST(AbsBop, EqualsBruteForceBest) {
  for (BOp op : {BOp::Or, BOp::And}) {
    for (AbsBool a : kAllAbsBools) {
      for (AbsBool b : kAllAbsBools) {
        unsigned best = 0;
        for (int x = 0; x < 2; ++x) {
          for (int y = 0; y < 2; ++y) {
            if ((bool_mask(a) >> x & 1) && (bool_mask(b) >> y & 1)) {
              const bool r = op == BOp::Or ? (x || y) : (x && y);
              best |= r ? 2u : 1u;
            }
          }
        }
        EXPECT_EQ(bool_mask(abs_bop(op, a, b)), best);
      }
    }
  }
}

TEST(EnvGC, Examples) {
  IntWindow w(2);
  EnvGC g({"x", "y"}, w);
  EXPECT_EQ(to_string(eta_env(env_of({{"x", -1}, {"y", 0}}))), "{x: neg, y: zer}");
  const auto& gc = g.gc();
  EXPECT_EQ(gc.concrete()->size(), 25u);
  EXPECT_EQ(gc.abstract()->size(), 64u);
  EXPECT_TRUE(gc.mu()(g.abs_id({{"x", Sign::None}, {"y", Sign::Any}})).empty());
  EXPECT_TRUE(check_correspondence(gc).passed());
  EXPECT_TRUE(check_expansive(gc).passed());
  EXPECT_TRUE(check_reductive(gc).passed());
  for (ElemId x = 0; x < gc.concrete()->size(); ++x) {
    EXPECT_EQ(g.id(g.env(x)), x);
    EXPECT_EQ(g.abs_env(gc.eta()(x)), eta_env(g.env(x)));
  }
}

TEST(AbsEnvOps, PointwiseOrderAndJoin) {
  AbsEnv a{{"x", Sign::Neg}, {"y", Sign::Zer}};
  AbsEnv b{{"x", Sign::Pos}, {"y", Sign::Zer}};
  EXPECT_EQ(join(a, b), (AbsEnv{{"x", Sign::NZer}, {"y", Sign::Zer}}));
  EXPECT_TRUE(leq(a, join(a, b)));
  EXPECT_FALSE(leq(a, b));
  EXPECT_FALSE(unreachable(a));
  EXPECT_TRUE(unreachable(AbsEnv{{"x", Sign::None}}));
  EXPECT_EQ(to_json(a).dump(), R"({"x":"neg","y":"zer"})");
}

TEST(AbsAexp, Examples) {
  EXPECT_EQ(abs_aexp(*whilelang::rand_exp(), {}), Sign::Any);
  EXPECT_EQ(abs_aexp(*whilelang::var("x"), {{"x", Sign::NegZ}}), Sign::NegZ);
  auto e = whilelang::bin(AOp::Add, whilelang::var("x"), whilelang::num(1));
  EXPECT_EQ(abs_aexp(*e, {{"x", Sign::Pos}}), Sign::Pos);
  EXPECT_THROW(abs_aexp(*whilelang::var("q"), {{"x", Sign::Pos}}), AnalysisError);
}

TEST(AbsBexp, Examples) {
  auto lt0 = whilelang::cmp(CmpOp::Lt, whilelang::var("x"), whilelang::num(0));
  EXPECT_EQ(abs_bexp(*whilelang::boolean(true), {}), AbsBool::TT);
  EXPECT_EQ(abs_bexp(*lt0, {{"x", Sign::Neg}}), AbsBool::TT);
  EXPECT_EQ(abs_bexp(*lt0, {{"x", Sign::Any}}), AbsBool::Any);
}

TEST(AbsAexp, SoundOnRandomExpressions) {
  std::mt19937_64 rng(77);
  const IntWindow w(4);
  const std::vector<std::string> names = {"x", "y"};
  std::function<whilelang::AexpPtr(int)> gen = [&](int depth) -> whilelang::AexpPtr {
    const int k = std::uniform_int_distribution<int>(0, depth > 1 ? 5 : 2)(rng);
    if (k == 0) return whilelang::num(std::uniform_int_distribution<long long>(-3, 3)(rng));
    if (k == 1) return whilelang::var(names[rng() % 2]);
    if (k == 2) return (rng() % 4 == 0) ? whilelang::rand_exp() : whilelang::var(names[rng() % 2]);
    return whilelang::bin(kAops[rng() % 4], gen(depth - 1), gen(depth - 1));
  };
  for (int n = 0; n < 1000; ++n) {
    AbsEnv abs{{"x", kAllSigns[1 + rng() % 7]}, {"y", kAllSigns[1 + rng() % 7]}};
    // a concrete env inside mu(abs)
    whilelang::Env env;
    for (const auto& [v, s] : abs) {
      std::vector<long long> members;
      for (long long i : w.values()) {
        if (oracle::member(i, m(s))) members.push_back(i);
      }
      env[v] = members[rng() % members.size()];
    }
    auto e = gen(4);
    const Sign got = abs_aexp(*e, abs);
    for (long long i : whilelang::eval_aexp(*e, env, w)) {
      ASSERT_TRUE(oracle::member(i, m(got)))
          << whilelang::to_string(*e) << " = " << i << " under " << to_string(abs);
    }
  }
}

TEST(AbsStep, Examples) {
  auto inc = parse("x := x + 1");
  auto next = abs_step({{{"x", Sign::Pos}}, inc});
  ASSERT_EQ(next.size(), 1u);
  EXPECT_TRUE(next[0].cmd->is_skip());
  EXPECT_EQ(next[0].env, (AbsEnv{{"x", Sign::Pos}}));

  auto loop = parse("while x < 0 do skip");
  EXPECT_EQ(abs_step({{{"x", Sign::Neg}}, loop}).size(), 1u);
  EXPECT_FALSE(abs_step({{{"x", Sign::Neg}}, loop})[0].cmd->is_skip());
  EXPECT_EQ(abs_step({{{"x", Sign::Any}}, loop}).size(), 2u);
}

TEST(AbsStep, PrunesUnreachable) {
  std::size_t pruned = 0;
  auto next = abs_step({{{"x", Sign::Pos}}, parse("x := x / 0")}, &pruned);
  EXPECT_TRUE(next.empty());
  EXPECT_EQ(pruned, 1u);
}

TEST(Analyze, Examples) {
  const AbsEnv any_x{{"x", Sign::Any}};
  EXPECT_EQ(analyze(parse("x := 1"), any_x).final_env, (AbsEnv{{"x", Sign::Pos}}));
  EXPECT_EQ(analyze(parse("x := 1; while x < 3 do x := x + 1"), any_x).final_env,
            (AbsEnv{{"x", Sign::Pos}}));
  EXPECT_EQ(analyze(parse("x := rand"), any_x).final_env, any_x);
}

TEST(Analyze, PointEnvsAndJson) {
  auto r = analyze(parse("x := 1; while x < 3 do x := x + 1"), {{"x", Sign::Any}});
  ASSERT_EQ(r.points.size(), 3u);
  EXPECT_EQ(r.at(0), (AbsEnv{{"x", Sign::Any}}));
  EXPECT_EQ(r.at(1), (AbsEnv{{"x", Sign::Pos}}));
  EXPECT_EQ(r.at(whilelang::kExitPoint), r.final_env);
  auto j = to_json(r);
  EXPECT_EQ(j["final"]["x"], "pos");
  EXPECT_EQ(j["program_points"].size(), 3u);
}

TEST(Analyze, DeadBranchIsNeverReached) {
  auto r = analyze(parse("x := 1; if x < 0 then y := 0 - 1 else y := 1"),
                   uniform_env({"x", "y"}, Sign::Any));
  EXPECT_EQ(r.final_env.at("y"), Sign::Pos);
  EXPECT_TRUE(unreachable(r.at(2))); // then-branch
  EXPECT_FALSE(unreachable(r.at(3)));
}

TEST(Analyze, UnboundVariableIsAnError) {
  EXPECT_THROW(analyze(parse("x := y"), {{"x", Sign::Any}}), AnalysisError);
}

TEST(Analyze, SoundAgainstConcreteRunsAtWindowTwo) {
  const IntWindow w(2);
  for (const auto& p : fixtures::programs()) {
    auto prog = parse(p.source);
    std::set<std::string> vs = whilelang::assigned_vars(*prog);
    for (const auto& v : whilelang::free_vars(*prog)) vs.insert(v);
    std::vector<std::string> vars(vs.begin(), vs.end());
    auto r = analyze(prog, uniform_env(vars, Sign::Any));
    whilelang::Env init;
    for (const auto& v : vars) init[v] = 1;
    auto reach = whilelang::reachable({init, prog}, w, 500);
    for (const auto& s : reach.states) {
      const AbsEnv& at = r.at(whilelang::point_of(*s.cmd));
      EXPECT_TRUE(leq(eta_env(s.env), at)) << p.name << " at " << whilelang::state_key(s);
    }
  }
}

TEST(Analyze, MonotoneInTheInitialEnv) {
  for (const auto& p : fixtures::programs()) {
    auto prog = parse(p.source);
    std::set<std::string> vs = whilelang::assigned_vars(*prog);
    for (const auto& v : whilelang::free_vars(*prog)) vs.insert(v);
    std::vector<std::string> vars(vs.begin(), vs.end());
    auto lo = analyze(prog, uniform_env(vars, Sign::Pos));
    auto hi = analyze(prog, uniform_env(vars, Sign::Any));
    ASSERT_EQ(lo.points.size(), hi.points.size());
    for (std::size_t i = 0; i < lo.points.size(); ++i) {
      EXPECT_TRUE(leq(lo.points[i].env, hi.points[i].env)) << p.name << " point " << i;
    }
    EXPECT_TRUE(leq(lo.final_env, hi.final_env)) << p.name;
  }
}
