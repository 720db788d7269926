#include <cgc/parity.hpp>

#include <gtest/gtest.h>

using namespace cgc;
using namespace cgc::parity;

TEST(Parity, NegativesFollowAbsoluteValue) {
  EXPECT_EQ(parity::parity(0), Parity::Even);
  EXPECT_EQ(parity::parity(-3), Parity::Odd);
  EXPECT_EQ(parity::parity(-4), Parity::Even);
  EXPECT_EQ(parity::parity(7), Parity::Odd);
}

TEST(Parity, SuccSharpTable) {
  EXPECT_EQ(succ_sharp(Parity::Even), Parity::Odd);
  EXPECT_EQ(succ_sharp(Parity::Odd), Parity::Even);
  auto f = succ_sharp_fn();
  EXPECT_EQ(f.table(), (std::vector<ElemId>{id(Parity::Odd), id(Parity::Even)}));
}

TEST(Parity, MuIsModTwo) {
  IntWindow w(5);
  auto gc = parity_gc(w);
  for (long long n : w.values()) {
    const bool even = n % 2 == 0; // C++ remainder keeps the sign, zero test is safe
    EXPECT_EQ(gc.mu()(id(Parity::Even)).contains(w.id(n)), even) << n;
    EXPECT_EQ(gc.mu()(id(Parity::Odd)).contains(w.id(n)), !even) << n;
  }
}

TEST(Parity, LawsAtSeveralWindows) {
  for (int bound : {1, 2, 8, 64}) {
    IntWindow w(bound);
    auto gc = parity_gc(w);
    EXPECT_TRUE(check_correspondence(gc).passed()) << bound;
    EXPECT_TRUE(check_expansive(gc).passed()) << bound;
    EXPECT_TRUE(check_reductive(gc).passed()) << bound;
    auto plus = parity_plus_gc(w);
    EXPECT_TRUE(check_correspondence(plus).passed()) << bound;
  }
}

TEST(Parity, RejectsEmptyWindow) { EXPECT_THROW(parity_gc(IntWindow(0)), DomainError); }

TEST(Parity, SuccIsSoundAndOptimal) {
  IntWindow in(10), out(11);
  auto gin = parity_gc(in);
  auto gout = parity_gc(out);
  auto f = succ_fn(in, out);
  for (auto v : kAllVariants) {
    EXPECT_TRUE(check_soundness(f, succ_sharp_fn(), gin, gout, v).passed());
  }
  EXPECT_TRUE(check_optimality(f, succ_sharp_fn(), gin, gout).passed());
}

TEST(Parity, SuccSoundnessCounterexampleNamesTheWitness) {
  IntWindow in(2), out(3);
  auto gin = parity_gc(in);
  auto gout = parity_gc(out);
  auto wrong = MonotoneFn::identity(parity_domain());
  auto r = check_soundness(succ_fn(in, out), wrong, gin, gout, Variant::EtaMu);
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(r.has_counterexample({{"y", "even"}, {"x", "0"}, {"x'", "1"}}));
}

TEST(Parity, MaxSharpTable) {
  using P = ParityPlus;
  EXPECT_EQ(max_sharp(P::Even, P::Even), P::Even);
  EXPECT_EQ(max_sharp(P::Odd, P::Odd), P::Odd);
  EXPECT_EQ(max_sharp(P::Even, P::Odd), P::Any);
  EXPECT_EQ(max_sharp(P::Any, P::Even), P::Any);
}

TEST(Parity, MaxThroughProductIsSoundAndOptimal) {
  IntWindow w(4);
  auto g = parity_plus_gc(w);
  auto p = product_gc(g, g);
  auto f = max_fn(p.concrete, w);
  auto fs = max_sharp_fn(p.abstract);
  EXPECT_TRUE(check_soundness(f, fs, p.gc, g, Variant::EtaMu).passed());
  EXPECT_TRUE(check_optimality(f, fs, p.gc, g).passed());
}
