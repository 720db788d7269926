#include <cgc/galois.hpp>
#include <cgc/parity.hpp>
#include <cgc/sign.hpp>

#include <gtest/gtest.h>

using namespace cgc;

namespace {

DomainRef two() { return FiniteDomain::discrete("two", {"a", "b"}); }

DomainRef lohi() {
  const FiniteDomain::Cover covers[] = {{0, 1}};
  return FiniteDomain::from_hasse("lohi", {"lo", "hi"}, covers);
}

// a |-> lo, b |-> hi; mu(lo) = {a}, mu(hi) = {a, b}
ConstructiveGC good() {
  auto c = two();
  auto a = lohi();
  return ConstructiveGC("good", MonotoneFn(c, a, {0, 1}),
                        KleisliFn::tabulate(a, c, [](ElemId y) {
                          return y == 0 ? std::vector<ElemId>{0} : std::vector<ElemId>{0, 1};
                        }));
}

// mu(lo) forgets a
ConstructiveGC forgetful() {
  auto c = two();
  auto a = lohi();
  return ConstructiveGC("forgetful", MonotoneFn(c, a, {0, 1}),
                        KleisliFn::tabulate(a, c, [](ElemId y) {
                          return y == 0 ? std::vector<ElemId>{} : std::vector<ElemId>{0, 1};
                        }));
}

// mu(lo) admits b although eta(b) = hi
ConstructiveGC loose() {
  auto c = two();
  auto a = lohi();
  return ConstructiveGC("loose", MonotoneFn(c, a, {0, 1}),
                        KleisliFn::tabulate(a, c, [](ElemId) { return std::vector<ElemId>{0, 1}; }));
}

} // namespace

TEST(ConstructiveGC, LawsHoldOnAGoodConnection) {
  auto gc = good();
  EXPECT_TRUE(check_correspondence(gc).passed());
  EXPECT_TRUE(check_expansive(gc).passed());
  EXPECT_TRUE(check_reductive(gc).passed());
}

TEST(ConstructiveGC, ExpansiveFailsWhenMuDropsAWitness) {
  auto gc = forgetful();
  auto r = check_expansive(gc);
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(r.has_counterexample({{"x", "a"}}));
  EXPECT_FALSE(check_correspondence(gc).passed());
  EXPECT_TRUE(check_reductive(gc).passed());
}

TEST(ConstructiveGC, ReductiveFailsWhenMuOverApproximates) {
  auto gc = loose();
  auto r = check_reductive(gc);
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(r.has_counterexample({{"x", "b"}, {"y", "lo"}}));
  EXPECT_TRUE(check_expansive(gc).passed());
}

TEST(ConstructiveGC, RejectsMismatchedCarriers) {
  auto c = two();
  auto a = lohi();
  EXPECT_THROW(ConstructiveGC("bad", MonotoneFn(c, a, {0, 1}),
                              KleisliFn::tabulate(a, a, [](ElemId y) { return std::vector<ElemId>{y}; })),
               DomainError);
}

TEST(KleisliGC, LiftedLawsFollowConstructiveOnes) {
  auto ok = lift_to_kleisli(good());
  EXPECT_TRUE(check_kleisli_expansive(ok).passed());
  EXPECT_TRUE(check_kleisli_reductive(ok).passed());
  EXPECT_FALSE(check_kleisli_expansive(lift_to_kleisli(forgetful())).passed());
  EXPECT_FALSE(check_kleisli_reductive(lift_to_kleisli(loose())).passed());
}

TEST(Induce, RoundTripsThroughKleisli) {
  auto gc = good();
  auto induced = induce(lift_to_kleisli(gc));
  ASSERT_TRUE(std::holds_alternative<ConstructiveGC>(induced));
  const auto& back = std::get<ConstructiveGC>(induced);
  EXPECT_EQ(back.eta(), gc.eta());
  EXPECT_EQ(back.mu(), gc.mu());
}

TEST(Induce, LowerOfLiftIsIdentity) {
  auto k = lift_to_kleisli(good());
  auto lowered = lower_to_kleisli(lift_to_classical(k));
  EXPECT_EQ(lowered.kalpha(), k.kalpha());
  EXPECT_EQ(lowered.kgamma(), k.kgamma());
}

TEST(Induce, IndependentAttributesHaveNoPureExtraction) {
  auto d = two();
  auto ia = ia_connection(d, d);
  auto induced = induce(lower_to_kleisli(ia.gc));
  ASSERT_TRUE(std::holds_alternative<NotLiftedForm>(induced));
  EXPECT_FALSE(std::get<NotLiftedForm>(induced).label.empty());
}

TEST(IaConnection, ComponentsRoundTrip) {
  auto d = two();
  auto ia = ia_connection(d, d);
  const ElemId a[] = {0};
  const ElemId b[] = {1};
  DownSet l(d, std::span<const ElemId>(a));
  DownSet r(d, std::span<const ElemId>(b));
  auto [l2, r2] = ia.split(ia.components_of(l, r));
  EXPECT_EQ(l2, l);
  EXPECT_EQ(r2, r);
}

TEST(IaConnection, ClassicalCorrespondenceHolds) {
  auto d = two();
  auto ia = ia_connection(d, d);
  auto cs = all_downsets(ia.gc.concrete());
  auto as = all_downsets(ia.gc.abstract());
  EXPECT_TRUE(check_classical_correspondence(ia.gc, cs, as, "exhaustive").passed());
}

TEST(ClassicalGC, LiftedCorrespondenceFailsForBrokenConnection) {
  auto cl = lift_to_classical(lift_to_kleisli(forgetful()));
  auto cs = all_downsets(cl.concrete());
  auto as = all_downsets(cl.abstract());
  EXPECT_FALSE(check_classical_correspondence(cl, cs, as, "exhaustive").passed());
}

TEST(Soundness, VariantsAgreeOnAGoodAndABadTransfer) {
  IntWindow in(6), out(7);
  auto gin = parity::parity_gc(in);
  auto gout = parity::parity_gc(out);
  auto f = parity::succ_fn(in, out);
  auto good_sharp = parity::succ_sharp_fn();
  auto bad_sharp = MonotoneFn::identity(parity::parity_domain());
  for (auto v : kAllVariants) {
    EXPECT_TRUE(check_soundness(f, good_sharp, gin, gout, v).passed()) << to_string(v);
    EXPECT_FALSE(check_soundness(f, bad_sharp, gin, gout, v).passed()) << to_string(v);
  }
}

TEST(Soundness, KleisliAndClassicalFormsAgree) {
  IntWindow in(4), out(5);
  auto gin = parity::parity_gc(in);
  auto gout = parity::parity_gc(out);
  auto f = parity::succ_fn(in, out);
  auto kin = lift_to_kleisli(gin);
  auto kout = lift_to_kleisli(gout);
  auto cin = lift_to_classical(kin);
  auto cout_ = lift_to_classical(kout);
  auto as = all_downsets(gin.abstract());
  auto good_sharp = parity::succ_sharp_fn();
  auto bad_sharp = MonotoneFn::identity(parity::parity_domain());
  EXPECT_TRUE(check_kleisli_soundness(f, good_sharp, kin, kout).passed());
  EXPECT_FALSE(check_kleisli_soundness(f, bad_sharp, kin, kout).passed());
  EXPECT_TRUE(check_classical_soundness(f, good_sharp, cin, cout_, as, "exhaustive").passed());
  EXPECT_FALSE(check_classical_soundness(f, bad_sharp, cin, cout_, as, "exhaustive").passed());
}

TEST(BestAbstraction, SuccOnParityIsFlip) {
  IntWindow in(5), out(6);
  auto best = best_abstraction(parity::succ_fn(in, out), parity::parity_gc(in),
                               parity::parity_gc(out));
  EXPECT_EQ(best, parity::succ_sharp_fn());
}

TEST(BestAbstraction, ThrowsWithoutAJoin) {
  // the image {a, b} of the discrete carrier has no join in itself
  auto d = two();
  auto id_gc = ConstructiveGC("id", MonotoneFn::identity(d),
                              KleisliFn::tabulate(d, d, [](ElemId y) { return std::vector<ElemId>{y}; }));
  auto both = KleisliFn::tabulate(d, d, [](ElemId) { return std::vector<ElemId>{0, 1}; });
  EXPECT_THROW(best_abstraction(both, id_gc), LatticeError);
}

TEST(Optimality, ReportsTheDiff) {
  IntWindow in(3), out(4);
  auto gin = parity::parity_plus_gc(in);
  auto gout = parity::parity_plus_gc(out);
  auto f = parity::succ_fn(in, out);
  // sound but imprecise: everything goes to any
  auto top = MonotoneFn::constant(parity::parity_plus_domain(), parity::parity_plus_domain(),
                                  parity::id(parity::ParityPlus::Any));
  EXPECT_TRUE(check_soundness(f, top, gin, gout, Variant::EtaMu).passed());
  auto r = check_optimality(f, top, gin, gout);
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(r.has_counterexample({{"y", "even"}}));
}

TEST(ProductGC, ComponentwiseLaws) {
  IntWindow w(3);
  auto p = product_gc(parity::parity_plus_gc(w), sign::sign_gc(w));
  EXPECT_TRUE(check_correspondence(p.gc).passed());
  EXPECT_TRUE(check_expansive(p.gc).passed());
  EXPECT_TRUE(check_reductive(p.gc).passed());
  EXPECT_EQ(p.gc.concrete()->size(), 49u);
  EXPECT_EQ(p.gc.abstract()->size(), 24u);
}

TEST(LawReport, JsonShape) {
  auto r = check_expansive(forgetful());
  nlohmann::json j = r;
  EXPECT_EQ(j["law"], "expansive");
  EXPECT_EQ(j["verdict"], "fail");
  EXPECT_EQ(j["counterexamples"].size(), r.counterexamples().size());
}
