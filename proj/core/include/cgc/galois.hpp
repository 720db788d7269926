#pragma once

/*
 * Galois connections as first-class values.
 *
 * Three flavors over finite carriers:
 *
 *   ConstructiveGC  eta : C -> A (pure),   mu : A -> P(C)
 *   KleisliGC       kalpha : C -> P(A),    kgamma : A -> P(C)
 *   ClassicalGC     alpha : P(C) -> P(A),  gamma : P(A) -> P(C)
 *
 * with liftings constructive -> Kleisli -> classical, the lowering
 * classical -> Kleisli, and `induce` (Kleisli -> constructive), which
 * recovers eta as the maximum of each kalpha(x) and fails with
 * NotLiftedForm when some kalpha(x) has none.
 *
 * Every law is checked by exhaustive enumeration and reported as a
 * LawReport. Soundness and optimality checks take an input and an output
 * connection so that operators whose results leave the input window (succ,
 * binary arithmetic) can be checked without truncation; passing the same
 * connection twice gives the endofunction form.
 */

#include <cgc/law_report.hpp>
#include <cgc/order.hpp>

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

namespace cgc {

class ConstructiveGC {
 public:
  ConstructiveGC(std::string name, MonotoneFn eta, KleisliFn mu,
                 std::optional<int> window = std::nullopt);

  const std::string& name() const { return m_name; }
  const DomainRef& concrete() const { return m_eta.dom(); }
  const DomainRef& abstract() const { return m_eta.cod(); }
  const MonotoneFn& eta() const { return m_eta; }
  const KleisliFn& mu() const { return m_mu; }
  std::optional<int> window() const { return m_window; }
  std::string carrier() const;

 private:
  std::string m_name;
  MonotoneFn m_eta;
  KleisliFn m_mu;
  std::optional<int> m_window;
};

class KleisliGC {
 public:
  KleisliGC(std::string name, KleisliFn kalpha, KleisliFn kgamma,
            std::optional<int> window = std::nullopt);

  const std::string& name() const { return m_name; }
  const DomainRef& concrete() const { return m_kalpha.dom(); }
  const DomainRef& abstract() const { return m_kalpha.cod(); }
  const KleisliFn& kalpha() const { return m_kalpha; }
  const KleisliFn& kgamma() const { return m_kgamma; }
  std::optional<int> window() const { return m_window; }
  std::string carrier() const;

 private:
  std::string m_name;
  KleisliFn m_kalpha;
  KleisliFn m_kgamma;
  std::optional<int> m_window;
};

class ClassicalGC {
 public:
  using Map = std::function<DownSet(const DownSet&)>;

  ClassicalGC(std::string name, DomainRef concrete, DomainRef abstract, Map alpha,
              Map gamma, std::optional<int> window = std::nullopt);

  const std::string& name() const { return m_name; }
  const DomainRef& concrete() const { return m_concrete; }
  const DomainRef& abstract() const { return m_abstract; }
  DownSet alpha(const DownSet& xs) const;
  DownSet gamma(const DownSet& ys) const;
  std::optional<int> window() const { return m_window; }
  std::string carrier() const;

 private:
  std::string m_name;
  DomainRef m_concrete;
  DomainRef m_abstract;
  Map m_alpha;
  Map m_gamma;
  std::optional<int> m_window;
};

/// `induce` could not pick a pure extraction: kalpha(witness) has no maximum.
struct NotLiftedForm {
  ElemId witness;
  std::string label;
  std::string image;
};

using Induced = std::variant<ConstructiveGC, NotLiftedForm>;

// Constructive laws.
LawReport check_correspondence(const ConstructiveGC& gc);
LawReport check_expansive(const ConstructiveGC& gc);
LawReport check_reductive(const ConstructiveGC& gc);

// Kleisli laws: ret <= kgamma (*) kalpha and kalpha (*) kgamma <= ret.
LawReport check_kleisli_expansive(const KleisliGC& gc);
LawReport check_kleisli_reductive(const KleisliGC& gc);

// N <= gamma(P) <=> alpha(N) <= P over the given families of downsets.
// `sampling` describes how the families were produced (goes in the report).
LawReport check_classical_correspondence(const ClassicalGC& gc,
                                         std::span<const DownSet> concrete_sets,
                                         std::span<const DownSet> abstract_sets,
                                         std::string_view sampling);

KleisliGC lift_to_kleisli(const ConstructiveGC& gc);
ClassicalGC lift_to_classical(const KleisliGC& gc);
KleisliGC lower_to_kleisli(const ClassicalGC& gc);
Induced induce(const KleisliGC& gc);

enum class Variant { EtaMu, MuMu, EtaEta, MuEta };
inline constexpr Variant kAllVariants[] = {Variant::EtaMu, Variant::MuMu,
                                           Variant::EtaEta, Variant::MuEta};
std::string_view to_string(Variant v);

// f : in.concrete -> P(out.concrete), fsharp : in.abstract -> out.abstract.
LawReport check_soundness(const KleisliFn& f, const MonotoneFn& fsharp,
                          const ConstructiveGC& in, const ConstructiveGC& out,
                          Variant variant);
LawReport check_soundness(const KleisliFn& f, const MonotoneFn& fsharp,
                          const ConstructiveGC& gc, Variant variant);

// y |-> join { eta_out(x') | x in mu_in(y), x' in f(x) }.
// Throws LatticeError when the join does not exist.
MonotoneFn best_abstraction(const KleisliFn& f, const ConstructiveGC& in,
                            const ConstructiveGC& out);
MonotoneFn best_abstraction(const KleisliFn& f, const ConstructiveGC& gc);

// Table equality with best_abstraction; counterexamples carry the diff.
LawReport check_optimality(const KleisliFn& f, const MonotoneFn& fsharp,
                           const ConstructiveGC& in, const ConstructiveGC& out);
LawReport check_optimality(const KleisliFn& f, const MonotoneFn& fsharp,
                           const ConstructiveGC& gc);

// kalpha_out (*) f (*) kgamma_in <= pure(fsharp), pointwise.
LawReport check_kleisli_soundness(const KleisliFn& f, const MonotoneFn& fsharp,
                                  const KleisliGC& in, const KleisliGC& out);

// alpha_out . f* . gamma_in <= fsharp* over the given abstract downsets.
LawReport check_classical_soundness(const KleisliFn& f, const MonotoneFn& fsharp,
                                    const ClassicalGC& in, const ClassicalGC& out,
                                    std::span<const DownSet> abstract_sets,
                                    std::string_view sampling);

/// Componentwise connection between C1 x C2 and A1 x A2.
struct ProductGC {
  ProductDomain concrete;
  ProductDomain abstract;
  ConstructiveGC gc;
};
ProductGC product_gc(const ConstructiveGC& left, const ConstructiveGC& right);

/// Independent attributes: P(A x B) against P(A) x P(B). The pair of
/// component sets is encoded as one downset over the disjoint sum A + B,
/// whose inclusion order is exactly the product of the two inclusions.
struct IaConnection {
  ProductDomain pairs;
  DomainRef components; // labels "l:<a>" then "r:<b>"
  ClassicalGC gc;

  DownSet components_of(const DownSet& left, const DownSet& right) const;
  std::pair<DownSet, DownSet> split(const DownSet& components) const;
};
IaConnection ia_connection(const DomainRef& a, const DomainRef& b);

} // namespace cgc
