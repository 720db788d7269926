#pragma once

/*
 * Finite posets, monotone maps, and the downward-closed powerset monad.
 *
 * Every carrier is a FiniteDomain: an interned list of labelled elements
 * plus a decidable partial order stored as up/down bitsets. A DownSet is a
 * downward-closed subset of a carrier, the executable stand-in for a
 * monotonic powerset. ret/bind/pure/kcompose are the monad operations over
 * DownSets; KleisliFn is the effectful function space A -> P(B).
 *
 * All values are immutable once constructed and may be shared freely.
 */

#include <cgc/errors.hpp>

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cgc {

using ElemId = std::uint32_t;
using Bits = boost::dynamic_bitset<>;

class FiniteDomain;
using DomainRef = std::shared_ptr<const FiniteDomain>;

class FiniteDomain {
 public:
  using Cover = std::pair<ElemId, ElemId>; // (lower, upper)

  // Closes `covers` under reflexivity and transitivity. Throws DomainError
  // on duplicate labels, out-of-range ids, or a cycle (antisymmetry).
  static DomainRef from_hasse(std::string name,
                              std::vector<std::string> labels,
                              std::span<const Cover> covers);

  // `leq` must already be a partial order; it is validated, not closed.
  static DomainRef from_order(std::string name,
                              std::vector<std::string> labels,
                              const std::function<bool(ElemId, ElemId)>& leq);

  static DomainRef discrete(std::string name, std::vector<std::string> labels);

  const std::string& name() const { return m_name; }
  std::size_t size() const { return m_labels.size(); }
  bool contains(ElemId x) const { return x < m_labels.size(); }

  const std::string& label(ElemId x) const;
  std::optional<ElemId> find(std::string_view label) const;
  ElemId at(std::string_view label) const;

  bool leq(ElemId a, ElemId b) const;
  const Bits& down(ElemId x) const;
  const Bits& up(ElemId x) const;
  bool is_discrete() const { return m_discrete; }

  // Least upper bound of a (possibly empty) set; nullopt when it does not
  // exist. The empty set's join is the least element.
  std::optional<ElemId> join(const Bits& set) const;
  std::optional<ElemId> join(ElemId a, ElemId b) const;
  std::optional<ElemId> meet(ElemId a, ElemId b) const;
  std::optional<ElemId> bottom() const;
  std::optional<ElemId> top() const;

  // The element of `set` above every other member, if any.
  std::optional<ElemId> maximum(const Bits& set) const;

  Bits empty_bits() const { return Bits(size()); }

  // Structural equality: same name, labels and order.
  bool same_as(const FiniteDomain& other) const;

 private:
  FiniteDomain(std::string name, std::vector<std::string> labels);
  void index_labels();
  void validate_order() const;

  std::string m_name;
  std::vector<std::string> m_labels;
  std::unordered_map<std::string, ElemId> m_index;
  std::vector<Bits> m_down;
  std::vector<Bits> m_up;
  bool m_discrete = false;
};

// Throws DomainError when the two carriers differ.
void require_same(const DomainRef& a, const DomainRef& b, std::string_view what);
bool same_domain(const DomainRef& a, const DomainRef& b);

/// Finite stand-in for the integers: {-W..W} under the discrete order.
class IntWindow {
 public:
  explicit IntWindow(int bound);

  int bound() const { return m_bound; }
  bool contains(long long i) const { return i >= -m_bound && i <= m_bound; }
  ElemId id(long long i) const;
  long long value(ElemId x) const { return static_cast<long long>(x) - m_bound; }
  const DomainRef& domain() const { return m_domain; }
  std::vector<long long> values() const;

 private:
  int m_bound;
  DomainRef m_domain;
};

class DownSet {
 public:
  explicit DownSet(DomainRef domain);
  // Members are re-closed downward: {x' | exists x in raw. x' <= x}.
  DownSet(DomainRef domain, std::span<const ElemId> raw);
  DownSet(DomainRef domain, const Bits& raw);

  const DomainRef& domain() const { return m_domain; }
  const Bits& bits() const { return m_members; }
  bool contains(ElemId x) const { return x < m_members.size() && m_members.test(x); }
  bool empty() const { return m_members.none(); }
  std::size_t size() const { return m_members.count(); }
  std::vector<ElemId> members() const;
  bool subset_of(const DownSet& other) const;
  DownSet unite(const DownSet& other) const;
  DownSet intersect(const DownSet& other) const;
  std::string to_string() const;

  friend bool operator==(const DownSet& a, const DownSet& b);

 private:
  DomainRef m_domain;
  Bits m_members;
};

class MonotoneFn {
 public:
  // Throws DomainError if the table is partial, leaves `cod`, or is not
  // monotone.
  MonotoneFn(DomainRef dom, DomainRef cod, std::vector<ElemId> table);

  template <typename F>
  static MonotoneFn tabulate(const DomainRef& dom, const DomainRef& cod, F&& f) {
    std::vector<ElemId> table;
    table.reserve(dom->size());
    for (ElemId x = 0; x < dom->size(); ++x) {
      table.push_back(f(x));
    }
    return MonotoneFn(dom, cod, std::move(table));
  }

  static MonotoneFn identity(const DomainRef& d);
  static MonotoneFn constant(const DomainRef& dom, const DomainRef& cod, ElemId c);

  ElemId operator()(ElemId x) const { return m_table.at(x); }
  const DomainRef& dom() const { return m_dom; }
  const DomainRef& cod() const { return m_cod; }
  const std::vector<ElemId>& table() const { return m_table; }

  friend bool operator==(const MonotoneFn& a, const MonotoneFn& b);

 private:
  DomainRef m_dom;
  DomainRef m_cod;
  std::vector<ElemId> m_table;
};

/// Monotone map into downward-closed subsets: A -> P(B).
class KleisliFn {
 public:
  KleisliFn(DomainRef dom, DomainRef cod, std::vector<DownSet> table);

  // `f` returns the raw (unclosed) image of each element as ElemIds.
  template <typename F>
  static KleisliFn tabulate(const DomainRef& dom, const DomainRef& cod, F&& f) {
    std::vector<DownSet> table;
    table.reserve(dom->size());
    for (ElemId x = 0; x < dom->size(); ++x) {
      const std::vector<ElemId> raw = f(x);
      table.emplace_back(cod, std::span<const ElemId>(raw));
    }
    return KleisliFn(dom, cod, std::move(table));
  }

  const DownSet& operator()(ElemId x) const { return m_table.at(x); }
  const DomainRef& dom() const { return m_dom; }
  const DomainRef& cod() const { return m_cod; }
  const std::vector<DownSet>& table() const { return m_table; }

  friend bool operator==(const KleisliFn& a, const KleisliFn& b);

 private:
  DomainRef m_dom;
  DomainRef m_cod;
  std::vector<DownSet> m_table;
};

DownSet ret(ElemId x, const DomainRef& d);
DownSet bind(const DownSet& xs, const KleisliFn& f);
KleisliFn pure(const MonotoneFn& f);
// (g (*) f)(x) = bind(f(x), g)
KleisliFn kcompose(const KleisliFn& g, const KleisliFn& f);

/// Cartesian product carrier with the componentwise order.
class ProductDomain {
 public:
  ProductDomain(DomainRef left, DomainRef right);

  const DomainRef& domain() const { return m_domain; }
  const DomainRef& left() const { return m_left; }
  const DomainRef& right() const { return m_right; }
  ElemId pair(ElemId a, ElemId b) const;
  std::pair<ElemId, ElemId> split(ElemId p) const;

 private:
  DomainRef m_left;
  DomainRef m_right;
  DomainRef m_domain;
};

// Every downset of a small carrier (at most 24 elements), in ascending
// bit-pattern order.
std::vector<DownSet> all_downsets(const DomainRef& d);

// `count` random downsets plus the empty and full ones, deduplicated and
// sorted; deterministic in `seed`.
std::vector<DownSet> sample_downsets(const DomainRef& d, std::size_t count,
                                     std::uint64_t seed);

} // namespace cgc
