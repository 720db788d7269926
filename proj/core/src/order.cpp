#include <cgc/order.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace cgc {

namespace {

bool is_subset(const Bits& a, const Bits& b) { return a.is_subset_of(b); }

} // namespace

FiniteDomain::FiniteDomain(std::string name, std::vector<std::string> labels)
    : m_name(std::move(name)), m_labels(std::move(labels)) {
  index_labels();
}

void FiniteDomain::index_labels() {
  m_index.reserve(m_labels.size());
  for (ElemId i = 0; i < m_labels.size(); ++i) {
    if (!m_index.emplace(m_labels[i], i).second) {
      throw DomainError("duplicate element '" + m_labels[i] + "' in domain " +
                        m_name);
    }
  }
}

void FiniteDomain::validate_order() const {
  const std::size_t n = size();
  for (ElemId a = 0; a < n; ++a) {
    if (!m_down[a].test(a)) {
      throw DomainError("order on " + m_name + " is not reflexive at " +
                        m_labels[a]);
    }
    for (std::size_t b = m_up[a].find_first(); b != Bits::npos;
         b = m_up[a].find_next(b)) {
      if (b != a && m_up[b].test(a)) {
        throw DomainError("order on " + m_name + " is not antisymmetric: " +
                          m_labels[a] + " and " + m_labels[b]);
      }
      // a <= b implies up(b) is inside up(a)
      if (!is_subset(m_up[b], m_up[a])) {
        throw DomainError("order on " + m_name + " is not transitive through " +
                          m_labels[b]);
      }
    }
  }
}

DomainRef FiniteDomain::from_hasse(std::string name,
                                   std::vector<std::string> labels,
                                   std::span<const Cover> covers) {
  auto d = std::shared_ptr<FiniteDomain>(
      new FiniteDomain(std::move(name), std::move(labels)));
  const std::size_t n = d->size();
  std::vector<Bits> up(n, Bits(n));
  for (ElemId i = 0; i < n; ++i) {
    up[i].set(i);
  }
  for (const auto& [lo, hi] : covers) {
    if (lo >= n || hi >= n) {
      throw DomainError("order pair out of range in domain " + d->m_name);
    }
    up[lo].set(hi);
  }
  // Warshall closure on rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (up[i].test(k)) {
        up[i] |= up[k];
      }
    }
  }
  d->m_up = std::move(up);
  d->m_down.assign(n, Bits(n));
  bool discrete = true;
  for (ElemId a = 0; a < n; ++a) {
    for (std::size_t b = d->m_up[a].find_first(); b != Bits::npos;
         b = d->m_up[a].find_next(b)) {
      d->m_down[b].set(a);
      discrete = discrete && (a == b);
    }
  }
  d->m_discrete = discrete;
  d->validate_order();
  return d;
}

DomainRef FiniteDomain::from_order(std::string name,
                                   std::vector<std::string> labels,
                                   const std::function<bool(ElemId, ElemId)>& leq) {
  auto d = std::shared_ptr<FiniteDomain>(
      new FiniteDomain(std::move(name), std::move(labels)));
  const std::size_t n = d->size();
  d->m_up.assign(n, Bits(n));
  d->m_down.assign(n, Bits(n));
  bool discrete = true;
  for (ElemId a = 0; a < n; ++a) {
    for (ElemId b = 0; b < n; ++b) {
      if (leq(a, b)) {
        d->m_up[a].set(b);
        d->m_down[b].set(a);
        discrete = discrete && (a == b);
      }
    }
  }
  d->m_discrete = discrete;
  d->validate_order();
  return d;
}

DomainRef FiniteDomain::discrete(std::string name, std::vector<std::string> labels) {
  return from_hasse(std::move(name), std::move(labels), {});
}

const std::string& FiniteDomain::label(ElemId x) const {
  if (!contains(x)) {
    throw DomainError("element id " + std::to_string(x) + " not in domain " +
                      m_name);
  }
  return m_labels[x];
}

std::optional<ElemId> FiniteDomain::find(std::string_view label) const {
  auto it = m_index.find(std::string(label));
  if (it == m_index.end()) {
    return std::nullopt;
  }
  return it->second;
}

ElemId FiniteDomain::at(std::string_view label) const {
  if (auto id = find(label)) {
    return *id;
  }
  throw DomainError("unknown element '" + std::string(label) + "' in domain " +
                    m_name);
}

bool FiniteDomain::leq(ElemId a, ElemId b) const {
  if (!contains(a) || !contains(b)) {
    throw DomainError("element id out of range in domain " + m_name);
  }
  return m_up[a].test(b);
}

const Bits& FiniteDomain::down(ElemId x) const {
  if (!contains(x)) {
    throw DomainError("element id " + std::to_string(x) + " not in domain " +
                      m_name);
  }
  return m_down[x];
}

const Bits& FiniteDomain::up(ElemId x) const {
  if (!contains(x)) {
    throw DomainError("element id " + std::to_string(x) + " not in domain " +
                      m_name);
  }
  return m_up[x];
}

std::optional<ElemId> FiniteDomain::join(const Bits& set) const {
  const std::size_t n = size();
  Bits uppers(n);
  uppers.set();
  for (std::size_t x = set.find_first(); x != Bits::npos; x = set.find_next(x)) {
    uppers &= m_up[x];
  }
  // The least upper bound is the upper bound lying below all the others.
  for (std::size_t c = uppers.find_first(); c != Bits::npos;
       c = uppers.find_next(c)) {
    if (is_subset(uppers, m_up[c])) {
      return static_cast<ElemId>(c);
    }
  }
  return std::nullopt;
}

std::optional<ElemId> FiniteDomain::join(ElemId a, ElemId b) const {
  Bits s(size());
  s.set(a);
  s.set(b);
  return join(s);
}

std::optional<ElemId> FiniteDomain::meet(ElemId a, ElemId b) const {
  const Bits lowers = down(a) & down(b);
  for (std::size_t c = lowers.find_first(); c != Bits::npos;
       c = lowers.find_next(c)) {
    if (is_subset(lowers, m_down[c])) {
      return static_cast<ElemId>(c);
    }
  }
  return std::nullopt;
}

std::optional<ElemId> FiniteDomain::bottom() const { return join(empty_bits()); }

std::optional<ElemId> FiniteDomain::top() const {
  for (ElemId c = 0; c < size(); ++c) {
    if (m_down[c].all()) {
      return c;
    }
  }
  return std::nullopt;
}

std::optional<ElemId> FiniteDomain::maximum(const Bits& set) const {
  for (std::size_t c = set.find_first(); c != Bits::npos; c = set.find_next(c)) {
    if (is_subset(set, m_down[c])) {
      return static_cast<ElemId>(c);
    }
  }
  return std::nullopt;
}

bool FiniteDomain::same_as(const FiniteDomain& other) const {
  return this == &other || (m_name == other.m_name && m_labels == other.m_labels &&
                            m_up == other.m_up);
}

bool same_domain(const DomainRef& a, const DomainRef& b) {
  return a == b || (a && b && a->same_as(*b));
}

void require_same(const DomainRef& a, const DomainRef& b, std::string_view what) {
  if (!same_domain(a, b)) {
    throw DomainError(std::string(what) + ": domain mismatch (" +
                      (a ? a->name() : "null") + " vs " +
                      (b ? b->name() : "null") + ")");
  }
}

IntWindow::IntWindow(int bound) : m_bound(bound) {
  if (bound < 0) {
    throw DomainError("integer window bound must be nonnegative");
  }
  std::vector<std::string> labels;
  labels.reserve(2 * bound + 1);
  for (long long i = -bound; i <= bound; ++i) {
    labels.push_back(std::to_string(i));
  }
  m_domain = FiniteDomain::discrete("Z[" + std::to_string(bound) + "]",
                                    std::move(labels));
}

ElemId IntWindow::id(long long i) const {
  if (!contains(i)) {
    throw DomainError(std::to_string(i) + " is outside the window [-" +
                      std::to_string(m_bound) + "," + std::to_string(m_bound) +
                      "]");
  }
  return static_cast<ElemId>(i + m_bound);
}

std::vector<long long> IntWindow::values() const {
  std::vector<long long> out;
  out.reserve(2 * m_bound + 1);
  for (long long i = -m_bound; i <= m_bound; ++i) {
    out.push_back(i);
  }
  return out;
}

DownSet::DownSet(DomainRef domain)
    : m_domain(std::move(domain)), m_members(m_domain->size()) {}

DownSet::DownSet(DomainRef domain, std::span<const ElemId> raw)
    : m_domain(std::move(domain)), m_members(m_domain->size()) {
  for (ElemId x : raw) {
    m_members |= m_domain->down(x);
  }
}

DownSet::DownSet(DomainRef domain, const Bits& raw)
    : m_domain(std::move(domain)), m_members(m_domain->size()) {
  if (raw.size() != m_domain->size()) {
    throw DomainError("bitset size does not match domain " + m_domain->name());
  }
  for (std::size_t x = raw.find_first(); x != Bits::npos; x = raw.find_next(x)) {
    m_members |= m_domain->down(static_cast<ElemId>(x));
  }
}

std::vector<ElemId> DownSet::members() const {
  std::vector<ElemId> out;
  out.reserve(m_members.count());
  for (std::size_t x = m_members.find_first(); x != Bits::npos;
       x = m_members.find_next(x)) {
    out.push_back(static_cast<ElemId>(x));
  }
  return out;
}

bool DownSet::subset_of(const DownSet& other) const {
  require_same(m_domain, other.m_domain, "subset");
  return m_members.is_subset_of(other.m_members);
}

DownSet DownSet::unite(const DownSet& other) const {
  require_same(m_domain, other.m_domain, "union");
  DownSet out(m_domain);
  out.m_members = m_members | other.m_members;
  return out;
}

DownSet DownSet::intersect(const DownSet& other) const {
  require_same(m_domain, other.m_domain, "intersection");
  DownSet out(m_domain);
  out.m_members = m_members & other.m_members;
  return out;
}

std::string DownSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (ElemId x : members()) {
    os << (first ? "" : ",") << m_domain->label(x);
    first = false;
  }
  os << '}';
  return os.str();
}

bool operator==(const DownSet& a, const DownSet& b) {
  return same_domain(a.m_domain, b.m_domain) && a.m_members == b.m_members;
}

MonotoneFn::MonotoneFn(DomainRef dom, DomainRef cod, std::vector<ElemId> table)
    : m_dom(std::move(dom)), m_cod(std::move(cod)), m_table(std::move(table)) {
  if (m_table.size() != m_dom->size()) {
    throw DomainError("monotone function table is not total on " + m_dom->name());
  }
  for (ElemId y : m_table) {
    if (!m_cod->contains(y)) {
      throw DomainError("monotone function leaves codomain " + m_cod->name());
    }
  }
  for (ElemId x = 0; x < m_dom->size(); ++x) {
    const Bits& ups = m_dom->up(x);
    for (std::size_t x2 = ups.find_first(); x2 != Bits::npos; x2 = ups.find_next(x2)) {
      if (!m_cod->leq(m_table[x], m_table[x2])) {
        throw DomainError("function " + m_dom->name() + " -> " + m_cod->name() +
                          " is not monotone at " + m_dom->label(x) + " <= " +
                          m_dom->label(static_cast<ElemId>(x2)));
      }
    }
  }
}

MonotoneFn MonotoneFn::identity(const DomainRef& d) {
  return tabulate(d, d, [](ElemId x) { return x; });
}

MonotoneFn MonotoneFn::constant(const DomainRef& dom, const DomainRef& cod, ElemId c) {
  return tabulate(dom, cod, [c](ElemId) { return c; });
}

bool operator==(const MonotoneFn& a, const MonotoneFn& b) {
  return same_domain(a.m_dom, b.m_dom) && same_domain(a.m_cod, b.m_cod) &&
         a.m_table == b.m_table;
}

KleisliFn::KleisliFn(DomainRef dom, DomainRef cod, std::vector<DownSet> table)
    : m_dom(std::move(dom)), m_cod(std::move(cod)), m_table(std::move(table)) {
  if (m_table.size() != m_dom->size()) {
    throw DomainError("Kleisli function table is not total on " + m_dom->name());
  }
  for (const DownSet& s : m_table) {
    require_same(s.domain(), m_cod, "Kleisli function image");
  }
  for (ElemId x = 0; x < m_dom->size(); ++x) {
    const Bits& ups = m_dom->up(x);
    for (std::size_t x2 = ups.find_first(); x2 != Bits::npos; x2 = ups.find_next(x2)) {
      if (!m_table[x].subset_of(m_table[x2])) {
        throw DomainError("Kleisli function " + m_dom->name() + " -> P(" +
                          m_cod->name() + ") is not monotone at " +
                          m_dom->label(x) + " <= " +
                          m_dom->label(static_cast<ElemId>(x2)));
      }
    }
  }
}

bool operator==(const KleisliFn& a, const KleisliFn& b) {
  return same_domain(a.m_dom, b.m_dom) && same_domain(a.m_cod, b.m_cod) &&
         a.m_table == b.m_table;
}

DownSet ret(ElemId x, const DomainRef& d) {
  const ElemId raw[] = {x};
  if (!d->contains(x)) {
    throw DomainError("ret: element id " + std::to_string(x) + " not in domain " +
                      d->name());
  }
  return DownSet(d, std::span<const ElemId>(raw));
}

DownSet bind(const DownSet& xs, const KleisliFn& f) {
  require_same(xs.domain(), f.dom(), "bind");
  Bits acc(f.cod()->size());
  const Bits& members = xs.bits();
  for (std::size_t x = members.find_first(); x != Bits::npos;
       x = members.find_next(x)) {
    acc |= f(static_cast<ElemId>(x)).bits();
  }
  return DownSet(f.cod(), acc);
}

KleisliFn pure(const MonotoneFn& f) {
  std::vector<DownSet> table;
  table.reserve(f.dom()->size());
  for (ElemId x = 0; x < f.dom()->size(); ++x) {
    table.push_back(ret(f(x), f.cod()));
  }
  return KleisliFn(f.dom(), f.cod(), std::move(table));
}

KleisliFn kcompose(const KleisliFn& g, const KleisliFn& f) {
  require_same(f.cod(), g.dom(), "kcompose");
  std::vector<DownSet> table;
  table.reserve(f.dom()->size());
  for (ElemId x = 0; x < f.dom()->size(); ++x) {
    table.push_back(bind(f(x), g));
  }
  return KleisliFn(f.dom(), g.cod(), std::move(table));
}

ProductDomain::ProductDomain(DomainRef left, DomainRef right)
    : m_left(std::move(left)), m_right(std::move(right)) {
  const std::size_t nl = m_left->size();
  const std::size_t nr = m_right->size();
  std::vector<std::string> labels;
  labels.reserve(nl * nr);
  for (ElemId a = 0; a < nl; ++a) {
    for (ElemId b = 0; b < nr; ++b) {
      labels.push_back("(" + m_left->label(a) + "," + m_right->label(b) + ")");
    }
  }
  const auto l = m_left;
  const auto r = m_right;
  m_domain = FiniteDomain::from_order(
      m_left->name() + "x" + m_right->name(), std::move(labels),
      [l, r, nr](ElemId p, ElemId q) {
        return l->leq(p / nr, q / nr) && r->leq(p % nr, q % nr);
      });
}

ElemId ProductDomain::pair(ElemId a, ElemId b) const {
  if (!m_left->contains(a) || !m_right->contains(b)) {
    throw DomainError("pair component out of range in " + m_domain->name());
  }
  return static_cast<ElemId>(a * m_right->size() + b);
}

std::pair<ElemId, ElemId> ProductDomain::split(ElemId p) const {
  if (!m_domain->contains(p)) {
    throw DomainError("pair id out of range in " + m_domain->name());
  }
  const auto nr = static_cast<ElemId>(m_right->size());
  return {p / nr, p % nr};
}

std::vector<DownSet> all_downsets(const DomainRef& d) {
  const std::size_t n = d->size();
  if (n > 24) {
    throw DomainError("refusing to enumerate all downsets of " + d->name() +
                      " (" + std::to_string(n) + " elements)");
  }
  std::vector<DownSet> out;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    Bits raw(n, mask);
    bool closed = true;
    for (std::size_t x = raw.find_first(); x != Bits::npos && closed;
         x = raw.find_next(x)) {
      closed = d->down(static_cast<ElemId>(x)).is_subset_of(raw);
    }
    if (closed) {
      out.emplace_back(d, raw);
    }
  }
  return out;
}

std::vector<DownSet> sample_downsets(const DomainRef& d, std::size_t count,
                                     std::uint64_t seed) {
  const std::size_t n = d->size();
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::set<Bits> seen;
  std::vector<DownSet> out;
  auto add = [&](const DownSet& s) {
    if (seen.insert(s.bits()).second) {
      out.push_back(s);
    }
  };
  add(DownSet(d));
  Bits full(n);
  full.set();
  add(DownSet(d, full));
  for (std::size_t i = 0; i < count; ++i) {
    Bits raw(n);
    for (std::size_t x = 0; x < n; ++x) {
      raw[x] = coin(rng);
    }
    add(DownSet(d, raw));
  }
  std::sort(out.begin(), out.end(),
            [](const DownSet& a, const DownSet& b) { return a.bits() < b.bits(); });
  return out;
}

} // namespace cgc
