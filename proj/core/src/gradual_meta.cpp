#include <cgc/gradual.hpp>

#include <functional>

namespace cgc::gradual {

namespace {

using K = Term::Kind;

// Binders are named by depth (x0, x1, ...), so terms of a given size
// depend only on how many binders are in scope.
class TermEnumerator {
 public:
  TermEnumerator(const std::vector<TypePtr>* annots) : m_annots(annots) {}

  const std::vector<TermPtr>& exactly(int n, int scope) {
    auto key = std::pair(n, scope);
    if (auto it = m_memo.find(key); it != m_memo.end()) {
      return it->second;
    }
    std::vector<TermPtr> out;
    if (n == 1) {
      out.push_back(bool_e(true));
      out.push_back(bool_e(false));
      for (int v = 0; v < scope; ++v) {
        out.push_back(var_e(binder(v)));
      }
    } else {
      for (const auto& body : exactly(n - 1, scope + 1)) {
        if (m_annots) {
          for (const auto& t : *m_annots) {
            out.push_back(lam_e(binder(scope), t, body));
          }
        } else {
          out.push_back(lam_e(binder(scope), nullptr, body));
        }
      }
      for (int i = 1; i + 1 <= n - 1; ++i) {
        const auto& fs = exactly(i, scope);
        const auto& xs = exactly(n - 1 - i, scope);
        for (const auto& f : fs) {
          for (const auto& x : xs) {
            out.push_back(app_e(f, x));
          }
        }
      }
      for (int i = 1; i <= n - 3; ++i) {
        for (int j = 1; i + j <= n - 2; ++j) {
          const int l = n - 1 - i - j;
          for (const auto& g : exactly(i, scope)) {
            for (const auto& t : exactly(j, scope)) {
              for (const auto& e : exactly(l, scope)) {
                out.push_back(if_e(g, t, e));
              }
            }
          }
        }
      }
      if (m_annots) {
        for (const auto& inner : exactly(n - 1, scope)) {
          for (const auto& t : *m_annots) {
            out.push_back(ascribe_e(inner, t));
          }
        }
      }
    }
    return m_memo.emplace(key, std::move(out)).first->second;
  }

  std::vector<TermPtr> up_to(int k) {
    std::vector<TermPtr> out;
    for (int n = 1; n <= k; ++n) {
      const auto& level = exactly(n, 0);
      out.insert(out.end(), level.begin(), level.end());
    }
    return out;
  }

 private:
  static std::string binder(int depth) { return "x" + std::to_string(depth); }

  const std::vector<TypePtr>* m_annots;
  std::map<std::pair<int, int>, std::vector<TermPtr>> m_memo;
};

std::string show(const TypeResult& r) {
  if (const auto* t = std::get_if<TypePtr>(&r)) {
    return to_string(**t);
  }
  return "ill-typed (" + std::get<TypeError>(r).rule + ")";
}

int count_annotations(const Term& e) {
  int n = e.type ? 1 : 0;
  for (const auto* child : {&e.a, &e.b, &e.c}) {
    if (*child) {
      n += count_annotations(**child);
    }
  }
  return n;
}

// Pre-order: a node's own annotation comes before its children's.
TermPtr replace_annotation(const Term& e, int& index, const TypePtr& t) {
  Term copy = e;
  if (e.type) {
    if (index == 0) {
      copy.type = t;
    }
    --index;
  }
  for (auto* child : {&copy.a, &copy.b, &copy.c}) {
    if (*child) {
      *child = replace_annotation(**child, index, t);
    }
  }
  return std::make_shared<const Term>(std::move(copy));
}

const TypePtr& annotation_at(const Term& e, int& index) {
  static const TypePtr kNull;
  if (e.type) {
    if (index == 0) {
      return e.type;
    }
    --index;
  }
  for (const auto* child : {&e.a, &e.b, &e.c}) {
    if (*child) {
      const auto& t = annotation_at(**child, index);
      if (t) {
        return t;
      }
    }
  }
  return kNull;
}

std::string carrier(int k, std::optional<int> d) {
  std::string s = "closed terms, size <= " + std::to_string(k);
  if (d) {
    s += ", annotation depth <= " + std::to_string(*d);
  }
  return s;
}

} // namespace

std::vector<TermPtr> enumerate_terms(int k, const std::vector<TypePtr>& annots) {
  return TermEnumerator(&annots).up_to(k);
}

std::vector<TermPtr> enumerate_untyped(int k) { return TermEnumerator(nullptr).up_to(k); }

LawReport check_fat(int k, int d) {
  LawReport report("FAT", carrier(k, d));
  const auto terms = enumerate_terms(k, enumerate_types(d, false));
  std::size_t typable = 0;
  for (const auto& e : terms) {
    const auto p = typecheck_precise({}, *e);
    const auto g = typecheck_gradual({}, *e);
    const auto* pt = std::get_if<TypePtr>(&p);
    const auto* gt = std::get_if<TypePtr>(&g);
    const bool agree = (pt == nullptr) == (gt == nullptr) && (!pt || equal(**pt, **gt));
    typable += pt ? 1 : 0;
    if (!agree) {
      report.add({{"term", to_string(*e)}, {"precise", show(p)}, {"gradual", show(g)}});
    }
  }
  report.set_checked(terms.size());
  report.note(std::to_string(typable) + " of " + std::to_string(terms.size()) +
              " terms precisely typable");
  return report;
}

LawReport check_edl(int k) {
  LawReport report("EDL", carrier(k, std::nullopt));
  const auto terms = enumerate_untyped(k);
  for (const auto& un : terms) {
    const auto embedded = embed_dynamic(*un);
    const auto r = typecheck_gradual({}, *embedded);
    const auto* t = std::get_if<TypePtr>(&r);
    if (!t || (*t)->kind != Type::Kind::Unknown) {
      report.add({{"term", to_string(*un)}, {"embedded", to_string(*embedded)},
                  {"type", show(r)}});
    }
  }
  report.set_checked(terms.size());
  return report;
}

LawReport check_gg(int k, int d) {
  LawReport report("GG", carrier(k, d));
  const auto annots = enumerate_types(d, true);
  // All strictly less precise types per annotation, by label.
  std::map<std::string, std::vector<TypePtr>> above;
  for (const auto& t : annots) {
    auto& list = above[to_string(*t)];
    for (const auto& u : annots) {
      if (precision_leq(t, u) && !equal(*t, *u)) {
        list.push_back(u);
      }
    }
  }
  const auto terms = enumerate_terms(k, annots);
  std::size_t typable = 0;
  std::size_t pairs = 0;
  for (const auto& e1 : terms) {
    const auto r1 = typecheck_gradual({}, *e1);
    const auto* t1 = std::get_if<TypePtr>(&r1);
    if (!t1) {
      continue;
    }
    ++typable;
    const int n = count_annotations(*e1);
    for (int i = 0; i < n; ++i) {
      int idx = i;
      const auto& current = annotation_at(*e1, idx);
      for (const auto& looser : above.at(to_string(*current))) {
        int j = i;
        const auto e2 = replace_annotation(*e1, j, looser);
        ++pairs;
        const auto r2 = typecheck_gradual({}, *e2);
        const auto* t2 = std::get_if<TypePtr>(&r2);
        if (!term_precision_leq(*e1, *e2) || !t2 || !precision_leq(*t1, *t2)) {
          report.add({{"term", to_string(*e1)}, {"type", to_string(**t1)},
                      {"less precise", to_string(*e2)}, {"its type", show(r2)}});
        }
      }
    }
  }
  report.set_checked(pairs);
  report.note(std::to_string(typable) + " typable terms of " + std::to_string(terms.size()) +
              ", " + std::to_string(pairs) + " precision pairs");
  return report;
}

Metatheory check_metatheory(int k, int d) {
  return Metatheory{check_fat(k, d), check_edl(k), check_gg(k, d)};
}

} // namespace cgc::gradual
