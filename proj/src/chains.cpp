#include "gdd/chains.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace gdd {

namespace {

Label end_parameter(const Gdd& g, const std::vector<int>& walk, bool from_back) {
  // q := q_nn^2 * qt_{n-1,n} read at the chosen end of the walk
  const int n = static_cast<int>(walk.size());
  const int v = from_back ? walk[n - 1] : walk[0];
  const int w = from_back ? walk[n - 2] : walk[1];
  return g.vertex(v).pow(2) * g.edge(v, w);
}

}  // namespace

bool simple_chain_condition_at(const Gdd& g, const std::vector<int>& walk,
                               int pos) {
  const int n = static_cast<int>(walk.size());
  const int v = walk[pos];
  if (pos == 0 || pos == n - 1) {
    const int w = walk[pos == 0 ? 1 : n - 2];
    return (g.vertex(v) * g.edge(v, w)).is_one() || g.vertex(v).is_minus_one();
  }
  const int prev = walk[pos - 1], next = walk[pos + 1];
  const bool ppe2 = g.vertex(v).is_minus_one() &&
                    (g.edge(v, prev) * g.edge(v, next)).is_one();
  const bool ppe3 = (g.vertex(v) * g.edge(v, prev)).is_one() &&
                    (g.vertex(v) * g.edge(v, next)).is_one();
  return ppe2 || ppe3;
}

std::vector<int> simple_chain_failures(const Gdd& g) {
  const Shape s = g.shape();
  if (s.kind != ShapeKind::Chain)
    throw GddError("simple chain conditions need a chain");
  std::vector<int> out;
  if (g.rank() == 1) return out;
  for (int p = 0; p < g.rank(); ++p)
    if (!simple_chain_condition_at(g, s.walk, p)) out.push_back(s.walk[p]);
  return out;
}

ChainClass is_simple_chain(const Gdd& g) {
  ChainClass c;
  if (g.shape().kind != ShapeKind::Chain) {
    c.kind = ChainClass::Kind::NotApplicable;
    return c;
  }
  c.witnesses = simple_chain_failures(g);
  c.kind = c.witnesses.empty() ? ChainClass::Kind::SimpleChain
                               : ChainClass::Kind::NotClassified;
  return c;
}

Gdd make_simple_chain(int n, const Label& q, const std::set<int>& marks) {
  if (n < 1) throw GddError("simple chain needs rank >= 1");
  if (q.is_one()) throw GddError("simple chain parameter must differ from 1");
  const ParamOrder ord = q.order();
  const bool all_marked = static_cast<int>(marks.size()) == n &&
                          (marks.empty() || (*marks.begin() >= 1 && *marks.rbegin() <= n));
  if (q.is_minus_one() && !all_marked)
    throw GddError("parameter -1 only supports the fully marked chain");

  auto marked = [&](int i) { return marks.count(i) != 0; };

  if (n == 1) {
    const Label v = marks.empty() ? q : Label::minus_one(ord);
    return Gdd(ord, {v}, {});
  }

  // edge t_i between positions i-1 and i (1-based положения), i = 2..n
  std::vector<Label> t(n + 1, Label::one(ord));
  for (int i = 2; i <= n; ++i) t[i] = marked(i) ? q : q.inverse();

  std::vector<Label> diag(n, Label::one(ord));
  // interiors: ppe3 when the two edges agree, else ppe2
  for (int p = 2; p <= n - 1; ++p) {
    diag[p - 1] = t[p] == t[p + 1] ? t[p].inverse() : Label::minus_one(ord);
  }
  // right end: the defining q = q_nn^2 t_n forces the label
  diag[n - 1] = marked(n) ? Label::minus_one(ord) : q;
  // left end via qt_{1,0} = 1/(q_11^2 t_2)
  if (marked(1) == marked(2))
    diag[0] = marked(1) ? q.inverse() : q;
  else
    diag[0] = Label::minus_one(ord);

  std::vector<std::pair<Gdd::Edge, Label>> edges;
  for (int i = 2; i <= n; ++i) edges.push_back({{i - 2, i - 1}, t[i]});
  return Gdd(ord, std::move(diag), std::move(edges));
}

namespace {

struct Template {
  int type;
  Gdd g;
  std::string params;
};

void emit_templates(int rank, const Label& p, std::vector<Template>& out) {
  const ParamOrder ord = p.order();
  const Label one = Label::one(ord);
  if (p.is_one()) return;
  const bool p2 = !p.pow(2).is_one();
  const auto p_ord = p.multiplicative_order();

  auto subsets_of = [](int n) {
    std::vector<std::set<int>> out;
    for (unsigned m = 0; m < (1u << n); ++m) {
      std::set<int> s;
      for (int i = 0; i < n; ++i)
        if (m & (1u << i)) s.insert(i + 1);
      out.push_back(std::move(s));
    }
    return out;
  };

  auto desc = [&](int type, const std::set<int>& marks) {
    std::ostringstream os;
    os << "Type " << type << ", q=" << p.str() << ", marks={";
    bool first = true;
    for (int m : marks) {
      os << (first ? "" : ",") << m;
      first = false;
    }
    os << "}";
    return os.str();
  };

  auto attach_tail = [&](const Gdd& chain, const Label& elab, const Label& vlab) {
    std::vector<Label> diag;
    for (int i = 0; i < chain.rank(); ++i) diag.push_back(chain.vertex(i));
    diag.push_back(vlab);
    std::vector<std::pair<Gdd::Edge, Label>> es;
    for (const auto& [e, l] : chain.edges()) es.push_back({e, l});
    es.push_back({{chain.rank() - 1, chain.rank()}, elab});
    return Gdd(chain.order(), std::move(diag), std::move(es));
  };

  // Types 1-4: a marked chain of rank n-1 plus one tail vertex
  if (rank >= 2) {
    for (const auto& marks : subsets_of(rank - 1)) {
      const bool needs_minus_one_ok = !p.is_minus_one();
      if (p2 && needs_minus_one_ok) {
        try {
          const Gdd c1 = make_simple_chain(rank - 1, p, marks);
          out.push_back({1, attach_tail(c1, p.pow(-2), p.pow(2)), desc(1, marks)});
        } catch (const GddError&) {
        }
        try {
          const Gdd c2 = make_simple_chain(rank - 1, p.pow(2), marks);
          out.push_back({2, attach_tail(c2, p.pow(-2), p), desc(2, marks)});
        } catch (const GddError&) {
        }
        try {
          const Gdd c3 = make_simple_chain(rank - 1, p.pow(-2), marks);
          out.push_back(
              {3, attach_tail(c3, p.pow(2), p.inverse() * Label::minus_one(ord)),
               desc(3, marks)});
        } catch (const GddError&) {
        }
      }
      if (p_ord && *p_ord == 3) {
        try {
          const Gdd c4 =
              make_simple_chain(rank - 1, p.inverse() * Label::minus_one(ord), marks);
          out.push_back({4, attach_tail(c4, p * Label::minus_one(ord), p),
                         desc(4, marks)});
        } catch (const GddError&) {
        }
      }
    }
  }

  // Types 5-6: a marked chain of rank n-2 plus a two-vertex head
  if (rank >= 3) {
    for (const auto& marks : subsets_of(rank - 2)) {
      try {
        const Gdd c = make_simple_chain(rank - 2, p, marks);
        const int a = rank - 2;  // chain end
        std::vector<Label> diag;
        for (int i = 0; i < c.rank(); ++i) diag.push_back(c.vertex(i));
        std::vector<std::pair<Gdd::Edge, Label>> es;
        for (const auto& [e, l] : c.edges()) es.push_back({e, l});
        // Type 5: branch pair p|p with edges p^{-1}
        diag.push_back(p);
        diag.push_back(p);
        es.push_back({{a - 1, a}, p.inverse()});
        es.push_back({{a - 1, a + 1}, p.inverse()});
        out.push_back({5, Gdd(ord, diag, es), desc(5, marks)});
        if (p2) {
          // Type 6: triangle head -1,-1 with cross edge p^2
          diag[a] = Label::minus_one(ord);
          diag[a + 1] = Label::minus_one(ord);
          es.push_back({{a, a + 1}, p.pow(2)});
          out.push_back({6, Gdd(ord, diag, es), desc(6, marks)});
        }
      } catch (const GddError&) {
      }
    }
  }

  // Type 7: the plain marked chain (parameterized by p^{-1} in print,
  // which the sweep over all p already covers)
  for (const auto& marks : subsets_of(rank)) {
    try {
      out.push_back({7, make_simple_chain(rank, p.inverse(), marks), desc(7, marks)});
    } catch (const GddError&) {
    }
  }
  (void)one;
}

std::vector<Label> parameter_values(ParamOrder ord, long long max_exp) {
  std::vector<Label> out;
  if (ord.is_generic()) {
    for (long long e = -max_exp; e <= max_exp; ++e) {
      out.push_back(Label::make(ord, false, e));
      out.push_back(Label::make(ord, true, e));
    }
  } else {
    for (int k = 0; k < ord.value(); ++k) {
      out.push_back(Label::make(ord, false, k));
      out.push_back(Label::make(ord, true, k));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::mutex catalog_mutex;

}  // namespace

const std::map<CanonicalForm, std::pair<int, std::string>>&
ClassicalCatalog::table(int rank, ParamOrder ord, long long max_exp) const {
  const auto key = std::make_tuple(rank, ord.value(), ord.is_generic() ? max_exp : 0);
  std::lock_guard<std::mutex> lock(catalog_mutex);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  std::map<CanonicalForm, std::pair<int, std::string>> tab;
  std::vector<Template> temps;
  for (const Label& p : parameter_values(ord, max_exp)) emit_templates(rank, p, temps);
  for (const Template& t : temps) {
    // smaller type number wins for reporting when templates coincide
    auto [pos, fresh] = tab.emplace(t.g.canonical_form(),
                                    std::make_pair(t.type, t.params));
    if (!fresh && t.type < pos->second.first)
      pos->second = {t.type, t.params};
  }
  return cache_.emplace(key, std::move(tab)).first->second;
}

ChainClass ClassicalCatalog::classify(const Gdd& g) const {
  ChainClass out;
  if (!g.connected()) {
    out.kind = ChainClass::Kind::NotApplicable;
    return out;
  }
  long long max_exp = 2;
  for (int i = 0; i < g.rank(); ++i)
    max_exp = std::max(max_exp, std::abs(g.vertex(i).exponent()));
  for (const auto& [e, l] : g.edges())
    max_exp = std::max(max_exp, std::abs(l.exponent()));
  const auto& tab = table(g.rank(), g.order(), max_exp + 2);
  const auto it = tab.find(g.canonical_form());
  if (it == tab.end()) {
    out.kind = ChainClass::Kind::NotClassified;
    return out;
  }
  out.kind = ChainClass::Kind::Classical;
  out.classical_type = it->second.first;
  out.params = it->second.second;
  return out;
}

const ClassicalCatalog& classical_catalog() {
  static ClassicalCatalog cat;
  return cat;
}

bool is_classical(const Gdd& g) { return classical_catalog().is_classical(g); }

namespace {

ChainClass classify_semi_or_quasi(const Gdd& g, bool semi) {
  ChainClass out;
  out.kind = ChainClass::Kind::NotApplicable;
  if (!g.connected() || g.rank() < 2) return out;
  if (is_classical(g)) return out;

  auto deletion_qualifies = [&](int v) {
    const Gdd d = g.delete_vertex(v);
    if (!d.connected()) return false;
    return semi ? is_simple_chain(d).is(ChainClass::Kind::SimpleChain)
                : is_classical(d);
  };

  const Shape s = g.shape();
  if (s.kind == ShapeKind::Chain) {
    for (int side = 0; side < 2; ++side) {
      const int end = side ? s.walk.back() : s.walk.front();
      const int other = side ? s.walk.front() : s.walk.back();
      if (deletion_qualifies(end)) {
        out.kind = semi ? ChainClass::Kind::SemiClassical
                        : ChainClass::Kind::QuasiClassical;
        out.root = other;
        out.witnesses = {end};
        return out;
      }
    }
    out.kind = ChainClass::Kind::NotClassified;
    return out;
  }

  // non-chain: two distinct vertices whose deletions are connected and
  // qualify
  std::vector<int> good;
  for (int v = 0; v < g.rank(); ++v)
    if (deletion_qualifies(v)) good.push_back(v);
  if (good.size() >= 2) {
    out.kind = semi ? ChainClass::Kind::SemiClassical
                    : ChainClass::Kind::QuasiClassical;
    out.witnesses = {good[0], good[1]};
    return out;
  }
  out.kind = ChainClass::Kind::NotClassified;
  return out;
}

}  // namespace

ChainClass is_semi_classical(const Gdd& g) { return classify_semi_or_quasi(g, true); }
ChainClass is_quasi_classical(const Gdd& g) { return classify_semi_or_quasi(g, false); }

ContinueResult continue_on(const Gdd& g, int v, HeadKind head,
                           const std::function<WeylVerdict(const Gdd&)>& oracle) {
  if (v < 0 || v >= g.rank()) throw GddError("continue_on: vertex out of range");
  const int deg = g.degree(v);
  if (deg > 1)
    throw GddError("head attachment is only defined at a vertex of degree <= 1");
  Label p = g.vertex(v);
  if (deg == 1) p = g.vertex(v).pow(2) * g.edge(v, g.neighbors(v)[0]);
  if (p.is_one())
    throw GddError("head attachment ill-defined: end parameter equals 1");

  std::vector<Label> diag;
  for (int i = 0; i < g.rank(); ++i) diag.push_back(g.vertex(i));
  std::vector<std::pair<Gdd::Edge, Label>> es;
  for (const auto& [e, l] : g.edges()) es.push_back({e, l});
  if (head == HeadKind::T5) {
    diag.push_back(p);
    es.push_back({{v, g.rank()}, p.inverse()});
  } else {
    diag.push_back(Label::minus_one(g.order()));
    es.push_back({{v, g.rank()}, p});
  }
  ContinueResult res{false, Gdd(g.order(), std::move(diag), std::move(es)), {}};
  res.verdict = oracle(res.extension);
  res.continues = res.verdict.finite();
  return res;
}

}  // namespace gdd
