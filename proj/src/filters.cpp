#include "gdd/filters.hpp"

#include <algorithm>

namespace gdd {

const char* filter_name(FilterId id) {
  switch (id) {
    case FilterId::L2_20: return "2.20";
    case FilterId::L2_56: return "2.56";
    case FilterId::L2_59: return "2.59";
    case FilterId::L2_60: return "2.60";
    case FilterId::L2_61: return "2.61";
    case FilterId::L2_77: return "2.77";
    case FilterId::L2_78: return "2.78";
    case FilterId::L2_79: return "2.79";
    case FilterId::L2_80: return "2.80";
    case FilterId::L2_81: return "2.81";
    case FilterId::L2_82: return "2.82";
    case FilterId::L2_90: return "2.90";
  }
  return "?";
}

bool PatternConstraint::admits(const Label& u) const {
  const auto d = u.multiplicative_order();
  if (order > 0) return d && *d == order;
  for (int k : neq)
    if (u.pow(k).is_one()) return false;
  if (d)
    for (int a : avoid)
      if (*d == a) return false;
  return true;
}

Gdd ExceptionPattern::instantiate(const Label& u) const {
  const ParamOrder ord = u.order();
  std::vector<Label> d;
  for (const PatternLabel& pl : diag) {
    Label l = u.pow(pl.exp);
    if (pl.sign < 0) l = l * Label::minus_one(ord);
    d.push_back(l);
  }
  std::vector<std::pair<Gdd::Edge, Label>> es;
  for (const auto& pe : edges) {
    Label l = u.pow(pe.l.exp);
    if (pe.l.sign < 0) l = l * Label::minus_one(ord);
    es.push_back({{pe.i, pe.j}, l});
  }
  return Gdd(ord, std::move(d), std::move(es));
}

namespace {

std::vector<Label> candidate_parameters(const Gdd& g) {
  std::vector<Label> out;
  const ParamOrder ord = g.order();
  if (ord.is_generic()) {
    long long e_max = 2;
    for (int i = 0; i < g.rank(); ++i)
      e_max = std::max(e_max, std::abs(g.vertex(i).exponent()));
    for (const auto& [e, l] : g.edges())
      e_max = std::max(e_max, std::abs(l.exponent()));
    for (long long e = -e_max - 2; e <= e_max + 2; ++e) {
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

}  // namespace

bool ExceptionPattern::matches(const Gdd& g) const {
  if (g.rank() != rank) return false;
  const CanonicalForm cf = g.canonical_form();
  for (const Label& u : candidate_parameters(g)) {
    if (!constraint.admits(u)) continue;
    try {
      const Gdd inst = instantiate(u);
      if (inst.edges().size() != g.edges().size()) continue;
      if (inst.canonical_form() == cf) return true;
    } catch (const GddError&) {
      // a degenerate instantiation (edge label 1) cannot match
    }
  }
  return false;
}

// tables generated from the printed exception diagrams
#include "filters_data.inc"

const std::vector<ExceptionPattern>& exceptions_of(FilterId id) {
  static const std::vector<ExceptionPattern> empty;
  switch (id) {
    case FilterId::L2_20: return kExc2_20;
    case FilterId::L2_59: return kExc2_59;
    case FilterId::L2_77: return kExc2_77;
    case FilterId::L2_78: return kExc2_78;
    case FilterId::L2_79: return kExc2_79;
    case FilterId::L2_82: return kExc2_82;
    default: return empty;
  }
}

namespace {

FilterVerdict reject_unless_exception(const Gdd& g, FilterId id) {
  FilterVerdict v{id};
  for (const ExceptionPattern& p : exceptions_of(id)) {
    if (p.matches(g)) {
      v.outcome = FilterVerdict::Outcome::ExceptionMatched;
      v.exception = p.tag;
      return v;
    }
  }
  v.outcome = FilterVerdict::Outcome::RejectsNonArithmetic;
  return v;
}

struct StarShape {
  int center;
  std::vector<int> leaves;
};

// K_{1,3}: one degree-3 vertex, three pendants
std::optional<StarShape> as_star(const Gdd& g) {
  if (g.rank() != 4 || g.edges().size() != 3 || !g.connected()) return std::nullopt;
  StarShape s{-1, {}};
  for (int i = 0; i < 4; ++i) {
    const int d = g.degree(i);
    if (d == 3)
      s.center = i;
    else if (d == 1)
      s.leaves.push_back(i);
    else
      return std::nullopt;
  }
  if (s.center < 0 || s.leaves.size() != 3) return std::nullopt;
  return s;
}

struct TrianglePendantShape {
  int center;   // in the triangle, carries the pendant
  int pendant;  // degree 1
  int x, y;     // the remaining triangle pair
};

std::optional<TrianglePendantShape> as_triangle_pendant(const Gdd& g) {
  if (g.rank() != 4 || g.edges().size() != 4 || !g.connected()) return std::nullopt;
  TrianglePendantShape s{-1, -1, -1, -1};
  std::vector<int> two;
  for (int i = 0; i < 4; ++i) {
    const int d = g.degree(i);
    if (d == 3)
      s.center = i;
    else if (d == 1)
      s.pendant = i;
    else if (d == 2)
      two.push_back(i);
    else
      return std::nullopt;
  }
  if (s.center < 0 || s.pendant < 0 || two.size() != 2) return std::nullopt;
  if (!g.adjacent(two[0], two[1]) || !g.adjacent(s.center, s.pendant))
    return std::nullopt;
  s.x = two[0];
  s.y = two[1];
  return s;
}

FilterVerdict run_2_20(const Gdd& g) {
  FilterVerdict v{FilterId::L2_20};
  if (g.rank() != 4 || g.shape().kind != ShapeKind::Chain) return v;
  if (simple_chain_failures(g).size() < 2) return v;
  return reject_unless_exception(g, FilterId::L2_20);
}

FilterVerdict run_2_56(const Gdd& g) {
  FilterVerdict v{FilterId::L2_56};
  const auto s = as_star(g);
  if (!s) return v;
  for (int l : s->leaves)
    if (!g.vertex(l).is_minus_one()) return v;
  v.outcome = FilterVerdict::Outcome::RejectsNonArithmetic;
  return v;
}

FilterVerdict run_2_59(const Gdd& g) {
  FilterVerdict v{FilterId::L2_59};
  if (!as_star(g) && !as_triangle_pendant(g)) return v;
  bool hyp = false;
  for (const auto& [e, l] : g.edges()) {
    if (g.vertex(e.first).is_minus_one() && g.vertex(e.second).is_minus_one() &&
        l.is_minus_one()) {
      hyp = true;
      break;
    }
  }
  if (!hyp) return v;
  return reject_unless_exception(g, FilterId::L2_59);
}

FilterVerdict run_2_60(const Gdd& g) {
  FilterVerdict v{FilterId::L2_60};
  const auto s = as_triangle_pendant(g);
  if (!s) return v;
  if (!g.vertex(s->center).is_minus_one()) return v;
  const Label tp = g.edge(s->pendant, s->center);
  if (!(tp * g.edge(s->center, s->x)).is_one() &&
      !(tp * g.edge(s->center, s->y)).is_one()) {
    v.outcome = FilterVerdict::Outcome::RejectsNonArithmetic;
  }
  return v;
}

FilterVerdict run_2_61(const Gdd& g) {
  FilterVerdict v{FilterId::L2_61};
  if (!as_star(g)) return v;
  if (is_classical(g)) return v;
  auto small_order = [](const Label& l) {
    const auto d = l.multiplicative_order();
    return d && (*d == 2 || *d == 3);
  };
  bool bad = false;
  for (int i = 0; i < 4 && !bad; ++i)
    if (!small_order(g.vertex(i))) bad = true;
  for (const auto& [e, l] : g.edges())
    if (!small_order(l)) bad = true;
  if (bad) v.outcome = FilterVerdict::Outcome::RejectsNonArithmetic;
  return v;
}

FilterVerdict run_2_77(const Gdd& g) {
  FilterVerdict v{FilterId::L2_77};
  if (g.rank() != 4 || g.shape().kind != ShapeKind::Chain) return v;
  if (is_classical(g)) return v;
  const Shape s = g.shape();
  const bool semi_shape =
      [&] {
        for (int side = 0; side < 2; ++side) {
          const int end = side ? s.walk.back() : s.walk.front();
          const Gdd d = g.delete_vertex(end);
          if (d.connected() &&
              is_simple_chain(d).is(ChainClass::Kind::SimpleChain))
            return true;
        }
        return false;
      }();
  if (!semi_shape) return v;
  return reject_unless_exception(g, FilterId::L2_77);
}

FilterVerdict run_2_78(const Gdd& g, const FilterOptions& opt) {
  FilterVerdict v{FilterId::L2_78};
  if (g.rank() != 4 || g.shape().kind != ShapeKind::Chain) return v;
  if (simple_chain_failures(g).size() != 1) return v;
  const Shape s = g.shape();
  const Label q22 = g.vertex(s.walk[1]);
  const Label q33 = g.vertex(s.walk[2]);
  const Label t32 = g.edge(s.walk[1], s.walk[2]);
  bool hyp;
  if (opt.l278 == L278Reading::ConjunctionFirst) {
    hyp = (!q22.is_minus_one() && !(t32 * q22).is_one()) ||
          (!q33.is_minus_one() && !(t32 * q33).is_one());
  } else {
    hyp = !q22.is_minus_one() &&
          (!(t32 * q22).is_one() || !q33.is_minus_one()) &&
          !(t32 * q33).is_one();
  }
  if (!hyp) return v;
  return reject_unless_exception(g, FilterId::L2_78);
}

FilterVerdict run_2_79(const Gdd& g) {
  FilterVerdict v{FilterId::L2_79};
  if (g.rank() != 4 || !g.connected()) return v;
  const Shape s = g.shape();
  const bool chain = s.kind == ShapeKind::Chain;
  bool hyp = false;
  for (int i = 0; i < 4 && !hyp; ++i) {
    if (g.vertex(i).is_minus_one()) continue;
    if (chain && i != s.walk.front() && i != s.walk.back()) continue;
    for (int j : g.neighbors(i)) {
      if (!(g.vertex(i) * g.edge(i, j)).is_one()) {
        hyp = true;
        break;
      }
    }
  }
  if (!hyp) return v;
  return reject_unless_exception(g, FilterId::L2_79);
}

FilterVerdict run_2_80(const Gdd& g) {
  FilterVerdict v{FilterId::L2_80};
  const auto tp = as_triangle_pendant(g);
  const auto st = as_star(g);
  if (!tp && !st) return v;
  bool hyp = false;
  if (tp) {
    hyp = g.vertex(tp->x) == g.vertex(tp->y) && !g.vertex(tp->x).is_minus_one();
  } else {
    const auto& ls = st->leaves;
    for (int a = 0; a < 3 && !hyp; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (g.vertex(ls[a]) == g.vertex(ls[b]) &&
            !g.vertex(ls[a]).is_minus_one())
          hyp = true;
  }
  if (!hyp) return v;
  if (is_classical(g)) return v;
  v.outcome = FilterVerdict::Outcome::RejectsNonArithmetic;
  return v;
}

FilterVerdict run_2_81(const Gdd& g) {
  FilterVerdict v{FilterId::L2_81};
  const auto tp = as_triangle_pendant(g);
  if (!tp) return v;
  for (int i = 0; i < 4; ++i)
    if (!g.vertex(i).is_minus_one()) return v;
  if (g.order().value() == 4) return v;  // q in R_4 is the excluded case
  v.outcome = FilterVerdict::Outcome::RejectsNonArithmetic;
  return v;
}

FilterVerdict run_2_82(const Gdd& g) {
  FilterVerdict v{FilterId::L2_82};
  const auto tp = as_triangle_pendant(g);
  const auto st = as_star(g);
  bool hyp = false;
  if (tp && g.vertex(tp->center).is_minus_one()) {
    const Label t12 = g.edge(tp->pendant, tp->center);
    hyp = !(t12 * g.edge(tp->center, tp->x)).is_one() ||
          !(t12 * g.edge(tp->center, tp->y)).is_one();
  } else if (st && g.vertex(st->center).is_minus_one()) {
    // two leaves carry -1, the third is the free end
    const auto& ls = st->leaves;
    for (int free = 0; free < 3 && !hyp; ++free) {
      const int x = ls[(free + 1) % 3], y = ls[(free + 2) % 3];
      if (!g.vertex(x).is_minus_one() || !g.vertex(y).is_minus_one()) continue;
      const Label t12 = g.edge(ls[free], st->center);
      if (!(t12 * g.edge(st->center, x)).is_one() ||
          !(t12 * g.edge(st->center, y)).is_one())
        hyp = true;
    }
  }
  if (!hyp) return v;
  return reject_unless_exception(g, FilterId::L2_82);
}

FilterVerdict run_2_90(const Gdd& g) {
  FilterVerdict v{FilterId::L2_90};
  if (g.rank() < 5 || !g.connected()) return v;
  if (g.shape().kind == ShapeKind::Chain) return v;
  for (int i = 0; i < g.rank(); ++i) {
    const Gdd d = g.delete_vertex(i);
    if (d.connected() && is_simple_chain(d).is(ChainClass::Kind::SimpleChain))
      return v;  // a connected simple-chain deletion exists
  }
  v.outcome = FilterVerdict::Outcome::RejectsNonArithmetic;
  return v;
}

}  // namespace

std::vector<FilterVerdict> filter_bank(const Gdd& g, const FilterOptions& opt) {
  std::vector<FilterVerdict> out;
  out.push_back(run_2_20(g));
  out.push_back(run_2_56(g));
  out.push_back(run_2_59(g));
  out.push_back(run_2_60(g));
  out.push_back(run_2_61(g));
  out.push_back(run_2_77(g));
  out.push_back(run_2_78(g, opt));
  out.push_back(run_2_79(g));
  out.push_back(run_2_80(g));
  out.push_back(run_2_81(g));
  out.push_back(run_2_82(g));
  out.push_back(run_2_90(g));
  return out;
}

bool any_filter_rejects(const Gdd& g, const FilterOptions& opt) {
  for (const FilterVerdict& v : filter_bank(g, opt))
    if (v.rejects()) return true;
  return false;
}

}  // namespace gdd
