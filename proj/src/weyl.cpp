#include "gdd/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>

namespace gdd {

CartanRow cartan_row(const Gdd& g, int i, int m_cap) {
  const int n = g.rank();
  CartanRow row;
  row.c.assign(n, 0);
  row.c[i] = 2;
  const Label qii = g.vertex(i);
  const auto d = qii.multiplicative_order();  // nullopt for generic q^e
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    const Label t = g.edge(i, j);
    if (t.is_one()) continue;
    // minimal m with (m+1)_{q_ii} = 0 or q_ii^m * t = 1
    long long qnum_m = -1;  // the q-number branch fires at m = ord - 1
    if (d && *d > 1) qnum_m = *d - 1;
    long long pow_m = -1;  // least m >= 0 with q_ii^m = t^{-1}
    if (d) {
      const Label target = t.inverse();
      Label p = Label::one(g.order());
      for (long long m = 0; m < *d; ++m) {
        if (p == target) {
          pow_m = m;
          break;
        }
        p = p * qii;
      }
    } else {
      // generic q_ii = +-q^e with e != 0: solve m*e = -f exactly
      const long long e = qii.exponent();
      const long long f = t.exponent();
      if (e != 0 && f % e == 0 && -f / e >= 0) {
        const long long m = -f / e;
        if (qii.pow(m) == t.inverse()) pow_m = m;
      }
    }
    long long m = -1;
    if (qnum_m >= 0 && pow_m >= 0)
      m = std::min(qnum_m, pow_m);
    else if (qnum_m >= 0)
      m = qnum_m;
    else if (pow_m >= 0)
      m = pow_m;
    if (m < 0 || m > m_cap) {
      row.undefined_j = j;
      return row;
    }
    row.c[j] = static_cast<int>(-m);
  }
  return row;
}

namespace {

Gdd reflect_with_row(const Gdd& g, int i, const CartanRow& row) {
  const int n = g.rank();
  std::vector<Label> diag;
  diag.reserve(n);
  for (int j = 0; j < n; ++j) {
    if (j == i) {
      diag.push_back(g.vertex(i));
    } else {
      const long long c = row.c[j];
      // q'_jj = q_jj * qt_ij^{-c} * q_ii^{c^2}
      diag.push_back(g.vertex(j) * g.edge(i, j).pow(-c) *
                     g.vertex(i).pow(c * c));
    }
  }
  std::vector<std::pair<Gdd::Edge, Label>> edges;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      Label t = Label::one(g.order());
      if (j == i || k == i) {
        const int o = j == i ? k : j;
        const long long c = row.c[o];
        // qt'_io = qt_io^{-1} * q_ii^{2c}
        t = g.edge(i, o).inverse() * g.vertex(i).pow(2 * c);
      } else {
        const long long cj = row.c[j], ck = row.c[k];
        // qt'_jk = qt_jk * qt_ij^{-ck} * qt_ik^{-cj} * q_ii^{2 cj ck}
        t = g.edge(j, k) * g.edge(i, j).pow(-ck) * g.edge(i, k).pow(-cj) *
            g.vertex(i).pow(2 * cj * ck);
      }
      if (!t.is_one()) edges.push_back({{j, k}, t});
    }
  }
  return Gdd(g.order(), std::move(diag), std::move(edges));
}

// does some connected subdiagram of size >= 2 have a Cartan-type
// exponential matrix that is not of finite type?
bool has_nonfinite_cartan_subdiagram(const Gdd& g) {
  const int n = g.rank();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < 2) continue;
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) keep.push_back(i);
    const Gdd sub = g.induced(keep);
    if (!sub.connected()) continue;
    const auto a = cartan_type(sub);
    if (!a) continue;
    if (classify_gcm(*a).kind != GcmKind::FiniteType) return true;
  }
  return false;
}

struct ObjectState {
  Gdd rep;
  std::set<std::vector<int>> roots;
};

WeylVerdict explore_component(const Gdd& g, const Caps& caps) {
  WeylVerdict v;
  v.caps_used = caps;
  const int n = g.rank();

  if (n == 1) {
    v.outcome = WeylOutcome::Finite;
    v.root_count = 1;
    v.object_count = 1;
    return v;
  }

  std::vector<ObjectState> objs;
  std::unordered_map<CanonicalForm, int> index;

  auto add_object = [&](const Gdd& raw) -> std::pair<int, std::vector<int>> {
    auto [cf, perm] = raw.canonical_form_with_perm();
    auto it = index.find(cf);
    if (it != index.end()) return {it->second, perm};
    const int id = static_cast<int>(objs.size());
    index.emplace(cf, id);
    ObjectState st{raw.permuted(perm), {}};
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(n, 0);
      e[i] = 1;
      st.roots.insert(std::move(e));
    }
    objs.push_back(std::move(st));
    return {id, perm};
  };

  auto [base, base_perm] = add_object(g);
  (void)base_perm;

  if (caps.cartan_shortcut && has_nonfinite_cartan_subdiagram(objs[0].rep)) {
    v.outcome = WeylOutcome::InfiniteCertified;
    v.reason = InfReason::AffineCartanSubcase;
    v.detail = "non-finite Cartan subdiagram at base";
    v.object_count = 1;
    return v;
  }

  std::deque<int> queue{0};
  std::vector<char> queued(1, 1);

  while (!queue.empty()) {
    const int xi = queue.front();
    queue.pop_front();
    queued[xi] = 0;

    for (int i = 0; i < n; ++i) {
      // snapshot: objs may reallocate on add_object
      const CartanRow row = cartan_row(objs[xi].rep, i, caps.m_cap);
      if (!row.defined()) {
        v.outcome = WeylOutcome::InfiniteCertified;
        v.reason = InfReason::UndefinedReflection;
        std::ostringstream os;
        os << "undefined Cartan entry c(" << i + 1 << ","
           << *row.undefined_j + 1 << ") at object " << xi;
        v.detail = os.str();
        v.object_count = static_cast<long long>(objs.size());
        return v;
      }
      const Gdd raw = reflect_with_row(objs[xi].rep, i, row);
      const bool was_known = index.count(raw.canonical_form()) != 0;
      auto [yi, perm] = add_object(raw);
      if (!was_known) {
        if (static_cast<int>(objs.size()) > caps.max_objects) {
          v.outcome = WeylOutcome::CapExceeded;
          v.detail = "max_objects";
          v.object_count = static_cast<long long>(objs.size());
          return v;
        }
        if (caps.cartan_shortcut &&
            has_nonfinite_cartan_subdiagram(objs[yi].rep)) {
          v.outcome = WeylOutcome::InfiniteCertified;
          v.reason = InfReason::AffineCartanSubcase;
          std::ostringstream os;
          os << "non-finite Cartan subdiagram at object " << yi;
          v.detail = os.str();
          v.object_count = static_cast<long long>(objs.size());
          return v;
        }
        queued.resize(objs.size(), 0);
      }

      // transport roots of X through the reflection into Y's labeling
      bool grew = false;
      for (const auto& r : objs[xi].roots) {
        long long ci = 0;
        for (int j = 0; j < n; ++j) ci += static_cast<long long>(row.c[j]) * r[j];
        std::vector<int> w = r;
        w[i] = static_cast<int>(r[i] - ci);
        bool all_nonpos = true;
        long long height = 0;
        for (int j = 0; j < n; ++j) {
          if (w[j] > 0) all_nonpos = false;
          height += std::abs(w[j]);
        }
        if (all_nonpos)
          for (int& x : w) x = -x;
        for (int x : w) {
          if (x < 0)
            throw GddError("root transport produced a mixed-sign vector");
        }
        if (height > caps.max_height) {
          v.outcome = WeylOutcome::CapExceeded;
          v.detail = "max_height";
          v.object_count = static_cast<long long>(objs.size());
          return v;
        }
        std::vector<int> wp(n);
        for (int j = 0; j < n; ++j) wp[perm[j]] = w[j];
        if (objs[yi].roots.insert(std::move(wp)).second) grew = true;
      }
      if (static_cast<long long>(objs[yi].roots.size()) > caps.max_roots) {
        v.outcome = WeylOutcome::CapExceeded;
        v.detail = "max_roots";
        v.object_count = static_cast<long long>(objs.size());
        return v;
      }
      if ((grew || !was_known) && !queued[yi]) {
        queued[yi] = 1;
        queue.push_back(yi);
      }
    }
  }

  v.outcome = WeylOutcome::Finite;
  v.root_count = static_cast<long long>(objs[0].roots.size());
  v.object_count = static_cast<long long>(objs.size());
  return v;
}

}  // namespace

std::optional<Gdd> reflect(const Gdd& g, int i, int m_cap) {
  const CartanRow row = cartan_row(g, i, m_cap);
  if (!row.defined()) return std::nullopt;
  return reflect_with_row(g, i, row);
}

std::string WeylVerdict::str() const {
  std::ostringstream os;
  switch (outcome) {
    case WeylOutcome::Finite:
      os << "finite(roots=" << root_count << ",objects=" << object_count << ")";
      break;
    case WeylOutcome::InfiniteCertified:
      os << "infinite("
         << (reason == InfReason::UndefinedReflection ? "undefined-reflection"
                                                      : "cartan-subcase")
         << (detail.empty() ? "" : ": " + detail) << ")";
      break;
    case WeylOutcome::CapExceeded:
      os << "cap-exceeded(" << detail << ")";
      break;
  }
  return os.str();
}

WeylVerdict arithmetic_verdict(const Gdd& g, const Caps& caps) {
  const auto comps = g.components();
  if (comps.size() == 1) return explore_component(g, caps);
  WeylVerdict total;
  total.caps_used = caps;
  total.outcome = WeylOutcome::Finite;
  for (const auto& comp : comps) {
    const WeylVerdict v = explore_component(g.induced(comp), caps);
    if (v.outcome == WeylOutcome::InfiniteCertified) return v;
    if (v.outcome == WeylOutcome::CapExceeded) {
      total.outcome = WeylOutcome::CapExceeded;
      total.detail = v.detail;
    } else if (total.outcome == WeylOutcome::Finite) {
      total.root_count += v.root_count;
      total.object_count += v.object_count;
    }
  }
  return total;
}

}  // namespace gdd
