#include "gdd/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gdd {

std::optional<CartanMatrix> CartanMatrix::make(int n, std::vector<int> entries) {
  if (n < 1 || entries.size() != static_cast<size_t>(n) * n) return std::nullopt;
  CartanMatrix m;
  m.n_ = n;
  m.a_ = std::move(entries);
  for (int i = 0; i < n; ++i) {
    if (m.at(i, i) != 2) return std::nullopt;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m.at(i, j) > 0) return std::nullopt;
      if ((m.at(i, j) == 0) != (m.at(j, i) == 0)) return std::nullopt;
    }
  }
  return m;
}

CartanMatrix CartanMatrix::principal(const std::vector<int>& keep) const {
  CartanMatrix m;
  m.n_ = static_cast<int>(keep.size());
  m.a_.resize(keep.size() * keep.size());
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = 0; j < keep.size(); ++j)
      m.a_[i * keep.size() + j] = at(keep[i], keep[j]);
  return m;
}

// Bareiss elimination: exact integer determinant.
long long CartanMatrix::determinant() const {
  std::vector<__int128> w(a_.begin(), a_.end());
  const int n = n_;
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w[k * n + k] == 0) {
      int p = k + 1;
      while (p < n && w[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(w[k * n + j], w[p * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        w[i * n + j] =
            (w[i * n + j] * w[k * n + k] - w[i * n + k] * w[k * n + j]) / prev;
      }
      w[i * n + k] = 0;
    }
    prev = w[k * n + k];
  }
  return sign * static_cast<long long>(w[(n - 1) * n + (n - 1)]);
}

std::vector<std::vector<int>> CartanMatrix::components() const {
  std::vector<int> comp(n_, -1);
  int nc = 0;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = nc;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n_; ++v) {
        if (comp[v] < 0 && adjacent(u, v)) {
          comp[v] = nc;
          stack.push_back(v);
        }
      }
    }
    ++nc;
  }
  std::vector<std::vector<int>> out(nc);
  for (int i = 0; i < n_; ++i) out[comp[i]].push_back(i);
  return out;
}

bool CartanMatrix::indecomposable() const { return components().size() == 1; }

std::string CartanMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    os << (i ? "; " : "[");
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << at(i, j);
  }
  os << "]";
  return os.str();
}

const char* gcm_kind_name(GcmKind k) {
  switch (k) {
    case GcmKind::FiniteType: return "finite";
    case GcmKind::AffineType: return "affine";
    case GcmKind::StrictlyHyperbolic: return "strictly-hyperbolic";
    case GcmKind::IndefiniteOther: return "indefinite";
  }
  return "?";
}

namespace {

// all nonempty subsets of {0..n-1}, as index vectors
std::vector<std::vector<int>> subsets(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

bool all_minors_positive(const CartanMatrix& a) {
  for (const auto& s : subsets(a.rank()))
    if (a.principal(s).determinant() <= 0) return false;
  return true;
}

// integer kernel vector of a corank-1 matrix, via adjugate columns
std::vector<long long> kernel_vector(const CartanMatrix& a) {
  const int n = a.rank();
  std::vector<long long> v(n, 0);
  // A * adj(A) = det(A) I = 0, so a nonzero column of the adjugate spans
  // the kernel; adj[i][col] = (-1)^{i+col} * minor(drop row col, drop col i)
  for (int col = 0; col < n; ++col) {
    std::vector<long long> cand(n);
    bool nonzero = false;
    for (int row = 0; row < n; ++row) {
      std::vector<int> keep;
      for (int i = 0; i < n; ++i)
        if (i != col) keep.push_back(i);
      std::vector<int> keepc;
      for (int j = 0; j < n; ++j)
        if (j != row) keepc.push_back(j);
      std::vector<int> entries;
      entries.reserve((n - 1) * (n - 1));
      for (int i : keep)
        for (int j : keepc) entries.push_back(a.at(i, j));
      // not a GCM, compute determinant directly with a local Bareiss
      std::vector<__int128> w(entries.begin(), entries.end());
      const int k = n - 1;
      __int128 prev = 1, det = 1;
      int sign = 1;
      bool zero = false;
      for (int p = 0; p < k - 1 && !zero; ++p) {
        if (w[p * k + p] == 0) {
          int r = p + 1;
          while (r < k && w[r * k + p] == 0) ++r;
          if (r == k) {
            zero = true;
            break;
          }
          for (int j = 0; j < k; ++j) std::swap(w[p * k + j], w[r * k + j]);
          sign = -sign;
        }
        for (int i = p + 1; i < k; ++i) {
          for (int j = p + 1; j < k; ++j)
            w[i * k + j] =
                (w[i * k + j] * w[p * k + p] - w[i * k + p] * w[p * k + j]) / prev;
          w[i * k + p] = 0;
        }
        prev = w[p * k + p];
      }
      if (zero)
        det = 0;
      else if (k == 0)
        det = 1;
      else
        det = sign * w[(k - 1) * k + (k - 1)];
      const long long cof = ((row + col) % 2 ? -1 : 1) * static_cast<long long>(det);
      cand[row] = cof;
      if (cof != 0) nonzero = true;
    }
    if (nonzero) {
      long long g = 0;
      for (long long x : cand) g = std::gcd(g, x < 0 ? -x : x);
      for (long long& x : cand) x /= g;
      if (std::count_if(cand.begin(), cand.end(), [](long long x) { return x < 0; }) >
          std::count_if(cand.begin(), cand.end(), [](long long x) { return x > 0; })) {
        for (long long& x : cand) x = -x;
      }
      return cand;
    }
  }
  return v;
}

bool finite_type(const CartanMatrix& a) { return all_minors_positive(a); }

}  // namespace

GcmClass classify_gcm(const CartanMatrix& a) {
  GcmClass out;
  const int n = a.rank();
  const auto subs = subsets(n);

  bool proper_positive = true;
  std::vector<long long> minors;
  for (const auto& s : subs) {
    const long long d = a.principal(s).determinant();
    minors.push_back(d);
    if (static_cast<int>(s.size()) < n && d <= 0) proper_positive = false;
  }
  const long long det = minors.back();  // full subset is enumerated last

  if (proper_positive && det > 0) {
    out.kind = GcmKind::FiniteType;
    out.minors = std::move(minors);
    return out;
  }
  if (proper_positive && det == 0) {
    out.kind = GcmKind::AffineType;
    out.null_vector = kernel_vector(a);
    return out;
  }
  // indefinite; strictly hyperbolic iff every proper connected
  // subdiagram is of finite type
  bool strict = true;
  for (const auto& s : subs) {
    if (static_cast<int>(s.size()) == n) continue;
    const CartanMatrix sub = a.principal(s);
    if (!sub.indecomposable()) continue;
    if (!finite_type(sub)) {
      strict = false;
      break;
    }
  }
  out.kind = strict ? GcmKind::StrictlyHyperbolic : GcmKind::IndefiniteOther;
  return out;
}

std::vector<std::pair<std::vector<int>, GcmClass>> classify_gcm_components(
    const CartanMatrix& a) {
  std::vector<std::pair<std::vector<int>, GcmClass>> out;
  for (const auto& comp : a.components())
    out.push_back({comp, classify_gcm(a.principal(comp))});
  return out;
}

std::optional<CartanMatrix> cartan_type(const Gdd& g) {
  const int n = g.rank();
  std::vector<int> a(n * n, 0);
  for (int i = 0; i < n; ++i) a[i * n + i] = 2;
  for (int i = 0; i < n; ++i) {
    const Label qii = g.vertex(i);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Label t = g.edge(i, j);
      if (t.is_one()) continue;  // a_ij = 0
      // maximal b <= 0 with q_ii^b = t; search downward so the first hit
      // is maximal, bounded by the label group order
      long long bound;
      if (g.order().is_generic()) {
        // powers of q_ii can only reach t with |b| <= |exp t| unless
        // q_ii is a sign; handle the sign case by a short loop
        const long long e = qii.exponent();
        bound = e == 0 ? 2 : (std::abs(t.exponent()) / std::max<long long>(1, std::abs(e))) + 2;
      } else {
        bound = g.order().group_order();
      }
      bool found = false;
      for (long long b = 0; b <= bound; ++b) {
        if (qii.pow(-b) == t) {
          a[i * n + j] = static_cast<int>(-b);
          found = true;
          break;
        }
      }
      if (!found) return std::nullopt;
    }
  }
  return CartanMatrix::make(n, std::move(a));
}

const char* prop_a51_name(PropA51 v) {
  switch (v) {
    case PropA51::Arithmetic: return "arithmetic";
    case PropA51::QuasiAffine: return "quasi-affine";
    case PropA51::Neither: return "neither";
    case PropA51::NotCartanType: return "not-cartan-type";
  }
  return "?";
}

PropA51 prop_a51(const Gdd& g) {
  const auto a = cartan_type(g);
  if (!a) return PropA51::NotCartanType;
  const GcmClass c = classify_gcm(*a);
  switch (c.kind) {
    case GcmKind::FiniteType:
      return PropA51::Arithmetic;
    case GcmKind::AffineType:
      return PropA51::QuasiAffine;
    case GcmKind::StrictlyHyperbolic:
      return g.rank() <= 5 ? PropA51::QuasiAffine : PropA51::Neither;
    case GcmKind::IndefiniteOther:
      return PropA51::Neither;
  }
  return PropA51::Neither;
}

}  // namespace gdd
