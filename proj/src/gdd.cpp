#include "gdd/gdd.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace gdd {

std::string CanonicalForm::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < key.size(); ++i) os << (i ? "." : "") << key[i];
  return os.str();
}

size_t CanonicalForm::hash() const {
  size_t h = 1469598103934665603ull;
  for (long long v : key) {
    h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Gdd::Gdd(ParamOrder ord, std::vector<Label> diag,
         std::vector<std::pair<Edge, Label>> edges)
    : ord_(ord), diag_(std::move(diag)) {
  if (diag_.empty()) throw GddError("a GDD needs at least one vertex");
  for (const Label& l : diag_) {
    if (!(l.order() == ord_)) throw GddError("vertex label order mismatch");
  }
  for (auto& [e, l] : edges) {
    auto [i, j] = e;
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= rank() || i == j) throw GddError("edge endpoints out of range");
    if (!(l.order() == ord_)) throw GddError("edge label order mismatch");
    if (l.is_one()) continue;  // label 1 means no edge
    auto [it, fresh] = edges_.emplace(Edge{i, j}, l);
    if (!fresh && it->second != l) throw GddError("conflicting duplicate edge");
  }
}

Label Gdd::edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = edges_.find({i, j});
  return it == edges_.end() ? Label::one(ord_) : it->second;
}

bool Gdd::adjacent(int i, int j) const {
  if (i > j) std::swap(i, j);
  return edges_.count({i, j}) != 0;
}

std::vector<int> Gdd::neighbors(int i) const {
  std::vector<int> out;
  for (const auto& [e, l] : edges_) {
    if (e.first == i) out.push_back(e.second);
    if (e.second == i) out.push_back(e.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Gdd::degree(int i) const { return static_cast<int>(neighbors(i).size()); }

Gdd Gdd::delete_vertex(int v) const {
  if (v < 0 || v >= rank()) throw GddError("delete_vertex: index out of range");
  if (rank() == 1) throw GddError("delete_vertex: cannot empty a GDD");
  std::vector<int> keep;
  for (int i = 0; i < rank(); ++i)
    if (i != v) keep.push_back(i);
  return induced(keep);
}

Gdd Gdd::induced(const std::vector<int>& keep) const {
  std::vector<int> pos(rank(), -1);
  for (size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
  std::vector<Label> d;
  d.reserve(keep.size());
  for (int v : keep) d.push_back(diag_[v]);
  std::vector<std::pair<Edge, Label>> es;
  for (const auto& [e, l] : edges_) {
    if (pos[e.first] >= 0 && pos[e.second] >= 0)
      es.push_back({{pos[e.first], pos[e.second]}, l});
  }
  return Gdd(ord_, std::move(d), std::move(es));
}

Gdd Gdd::permuted(const std::vector<int>& perm) const {
  std::vector<Label> d(rank(), Label::one(ord_));
  for (int i = 0; i < rank(); ++i) d[perm[i]] = diag_[i];
  std::vector<std::pair<Edge, Label>> es;
  for (const auto& [e, l] : edges_)
    es.push_back({{perm[e.first], perm[e.second]}, l});
  return Gdd(ord_, std::move(d), std::move(es));
}

bool Gdd::connected() const { return components().size() == 1; }

std::vector<std::vector<int>> Gdd::components() const {
  std::vector<int> comp(rank(), -1);
  int nc = 0;
  for (int s = 0; s < rank(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = nc;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : neighbors(u)) {
        if (comp[v] < 0) {
          comp[v] = nc;
          stack.push_back(v);
        }
      }
    }
    ++nc;
  }
  std::vector<std::vector<int>> out(nc);
  for (int i = 0; i < rank(); ++i) out[comp[i]].push_back(i);
  return out;
}

Shape Gdd::shape() const {
  Shape s;
  const int n = rank();
  if (!connected()) {
    s.kind = ShapeKind::Other;
    return s;
  }
  const size_t ne = edges_.size();
  std::vector<int> deg(n, 0);
  for (const auto& [e, l] : edges_) {
    ++deg[e.first];
    ++deg[e.second];
  }
  const int maxdeg = n ? *std::max_element(deg.begin(), deg.end()) : 0;
  if (ne == static_cast<size_t>(n) - 1 && maxdeg <= 2) {
    s.kind = ShapeKind::Chain;
    if (n == 1) {
      s.walk = {0};
      return s;
    }
    int start = 0;
    while (deg[start] != 1) ++start;
    s.walk.push_back(start);
    int prev = -1, cur = start;
    while (s.walk.size() < static_cast<size_t>(n)) {
      for (int v : neighbors(cur)) {
        if (v != prev) {
          s.walk.push_back(v);
          prev = cur;
          cur = v;
          break;
        }
      }
    }
    return s;
  }
  if (ne == static_cast<size_t>(n) && maxdeg == 2 && n >= 3) {
    s.kind = ShapeKind::SimpleCycleCandidate;
    s.walk.push_back(0);
    int prev = -1, cur = 0;
    while (s.walk.size() < static_cast<size_t>(n)) {
      for (int v : neighbors(cur)) {
        if (v != prev) {
          s.walk.push_back(v);
          prev = cur;
          cur = v;
          break;
        }
      }
    }
    return s;
  }
  if (ne == static_cast<size_t>(n) - 1) {
    s.kind = ShapeKind::TreeWithBranch;
    return s;
  }
  s.kind = ShapeKind::Other;
  return s;
}

void Gdd::serialize_under(const std::vector<int>& perm,
                          std::vector<long long>& out) const {
  const int n = rank();
  out.clear();
  out.push_back(n);
  out.push_back(ord_.value());
  // inverse: who lands on position p
  std::vector<int> at(n);
  for (int i = 0; i < n; ++i) at[perm[i]] = i;
  for (int p = 0; p < n; ++p) out.push_back(diag_[at[p]].encode());
  std::vector<std::array<long long, 3>> es;
  for (const auto& [e, l] : edges_) {
    long long a = perm[e.first], b = perm[e.second];
    if (a > b) std::swap(a, b);
    es.push_back({a, b, l.encode()});
  }
  std::sort(es.begin(), es.end());
  for (const auto& t : es) {
    out.push_back(t[0]);
    out.push_back(t[1]);
    out.push_back(t[2]);
  }
}

std::pair<CanonicalForm, std::vector<int>> Gdd::canonical_form_with_perm() const {
  const int n = rank();
  if (n > 8) throw GddError("canonical form is brute force, rank <= 8 only");
  std::vector<int> perm(n), best_perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  best_perm = perm;
  std::vector<long long> best, cur;
  serialize_under(perm, best);
  while (std::next_permutation(perm.begin(), perm.end())) {
    serialize_under(perm, cur);
    if (cur < best) {
      best = cur;
      best_perm = perm;
    }
  }
  return {CanonicalForm{std::move(best)}, std::move(best_perm)};
}

CanonicalForm Gdd::canonical_form() const {
  return canonical_form_with_perm().first;
}

std::string Gdd::str() const {
  std::ostringstream os;
  os << "[";
  if (ord_.is_generic())
    os << "generic";
  else
    os << "N=" << ord_.value();
  os << "; ";
  for (int i = 0; i < rank(); ++i) os << (i ? "," : "") << diag_[i].str();
  os << ";";
  for (const auto& [e, l] : edges_)
    os << " " << e.first + 1 << "-" << e.second + 1 << ":" << l.str();
  os << "]";
  return os.str();
}

}  // namespace gdd
