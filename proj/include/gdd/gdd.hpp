#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gdd/label.hpp"

namespace gdd {

struct GddError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ShapeKind { Chain, SimpleCycleCandidate, TreeWithBranch, Other };

struct Shape {
  ShapeKind kind = ShapeKind::Other;
  // for chains: the vertices end to end; for cycles: a closed walk
  std::vector<int> walk;
};

// Total-order key: lexicographically minimal serialization of
// (rank, order, diag, edges) over all vertex relabelings.
struct CanonicalForm {
  std::vector<long long> key;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.key == b.key;
  }
  friend bool operator!=(const CanonicalForm& a, const CanonicalForm& b) {
    return !(a == b);
  }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    return a.key < b.key;
  }
  std::string str() const;
  size_t hash() const;
};

// A Generalized Dynkin Diagram over one parameter order: vertex labels
// q_ii plus symmetrized edge labels, an edge existing exactly when its
// label differs from 1.
class Gdd {
 public:
  using Edge = std::pair<int, int>;  // 0-based, first < second

  Gdd(ParamOrder ord, std::vector<Label> diag,
      std::vector<std::pair<Edge, Label>> edges);

  ParamOrder order() const { return ord_; }
  int rank() const { return static_cast<int>(diag_.size()); }

  const Label& vertex(int i) const { return diag_.at(i); }
  Label edge(int i, int j) const;  // 1 when absent
  bool adjacent(int i, int j) const;
  const std::map<Edge, Label>& edges() const { return edges_; }
  std::vector<int> neighbors(int i) const;
  int degree(int i) const;

  Gdd delete_vertex(int i) const;
  Gdd induced(const std::vector<int>& keep) const;
  // perm[i] is the new index of old vertex i
  Gdd permuted(const std::vector<int>& perm) const;

  bool connected() const;
  std::vector<std::vector<int>> components() const;
  Shape shape() const;

  CanonicalForm canonical_form() const;
  // also yields a permutation realizing the minimum (old index -> new)
  std::pair<CanonicalForm, std::vector<int>> canonical_form_with_perm() const;

  std::string str() const;  // one-line debug rendering

  friend bool operator==(const Gdd& a, const Gdd& b) {
    return a.ord_ == b.ord_ && a.diag_ == b.diag_ && a.edges_ == b.edges_;
  }

 private:
  ParamOrder ord_;
  std::vector<Label> diag_;
  std::map<Edge, Label> edges_;

  void serialize_under(const std::vector<int>& perm,
                       std::vector<long long>& out) const;
};

}  // namespace gdd

template <>
struct std::hash<gdd::CanonicalForm> {
  size_t operator()(const gdd::CanonicalForm& c) const { return c.hash(); }
};
