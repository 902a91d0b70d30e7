#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gdd/gdd.hpp"

namespace gdd {

// Integer generalized Cartan matrix: a_ii = 2, a_ij <= 0 off the
// diagonal, a_ij = 0 iff a_ji = 0.
class CartanMatrix {
 public:
  static std::optional<CartanMatrix> make(int n, std::vector<int> entries);

  int rank() const { return n_; }
  int at(int i, int j) const { return a_[i * n_ + j]; }
  bool adjacent(int i, int j) const { return i != j && at(i, j) != 0; }

  CartanMatrix principal(const std::vector<int>& keep) const;
  long long determinant() const;

  bool indecomposable() const;
  std::vector<std::vector<int>> components() const;

  std::string str() const;

  friend bool operator==(const CartanMatrix& x, const CartanMatrix& y) {
    return x.n_ == y.n_ && x.a_ == y.a_;
  }

 private:
  int n_ = 0;
  std::vector<int> a_;
};

enum class GcmKind { FiniteType, AffineType, StrictlyHyperbolic, IndefiniteOther };

struct GcmClass {
  GcmKind kind = GcmKind::IndefiniteOther;
  // finite type: the principal minors, by subset, all positive
  std::vector<long long> minors;
  // affine type: an integer kernel vector (primitive, positive)
  std::vector<long long> null_vector;
};

const char* gcm_kind_name(GcmKind k);

// Kac trichotomy plus the strictly hyperbolic refinement, for an
// indecomposable matrix.  Decomposable input is classified per component
// via classify_gcm_components.
GcmClass classify_gcm(const CartanMatrix& a);
std::vector<std::pair<std::vector<int>, GcmClass>> classify_gcm_components(
    const CartanMatrix& a);

// The braiding exponential matrix of a GDD: a_ij is the maximal
// b in -N_0 with qtilde_ij = q_ii^b, when every ordered pair admits one.
std::optional<CartanMatrix> cartan_type(const Gdd& g);

enum class PropA51 { Arithmetic, QuasiAffine, Neither, NotCartanType };

const char* prop_a51_name(PropA51 v);

// Finite exponential matrix <=> arithmetic; affine or strictly
// hyperbolic <=> quasi-affine (affine only above rank 5).
PropA51 prop_a51(const Gdd& g);

}  // namespace gdd
