#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gdd {

struct LabelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Multiplicative order of the formal parameter q.  Finite orders below 3
// are rejected: the diagrams assume q^2 != 1 wherever q itself appears,
// and the constants 1, -1 stay expressible at every order.
class ParamOrder {
 public:
  constexpr ParamOrder() = default;  // generic (infinite order)

  static ParamOrder generic() { return ParamOrder{}; }
  static ParamOrder finite(int n) {
    if (n < 3) throw LabelError("parameter order must be >= 3 or generic");
    ParamOrder o;
    o.n_ = n;
    return o;
  }

  bool is_generic() const { return n_ == 0; }
  // order of q itself; 0 for generic
  int value() const { return n_; }
  // order of the label group <q, -1>: lcm(2, n); 0 for generic
  int group_order() const { return n_ == 0 ? 0 : (n_ % 2 == 0 ? n_ : 2 * n_); }

  friend bool operator==(ParamOrder a, ParamOrder b) { return a.n_ == b.n_; }
  friend bool operator!=(ParamOrder a, ParamOrder b) { return a.n_ != b.n_; }
  friend bool operator<(ParamOrder a, ParamOrder b) { return a.n_ < b.n_; }

 private:
  int n_ = 0;
};

// A monomial label s * q^e with s in {+1, -1}.
//
// Under a finite order N the value lives in the cyclic group of order
// M = lcm(2, N) generated by zeta_M, with q = zeta_M^{M/N} and
// -1 = zeta_M^{M/2}; only the residue mod M is stored, so equality is a
// single comparison and the even-N alias -q^e = q^{e + N/2} disappears.
// Generic labels keep (sign, exponent) literally.
class Label {
 public:
  Label() = default;  // the label 1, generic order

  static Label make(ParamOrder ord, bool negative, long long exp);
  static Label one(ParamOrder ord) { return make(ord, false, 0); }
  static Label minus_one(ParamOrder ord) { return make(ord, true, 0); }
  static Label q(ParamOrder ord) { return make(ord, false, 1); }
  static Label q_pow(ParamOrder ord, long long e) { return make(ord, false, e); }

  ParamOrder order() const { return ord_; }

  bool is_one() const;
  bool is_minus_one() const;

  Label operator*(const Label& rhs) const;
  Label inverse() const;
  Label pow(long long m) const;

  // least d >= 1 with (*this)^d == 1; nullopt when infinite
  std::optional<long long> multiplicative_order() const;

  // vanishing of the q-integer (m)_a = 1 + a + ... + a^{m-1}
  bool qnumber_is_zero(long long m) const;

  // display decomposition: minimal |exponent|, ties toward positive sign
  bool negative() const;
  long long exponent() const;

  std::string str() const;
  // grammar: 1 | -1 | q | -q | q^<int> | -q^<int>
  static std::optional<Label> parse(std::string_view text, ParamOrder ord);

  friend bool operator==(const Label& a, const Label& b) {
    return a.ord_ == b.ord_ && a.k_ == b.k_ && a.neg_ == b.neg_;
  }
  friend bool operator!=(const Label& a, const Label& b) { return !(a == b); }
  friend bool operator<(const Label& a, const Label& b) {
    if (a.ord_ != b.ord_) return a.ord_ < b.ord_;
    if (a.k_ != b.k_) return a.k_ < b.k_;
    return a.neg_ < b.neg_;
  }

  // dense integer encoding, stable within one ParamOrder (used by
  // canonical forms and hashing)
  long long encode() const { return ord_.is_generic() ? 2 * k_ + neg_ : k_; }

 private:
  ParamOrder ord_;
  long long k_ = 0;   // finite: residue mod group_order; generic: exponent
  bool neg_ = false;  // generic only; folded into k_ for finite orders
};

inline Label operator/(const Label& a, const Label& b) { return a * b.inverse(); }

}  // namespace gdd

template <>
struct std::hash<gdd::Label> {
  size_t operator()(const gdd::Label& l) const {
    return std::hash<long long>()(l.encode() * 31 + l.order().value());
  }
};
