#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gdd/cartan.hpp"
#include "gdd/gdd.hpp"

namespace gdd {

struct Caps {
  int max_objects = 20000;
  long long max_roots = 20000;
  int max_height = 64;
  int m_cap = 64;
  // certify infiniteness as soon as a reached object has a Cartan-type
  // subdiagram with non-finite exponential matrix
  bool cartan_shortcut = true;

  Caps doubled() const {
    Caps c = *this;
    c.max_objects *= 2;
    c.max_roots *= 2;
    c.max_height *= 2;
    c.m_cap *= 2;
    return c;
  }
};

// Cartan entries at one vertex: c_ij = -min{ m >= 0 : (m+1)-number of
// q_ii vanishes or q_ii^m qtilde_ij = 1 }, c_ii = 2.
struct CartanRow {
  std::vector<int> c;
  std::optional<int> undefined_j;  // first j admitting no such m
  bool defined() const { return !undefined_j.has_value(); }
};

CartanRow cartan_row(const Gdd& g, int i, int m_cap = 64);

// Weyl-groupoid reflection of the GDD data at vertex i; nullopt when the
// Cartan row is undefined there.
std::optional<Gdd> reflect(const Gdd& g, int i, int m_cap = 64);

enum class WeylOutcome { Finite, InfiniteCertified, CapExceeded };
enum class InfReason { None, UndefinedReflection, AffineCartanSubcase };

struct WeylVerdict {
  WeylOutcome outcome = WeylOutcome::CapExceeded;
  InfReason reason = InfReason::None;
  long long root_count = 0;    // positive roots at the base object
  long long object_count = 0;  // distinct objects explored
  std::string detail;          // which cap tripped / where certified
  Caps caps_used;

  bool finite() const { return outcome == WeylOutcome::Finite; }
  // non-arithmetic as used downstream; CapExceeded counts as
  // non-arithmetic but callers must surface the warning
  bool capped() const { return outcome == WeylOutcome::CapExceeded; }
  std::string str() const;
};

// Bounded exploration of the Weyl groupoid with positive-root transport.
// Disconnected input is judged componentwise: finite iff every component
// is, with root and object counts summed.
WeylVerdict arithmetic_verdict(const Gdd& g, const Caps& caps = {});

}  // namespace gdd
