#pragma once

#include <string>
#include <vector>

#include "gdd/chains.hpp"
#include "gdd/gdd.hpp"

namespace gdd {

enum class FilterId {
  L2_20,
  L2_56,
  L2_59,
  L2_60,
  L2_61,
  L2_77,
  L2_78,
  L2_79,
  L2_80,
  L2_81,
  L2_82,
  L2_90,
};

const char* filter_name(FilterId id);

struct FilterVerdict {
  FilterId lemma;
  enum class Outcome { RejectsNonArithmetic, ExceptionMatched, NotApplicable };
  Outcome outcome = Outcome::NotApplicable;
  std::string exception;  // printed tag when an exception matched

  bool rejects() const { return outcome == Outcome::RejectsNonArithmetic; }
};

// A printed exception diagram: labels are sign * q^exp over a constrained
// parameter.
struct PatternLabel {
  int sign;
  long long exp;
};

struct PatternConstraint {
  int order = 0;           // exact multiplicative order of q; 0 = unconstrained
  std::vector<int> neq;    // exponents k with q^k != 1
  std::vector<int> avoid;  // multiplicative orders q must not have

  bool admits(const Label& u) const;
};

struct ExceptionPattern {
  const char* tag;
  int rank;
  std::vector<PatternLabel> diag;
  struct PatternEdge {
    int i, j;
    PatternLabel l;
  };
  std::vector<PatternEdge> edges;
  PatternConstraint constraint;

  // instantiate at a concrete parameter value
  Gdd instantiate(const Label& u) const;
  // does g match this pattern, up to relabeling, for some admissible u
  bool matches(const Gdd& g) const;
};

// ambiguous and/or grouping in one lemma hypothesis; the default reading
// is the one consistent with that lemma's printed exceptions
enum class L278Reading { ConjunctionFirst, DisjunctionFirst };

struct FilterOptions {
  L278Reading l278 = L278Reading::ConjunctionFirst;
};

// All exception tables, exposed for fixture generation and tests.
const std::vector<ExceptionPattern>& exceptions_of(FilterId id);

// Run every structural non-arithmetic filter whose hypothesis applies.
std::vector<FilterVerdict> filter_bank(const Gdd& g, const FilterOptions& opt = {});

// true when some filter certifies non-arithmeticity
bool any_filter_rejects(const Gdd& g, const FilterOptions& opt = {});

}  // namespace gdd
