#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gdd/cartan.hpp"
#include "gdd/filters.hpp"
#include "gdd/weyl.hpp"

namespace gdd {

struct QaVerdict {
  bool is_quasi_affine = false;
  WeylVerdict whole;
  std::vector<WeylVerdict> deletions;      // per deleted vertex
  std::optional<PropA51> cartan_shortcut;  // when the GDD is of Cartan type
  bool cartan_agrees = true;
  std::vector<std::string> warnings;       // CapExceeded involvements

  std::string str() const;
};

QaVerdict is_quasi_affine(const Gdd& g, const Caps& caps = {});

struct EnumUniverse {
  long long max_exp = 6;     // exponent range for labels
  bool allow_sign = true;    // include -q^e labels
};

struct EnumResult {
  Gdd rep;  // canonical representative
  QaVerdict verdict;
};

struct EnumStats {
  long long assignments = 0;     // fully labelled candidates examined
  long long pair_pruned = 0;     // cut by a non-arithmetic rank-2 subpair
  long long filter_pruned = 0;   // cut by the lemma filter bank
  long long oracle_calls = 0;
  long long emitted = 0;
};

struct EnumOptions {
  Caps caps;
  bool prune = true;
  int threads = 0;  // 0 = hardware/GDD_THREADS
  // verify result-only diffs at doubled caps before reporting
  std::vector<ShapeKind> shapes;  // empty = all connected shapes
};

// Exhaustive scan over connected labelled graphs of the given rank,
// deduplicated by canonical form.  Throws when the universe is too large
// (the estimate is in the message).
std::map<CanonicalForm, EnumResult> enumerate_quasi_affine(
    int rank, ParamOrder order, const EnumUniverse& universe,
    const EnumOptions& opt = {}, EnumStats* stats = nullptr);

struct CatalogEntry {
  std::string tag;
  Gdd pattern;                 // symbolic: labels in terms of q at this order
  std::string constraint;      // verbatim note
  std::string source;          // provenance section
};

struct DiffReport {
  struct Item {
    std::string tag;
    std::string note;
  };
  std::vector<Item> matched;
  std::vector<Item> paper_only;   // catalog entries missing from results
  std::vector<Item> result_only;  // results not in the catalog
  std::vector<Item> skipped;      // uninstantiable at this order

  bool clean() const { return paper_only.empty(); }
  std::string str() const;
};

DiffReport match_catalog(const std::map<CanonicalForm, EnumResult>& results,
                         const std::vector<CatalogEntry>& catalog);

}  // namespace gdd
