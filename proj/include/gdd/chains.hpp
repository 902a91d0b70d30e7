#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gdd/gdd.hpp"
#include "gdd/weyl.hpp"

namespace gdd {

// Verdict of the chain/classical taxonomy, with the vertex witnesses that
// decided it.
struct ChainClass {
  enum class Kind {
    SimpleChain,
    Classical,
    SemiClassical,
    QuasiClassical,
    NotClassified,
    NotApplicable,
  };
  Kind kind = Kind::NotClassified;
  int classical_type = 0;          // 1..7 when Classical
  std::string params;              // matched template, printable
  int root = -1;                   // distinguished root vertex when known
  std::vector<int> witnesses;      // vertices where a condition failed/held

  bool is(Kind k) const { return kind == k; }
};

// per-vertex simple-chain condition along a chain walk: ends must satisfy
// (q_e qt_e - 1)(q_e + 1) = 0, interiors ppe2 or ppe3
bool simple_chain_condition_at(const Gdd& g, const std::vector<int>& walk,
                               int pos);

// vertices of the walk where the simple chain conditions fail
std::vector<int> simple_chain_failures(const Gdd& g);

ChainClass is_simple_chain(const Gdd& g);

// C_{n,q,marks}: the marked simple-chain family; marks are 1-based
// positions i with qt_{i,i-1} = q (position 1 via qt_{1,0} := 1/(q_11^2
// qt_12)).
Gdd make_simple_chain(int n, const Label& q, const std::set<int>& marks);

// All classical templates of one rank at one order, keyed by canonical
// form; built lazily and cached.  Generic orders bound the parameter
// exponent by the largest exponent in the query.
class ClassicalCatalog {
 public:
  // classify up to relabeling; Kind::Classical or NotClassified
  ChainClass classify(const Gdd& g) const;
  bool is_classical(const Gdd& g) const {
    return classify(g).kind == ChainClass::Kind::Classical;
  }

  // every distinct classical instance of the given rank/order (finite
  // orders only), with its (type, params) description
  const std::map<CanonicalForm, std::pair<int, std::string>>& table(
      int rank, ParamOrder ord, long long max_exp) const;

 private:
  mutable std::map<std::tuple<int, int, long long>,
                   std::map<CanonicalForm, std::pair<int, std::string>>>
      cache_;
};

// process-wide catalog (pure data, safe to share)
const ClassicalCatalog& classical_catalog();

bool is_classical(const Gdd& g);

// Semi-/quasi-classical per the chain and non-chain definitions; the
// arithmetic-ness premise is NOT checked here (callers combine with the
// oracle when they need it).
ChainClass is_semi_classical(const Gdd& g);
ChainClass is_quasi_classical(const Gdd& g);

enum class HeadKind { T5, T6 };

struct ContinueResult {
  bool continues = false;  // extension arithmetic
  Gdd extension;
  WeylVerdict verdict;
};

// Attach a one-vertex head at v: T5 adds a vertex p with edge p^{-1},
// T6 adds -1 with edge p, where p = q_vv^2 * qt_{v,w} at a degree-one
// vertex (p = q_vv for an isolated one).  Continues iff the extension is
// arithmetic per the supplied oracle.
ContinueResult continue_on(
    const Gdd& g, int v, HeadKind head,
    const std::function<WeylVerdict(const Gdd&)>& oracle);

}  // namespace gdd
