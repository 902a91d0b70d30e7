#include "gdd/qa.hpp"

#include <sstream>

namespace gdd {

std::string QaVerdict::str() const {
  std::ostringstream os;
  os << (is_quasi_affine ? "quasi-affine" : "not quasi-affine");
  os << "; whole " << whole.str();
  os << "; deletions:";
  for (size_t i = 0; i < deletions.size(); ++i)
    os << " [" << i + 1 << "] " << deletions[i].str();
  if (cartan_shortcut)
    os << "; exponential-matrix route: " << prop_a51_name(*cartan_shortcut)
       << (cartan_agrees ? "" : " (DISAGREES)");
  for (const auto& w : warnings) os << "; warning: " << w;
  return os.str();
}

QaVerdict is_quasi_affine(const Gdd& g, const Caps& caps) {
  if (!g.connected()) throw GddError("quasi-affine is defined for connected GDDs");
  if (g.rank() < 2) throw GddError("quasi-affine needs rank >= 2");
  QaVerdict out;
  out.whole = arithmetic_verdict(g, caps);
  if (out.whole.capped())
    out.warnings.push_back("whole-GDD verdict hit a cap (" + out.whole.detail +
                           "); treating as non-arithmetic");
  bool all_deletions_finite = true;
  for (int i = 0; i < g.rank(); ++i) {
    out.deletions.push_back(arithmetic_verdict(g.delete_vertex(i), caps));
    const WeylVerdict& d = out.deletions.back();
    if (!d.finite()) all_deletions_finite = false;
    if (d.capped()) {
      std::ostringstream os;
      os << "deletion of vertex " << i + 1 << " hit a cap (" << d.detail << ")";
      out.warnings.push_back(os.str());
    }
  }
  out.is_quasi_affine = !out.whole.finite() && all_deletions_finite;

  if (const auto a = cartan_type(g)) {
    const PropA51 p = prop_a51(g);
    out.cartan_shortcut = p;
    const bool oracle_qa = out.is_quasi_affine;
    const bool route_qa = p == PropA51::QuasiAffine;
    out.cartan_agrees = oracle_qa == route_qa;
    if (!out.cartan_agrees)
      out.warnings.push_back(
          "exponential-matrix classification disagrees with the reflection "
          "oracle");
  }
  return out;
}

std::string DiffReport::str() const {
  std::ostringstream os;
  os << "matched " << matched.size() << ", catalog-only " << paper_only.size()
     << ", result-only " << result_only.size() << ", skipped " << skipped.size();
  for (const auto& it : paper_only)
    os << "\n  catalog-only: " << it.tag << " " << it.note;
  for (const auto& it : result_only)
    os << "\n  result-only: " << it.tag << " " << it.note;
  for (const auto& it : skipped)
    os << "\n  skipped: " << it.tag << " " << it.note;
  return os.str();
}

DiffReport match_catalog(const std::map<CanonicalForm, EnumResult>& results,
                         const std::vector<CatalogEntry>& catalog) {
  DiffReport rep;
  std::optional<ParamOrder> res_order;
  if (!results.empty()) res_order = results.begin()->second.rep.order();
  std::map<CanonicalForm, bool> covered;
  for (const auto& [cf, r] : results) covered[cf] = false;
  for (const CatalogEntry& e : catalog) {
    if (res_order && !(e.pattern.order() == *res_order)) {
      rep.skipped.push_back(
          {e.tag, e.constraint.empty() ? "order differs" : e.constraint});
      continue;
    }
    const CanonicalForm cf = e.pattern.canonical_form();
    auto it = covered.find(cf);
    if (it != covered.end()) {
      it->second = true;
      rep.matched.push_back({e.tag, ""});
    } else {
      rep.paper_only.push_back({e.tag, e.pattern.str()});
    }
  }
  for (const auto& [cf, r] : results) {
    if (!covered[cf])
      rep.result_only.push_back({cf.str(), r.rep.str()});
  }
  return rep;
}

}  // namespace gdd
