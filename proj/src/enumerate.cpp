#include <algorithm>
#include <functional>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "gdd/qa.hpp"

namespace gdd {

namespace {

int thread_count(int requested) {
  if (const char* env = std::getenv("GDD_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::vector<Label> label_universe(ParamOrder ord, const EnumUniverse& u,
                                  bool include_one) {
  std::vector<Label> out;
  for (long long e = -u.max_exp; e <= u.max_exp; ++e) {
    out.push_back(Label::make(ord, false, e));
    if (u.allow_sign) out.push_back(Label::make(ord, true, e));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!include_one)
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Label& l) { return l.is_one(); }),
              out.end());
  return out;
}

// connected graphs on `rank` labelled vertices, as sorted edge lists
std::vector<std::vector<Gdd::Edge>> connected_graphs(int rank,
                                                     const EnumOptions& opt) {
  std::vector<Gdd::Edge> all;
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) all.push_back({i, j});
  std::vector<std::vector<Gdd::Edge>> out;
  const unsigned m = static_cast<unsigned>(all.size());
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<Gdd::Edge> es;
    for (unsigned b = 0; b < m; ++b)
      if (mask & (1u << b)) es.push_back(all[b]);
    if (es.size() + 1 < static_cast<size_t>(rank)) continue;
    // connectivity via union-find
    std::vector<int> parent(rank);
    for (int i = 0; i < rank; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& [a, b] : es) parent[find(a)] = find(b);
    bool conn = true;
    for (int i = 1; i < rank && conn; ++i) conn = find(i) == find(0);
    if (!conn) continue;
    if (!opt.shapes.empty()) {
      // shape of the underlying graph, independent of labels
      std::vector<int> deg(rank, 0);
      for (const auto& [a, b] : es) {
        ++deg[a];
        ++deg[b];
      }
      const int maxdeg = *std::max_element(deg.begin(), deg.end());
      ShapeKind kind = ShapeKind::Other;
      if (es.size() == static_cast<size_t>(rank) - 1)
        kind = maxdeg <= 2 ? ShapeKind::Chain : ShapeKind::TreeWithBranch;
      else if (es.size() == static_cast<size_t>(rank) && maxdeg == 2)
        kind = ShapeKind::SimpleCycleCandidate;
      if (std::find(opt.shapes.begin(), opt.shapes.end(), kind) ==
          opt.shapes.end())
        continue;
    }
    out.push_back(std::move(es));
  }
  return out;
}

// thread-safe memo of arithmetic-ness by canonical form
class VerdictCache {
 public:
  // finite-or-not; nullopt when not yet known
  std::optional<bool> lookup(const CanonicalForm& cf) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(cf);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void store(const CanonicalForm& cf, bool finite) {
    std::lock_guard<std::mutex> lock(mu_);
    map_.emplace(cf, finite);
  }

 private:
  mutable std::mutex mu_;
  std::unordered_map<CanonicalForm, bool> map_;
};

}  // namespace

std::map<CanonicalForm, EnumResult> enumerate_quasi_affine(
    int rank, ParamOrder order, const EnumUniverse& universe,
    const EnumOptions& opt, EnumStats* stats_out) {
  if (rank < 2 || rank > 5)
    throw GddError("enumeration is validated for ranks 2..5 only");

  const std::vector<Label> vlabels = label_universe(order, universe, true);
  const std::vector<Label> elabels = label_universe(order, universe, false);
  const auto graphs = connected_graphs(rank, opt);

  // refuse absurd universes up front
  double log_est = 0;
  log_est += rank * std::log10(static_cast<double>(vlabels.size()));
  log_est += (rank * (rank - 1) / 2) * std::log10(static_cast<double>(
                 std::max<size_t>(1, elabels.size())));
  if (log_est > 10.5) {
    std::ostringstream os;
    os << "label universe too large: ~10^" << static_cast<int>(log_est)
       << " assignments over " << graphs.size() << " graphs; shrink max_exp";
    throw GddError(os.str());
  }

  VerdictCache cache;
  EnumStats stats;
  std::mutex result_mu, stats_mu;
  std::map<CanonicalForm, EnumResult> results;

  // pairwise arithmetic-ness is the hot check; memoized on rank-2 keys
  auto pair_arithmetic = [&](const Label& a, const Label& b, const Label& t) {
    const Gdd pair(order, {a, b}, {{{0, 1}, t}});
    const CanonicalForm cf = pair.canonical_form();
    if (const auto hit = cache.lookup(cf)) return *hit;
    const bool fin = arithmetic_verdict(pair, opt.caps).finite();
    cache.store(cf, fin);
    return fin;
  };

  auto sub_arithmetic = [&](const Gdd& sub) {
    // componentwise via the oracle; memoized
    const CanonicalForm cf = sub.canonical_form();
    if (const auto hit = cache.lookup(cf)) return *hit;
    bool fin;
    if (opt.prune && sub.connected() && any_filter_rejects(sub)) {
      fin = false;
      std::lock_guard<std::mutex> lock(stats_mu);
      ++stats.filter_pruned;
    } else {
      {
        std::lock_guard<std::mutex> lock(stats_mu);
        ++stats.oracle_calls;
      }
      fin = arithmetic_verdict(sub, opt.caps).finite();
    }
    cache.store(cf, fin);
    return fin;
  };

  struct Task {
    size_t graph_idx;
    size_t v0_idx;  // first vertex label fixed per task
  };
  std::vector<Task> tasks;
  for (size_t gi = 0; gi < graphs.size(); ++gi)
    for (size_t v0 = 0; v0 < vlabels.size(); ++v0) tasks.push_back({gi, v0});
  std::atomic<size_t> next_task{0};

  auto worker = [&] {
    for (;;) {
      const size_t ti = next_task.fetch_add(1);
      if (ti >= tasks.size()) return;
      const auto& [gi, v0i] = tasks[ti];
      const auto& es = graphs[gi];

      std::vector<Label> diag(rank, Label::one(order));
      std::vector<Label> elab(es.size(), Label::one(order));
      diag[0] = vlabels[v0i];

      EnumStats local;
      // DFS over the remaining vertex labels, then edge labels, pruning
      // on every completed adjacent pair (any pair sits inside a proper
      // deletion once rank >= 3, so it must be arithmetic)
      std::function<void(size_t)> assign_edges = [&](size_t ei) {
        if (ei == es.size()) {
          ++local.assignments;
          std::vector<std::pair<Gdd::Edge, Label>> eset;
          for (size_t k = 0; k < es.size(); ++k) eset.push_back({es[k], elab[k]});
          const Gdd g(order, diag, eset);

          // every one-vertex deletion must be arithmetic
          for (int v = 0; v < rank; ++v) {
            if (!sub_arithmetic(g.delete_vertex(v))) return;
          }
          // and the whole GDD must not be
          bool whole_finite = false;
          bool certified_infinite = false;
          if (opt.prune && rank >= 5) {
            for (const FilterVerdict& fv : filter_bank(g)) {
              if (fv.lemma == FilterId::L2_90 && fv.rejects()) {
                certified_infinite = true;
                ++local.filter_pruned;
                break;
              }
            }
          }
          if (!certified_infinite) {
            const CanonicalForm cf = g.canonical_form();
            if (const auto hit = cache.lookup(cf)) {
              whole_finite = *hit;
            } else {
              ++local.oracle_calls;
              whole_finite = arithmetic_verdict(g, opt.caps).finite();
              cache.store(cf, whole_finite);
            }
          }
          if (whole_finite) return;

          QaVerdict qa = is_quasi_affine(g, opt.caps);
          if (!qa.is_quasi_affine) return;
          ++local.emitted;
          auto [cf, perm] = g.canonical_form_with_perm();
          EnumResult res{g.permuted(perm), std::move(qa)};
          std::lock_guard<std::mutex> lock(result_mu);
          results.emplace(std::move(cf), std::move(res));
          return;
        }
        const auto& [a, b] = es[ei];
        for (const Label& l : elabels) {
          elab[ei] = l;
          if (rank >= 3 && !pair_arithmetic(diag[a], diag[b], l)) {
            ++local.pair_pruned;
            continue;
          }
          assign_edges(ei + 1);
        }
      };
      std::function<void(int)> assign_diag = [&](int v) {
        if (v == rank) {
          assign_edges(0);
          return;
        }
        for (const Label& l : vlabels) {
          diag[v] = l;
          assign_diag(v + 1);
        }
      };
      assign_diag(1);

      std::lock_guard<std::mutex> lock(stats_mu);
      stats.assignments += local.assignments;
      stats.pair_pruned += local.pair_pruned;
      stats.filter_pruned += local.filter_pruned;
      stats.oracle_calls += local.oracle_calls;
      stats.emitted += local.emitted;
    }
  };

  const int nthreads = thread_count(opt.threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  if (stats_out) *stats_out = stats;
  return results;
}

}  // namespace gdd
