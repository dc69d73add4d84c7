#include "cml/finite_embed.hpp"

#include <algorithm>
#include <cmath>

#include "cml/errors.hpp"
#include "cml/evaluation.hpp"
#include "cml/graph.hpp"

namespace cml {

namespace {

struct NeighborPair {
  int other;
  PairKind kind;
};

// Depth-first enumeration of count tables in lexicographic cell order with
// incremental violation counting and an incumbent bound.
struct Enumerator {
  int nc = 0, np = 0;
  double c2eff = 1.0;
  std::uint64_t budget = 0;

  std::vector<std::vector<int>> parts;            // sorted member lists
  std::vector<std::vector<NeighborPair>> pairs_of;
  std::vector<std::vector<std::uint8_t>> sim_ok;  // host point pair satisfiable
  std::vector<std::vector<std::uint8_t>> dis_ok;

  std::size_t total_pairs = 0;
  std::vector<int> point_of;       // -1 = unplaced
  std::size_t violated = 0;

  std::vector<int> best_point_of;
  std::size_t best_satisfied = 0;  // strict improvements only
  bool have_best = false;
  std::uint64_t candidates = 0;
  std::uint64_t steps = 0;         // interior search nodes visited
  std::uint64_t step_cap = 0;
  bool exhausted = false;

  // Violations added by placing `x` at `p` against already placed objects.
  std::size_t place(int x, int p) {
    std::size_t bad = 0;
    for (const auto& nb : pairs_of[static_cast<std::size_t>(x)]) {
      int q = point_of[static_cast<std::size_t>(nb.other)];
      if (q < 0) continue;
      const auto& ok = nb.kind == PairKind::Similar ? sim_ok : dis_ok;
      if (!ok[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]) ++bad;
    }
    point_of[static_cast<std::size_t>(x)] = p;
    violated += bad;
    return bad;
  }

  void unplace(int x, std::size_t bad) {
    point_of[static_cast<std::size_t>(x)] = -1;
    violated -= bad;
  }

  bool can_beat_best() const { return total_pairs - violated > best_satisfied; }

  // Scores the complete assignment currently in point_of (all parts fixed,
  // leftovers placed); one budget unit.
  void score_leaf() {
    ++candidates;
    std::size_t satisfied = total_pairs - violated;
    if (!have_best || satisfied > best_satisfied) {
      best_satisfied = satisfied;
      best_point_of = point_of;
      have_best = true;
    }
    if (candidates >= budget) exhausted = true;
  }

  // Greedy placement of one object: the point adding the fewest violations.
  std::size_t place_greedy(int x) {
    int arg = 0;
    std::size_t best_bad = SIZE_MAX;
    for (int p = 0; p < np; ++p) {
      std::size_t bad = 0;
      for (const auto& nb : pairs_of[static_cast<std::size_t>(x)]) {
        int q = point_of[static_cast<std::size_t>(nb.other)];
        if (q < 0) continue;
        const auto& ok = nb.kind == PairKind::Similar ? sim_ok : dis_ok;
        if (!ok[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]) ++bad;
      }
      if (bad < best_bad) {
        best_bad = bad;
        arg = p;
      }
    }
    return place(x, arg);
  }

  // Places every leftover member greedily, scores, and restores the state.
  void finish_with_leftovers(const std::vector<int>& leftovers) {
    std::size_t mark = undo_stack.size();
    for (int x : leftovers) undo_stack.emplace_back(x, place_greedy(x));
    score_leaf();
    while (undo_stack.size() > mark) {
      unplace(undo_stack.back().first, undo_stack.back().second);
      undo_stack.pop_back();
    }
  }

  std::vector<int> leftovers_stack;  // members deferred to greedy placement
  std::vector<std::pair<int, std::size_t>> undo_stack;

  void dfs_part(std::size_t part_idx) {
    if (exhausted) return;
    if (part_idx == parts.size()) {
      finish_with_leftovers(leftovers_stack);
      return;
    }
    dfs_cell(part_idx, 0, 0, 0.0);
  }

  // Chooses the multiplier t for cell (part, point); `offset` members of the
  // part are already placed and `used` = sum of t * c2eff so far.
  void dfs_cell(std::size_t part_idx, int point, int offset, double used) {
    if (exhausted) return;
    // Pruned branches never score a leaf, so the candidate budget alone does
    // not bound the search; the step cap keeps total work proportional to it.
    if (++steps > step_cap) {
      exhausted = true;
      return;
    }
    const std::vector<int>& members = parts[part_idx];
    int s = static_cast<int>(members.size());

    // Once every member is placed the remaining cells of this part are all
    // zero, so jump straight to the next part.
    if (point == np || offset == s) {
      std::size_t mark = leftovers_stack.size();
      for (int i = offset; i < s; ++i) leftovers_stack.push_back(members[static_cast<std::size_t>(i)]);
      dfs_part(part_idx + 1);
      leftovers_stack.resize(mark);
      return;
    }

    double cap = static_cast<double>(s) - used;
    long long t_max = static_cast<long long>(std::floor(cap / c2eff + 1e-12));
    // With integer granularity the last cell must absorb the remaining
    // members exactly; coarser granularities leave a sub-c2 remainder to the
    // greedy leftover pass.
    long long t_min = 0;
    if (point == np - 1 && c2eff == 1.0) t_min = t_max;

    for (long long t = t_min; t <= t_max && !exhausted; ++t) {
      int m = static_cast<int>(std::floor(static_cast<double>(t) * c2eff + 1e-12));
      if (offset + m > s) break;
      std::size_t mark = undo_stack.size();
      bool viable = true;
      for (int i = 0; i < m; ++i) {
        int x = members[static_cast<std::size_t>(offset + i)];
        undo_stack.emplace_back(x, place(x, point));
        if (!can_beat_best()) {
          viable = false;
          break;
        }
      }
      if (viable)
        dfs_cell(part_idx, point + 1, offset + m, used + static_cast<double>(t) * c2eff);
      while (undo_stack.size() > mark) {
        unplace(undo_stack.back().first, undo_stack.back().second);
        undo_stack.pop_back();
      }
      // A larger t repeats the same placement prefix, so once the prefix
      // fails the bound every later value fails it too.
      if (!viable) break;
    }
  }
};

}  // namespace

FiniteEmbedResult embed_into_finite_metric(const PairSystem& sub,
                                           const FiniteMetric& host, double epsilon,
                                           double eps_prime,
                                           std::uint64_t enum_budget,
                                           const FiniteEmbedOptions& opt) {
  if (!(epsilon > 0.0)) throw InvalidParameter("epsilon must be positive");
  if (!(eps_prime >= 0.0)) throw InvalidParameter("eps_prime must be >= 0");
  if (enum_budget < 1) throw InvalidParameter("enumeration budget must be >= 1");

  FiniteEmbedResult res;
  int nc = static_cast<int>(sub.n());
  int np = static_cast<int>(host.size());
  if (nc == 0) return res;
  if (np == 0) throw InvalidParameter("host metric has no points");

  double npd = static_cast<double>(np);
  res.c1 = epsilon / (8.0 * npd * npd);

  // Pseudoregular partitions of the similarity and dissimilarity graphs.
  SimpleGraph gs = SimpleGraph::from_edges(nc, sub.similar);
  SimpleGraph gd = SimpleGraph::from_edges(nc, sub.dissimilar);
  PseudoregularOptions popt = opt.partition;
  PseudoregularPartition ps =
      pseudoregular_partition(gs, res.c1, opt.partition_delta, opt.partition_seed, popt);
  PseudoregularPartition pd = pseudoregular_partition(gd, res.c1, opt.partition_delta,
                                                      opt.partition_seed ^ 1, popt);
  std::vector<std::vector<int>> refinement = refine_partitions(ps.parts, pd.parts);
  res.refinement_parts = refinement.size();

  double k = static_cast<double>(std::max(ps.parts.size(), pd.parts.size()));
  res.c2 = epsilon * static_cast<double>(nc) / (8.0 * npd * npd * k * k * k * k);
  double c2eff = std::max(1.0, res.c2);

  double c = 1.0 + eps_prime;
  Enumerator en;
  en.nc = nc;
  en.np = np;
  en.c2eff = c2eff;
  en.budget = enum_budget;
  en.step_cap = enum_budget > (UINT64_MAX - 4096) / 64
                    ? UINT64_MAX
                    : 64 * enum_budget + 4096;
  en.parts = std::move(refinement);
  en.total_pairs = sub.similar.size() + sub.dissimilar.size();
  en.point_of.assign(static_cast<std::size_t>(nc), -1);

  en.pairs_of.assign(static_cast<std::size_t>(nc), {});
  for (const auto& [i, j] : sub.similar) {
    en.pairs_of[static_cast<std::size_t>(i)].push_back({j, PairKind::Similar});
    en.pairs_of[static_cast<std::size_t>(j)].push_back({i, PairKind::Similar});
  }
  for (const auto& [i, j] : sub.dissimilar) {
    en.pairs_of[static_cast<std::size_t>(i)].push_back({j, PairKind::Dissimilar});
    en.pairs_of[static_cast<std::size_t>(j)].push_back({i, PairKind::Dissimilar});
  }

  en.sim_ok.assign(static_cast<std::size_t>(np),
                   std::vector<std::uint8_t>(static_cast<std::size_t>(np), 0));
  en.dis_ok = en.sim_ok;
  for (int p = 0; p < np; ++p) {
    for (int q = 0; q < np; ++q) {
      double d = host.dist[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      en.sim_ok[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
          satisfies(PairKind::Similar, d, sub.u, sub.l, c) ? 1 : 0;
      en.dis_ok[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
          satisfies(PairKind::Dissimilar, d, sub.u, sub.l, c) ? 1 : 0;
    }
  }

  // First candidate: one greedy construction pass in ascending object order.
  {
    std::vector<std::pair<int, std::size_t>> undo;
    for (int x = 0; x < nc; ++x) undo.emplace_back(x, en.place_greedy(x));
    en.score_leaf();
    for (auto it = undo.rbegin(); it != undo.rend(); ++it)
      en.unplace(it->first, it->second);
  }

  // Lexicographic enumeration for the remaining budget.
  if (!en.exhausted) en.dfs_part(0);

  res.point_of = en.best_point_of;
  res.accuracy = en.total_pairs == 0
                     ? 1.0
                     : static_cast<double>(en.best_satisfied) /
                           static_cast<double>(en.total_pairs);
  res.budget_exhausted = en.exhausted;
  res.candidates = en.candidates;

  // Summarize the winning assignment as a count table on the c2eff grid.
  res.table.granularity = c2eff;
  res.table.entries.assign(en.parts.size(),
                           std::vector<long long>(static_cast<std::size_t>(np), 0));
  for (std::size_t pi = 0; pi < en.parts.size(); ++pi) {
    std::vector<long long> count(static_cast<std::size_t>(np), 0);
    for (int x : en.parts[pi]) ++count[static_cast<std::size_t>(res.point_of[static_cast<std::size_t>(x)])];
    for (int p = 0; p < np; ++p)
      res.table.entries[pi][static_cast<std::size_t>(p)] = static_cast<long long>(
          std::floor(static_cast<double>(count[static_cast<std::size_t>(p)]) / c2eff + 1e-12));
  }
  return res;
}

}  // namespace cml
