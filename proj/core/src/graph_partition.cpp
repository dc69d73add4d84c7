#include "cml/graph_partition.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <set>

#include "cml/errors.hpp"

namespace cml {
namespace {

// Induced subgraph on sorted `members`, vertices relabelled by position.
SimpleGraph induced(const SimpleGraph& g, const std::vector<int>& members) {
  std::map<int, int> local;
  for (std::size_t i = 0; i < members.size(); ++i)
    local[members[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : g.edges) {
    auto a = local.find(e.first);
    auto b = local.find(e.second);
    if (a != local.end() && b != local.end()) edges.emplace_back(a->second, b->second);
  }
  return SimpleGraph::from_edges(static_cast<int>(members.size()), edges);
}

// Smaller side first; ties prefer the lexicographically smaller vertex list.
std::vector<int> canonical_side(std::vector<int> side, int n) {
  std::sort(side.begin(), side.end());
  std::vector<int> other;
  other.reserve(static_cast<std::size_t>(n) - side.size());
  std::size_t at = 0;
  for (int v = 0; v < n; ++v) {
    if (at < side.size() && side[at] == v) { ++at; continue; }
    other.push_back(v);
  }
  if (other.size() < side.size() || (other.size() == side.size() && other < side))
    return other;
  return side;
}

bool better_cut(double sp, const std::vector<int>& side, const Cut& best) {
  if (sp < best.sparsity - 1e-15) return true;
  if (sp > best.sparsity + 1e-15) return false;
  if (side.size() != best.side.size()) return side.size() < best.side.size();
  return side < best.side;
}

Cut exact_sparsest_cut(const SimpleGraph& g) {
  const int n = g.n;
  Cut best;
  best.sparsity = std::numeric_limits<double>::infinity();
  // Vertex n-1 stays outside U, which still covers every cut up to swapping
  // sides.
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    std::size_t crossing = 0;
    for (const auto& e : g.edges) {
      bool a = (mask >> e.first) & 1u;
      bool b = (mask >> e.second) & 1u;
      if (a != b) ++crossing;
    }
    std::vector<int> side;
    for (int v = 0; v < n - 1; ++v)
      if ((mask >> v) & 1u) side.push_back(v);
    double k = static_cast<double>(side.size());
    double sp = static_cast<double>(crossing) / (k * (static_cast<double>(n) - k));
    std::vector<int> canon = canonical_side(std::move(side), n);
    if (better_cut(sp, canon, best)) {
      best.sparsity = sp;
      best.side = std::move(canon);
      best.crossing_edges = crossing;
    }
  }
  return best;
}

Cut sweep_sparsest_cut(const SimpleGraph& g) {
  const int n = g.n;
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  std::vector<double> deg(static_cast<std::size_t>(n), 0.0);
  for (const auto& e : g.edges) {
    deg[static_cast<std::size_t>(e.first)] += 1.0;
    deg[static_cast<std::size_t>(e.second)] += 1.0;
  }
  for (int v = 0; v < n; ++v) lap(v, v) = 1.0;
  for (const auto& e : g.edges) {
    double w = 1.0 / std::sqrt(deg[static_cast<std::size_t>(e.first)] *
                               deg[static_cast<std::size_t>(e.second)]);
    lap(e.first, e.second) -= w;
    lap(e.second, e.first) -= w;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
  Eigen::VectorXd fiedler = solver.eigenvectors().col(n >= 2 ? 1 : 0);

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (fiedler(a) != fiedler(b)) return fiedler(a) < fiedler(b);
    return a < b;
  });

  Cut best;
  best.sparsity = std::numeric_limits<double>::infinity();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  std::size_t crossing = 0;
  std::vector<int> prefix;
  for (int k = 0; k < n - 1; ++k) {
    int v = order[static_cast<std::size_t>(k)];
    for (int w : g.adj[static_cast<std::size_t>(v)]) {
      if (in[static_cast<std::size_t>(w)]) --crossing;
      else ++crossing;
    }
    in[static_cast<std::size_t>(v)] = 1;
    prefix.push_back(v);
    double kk = static_cast<double>(k + 1);
    double sp = static_cast<double>(crossing) / (kk * (static_cast<double>(n) - kk));
    std::vector<int> canon = canonical_side(prefix, n);
    if (better_cut(sp, canon, best)) {
      best.sparsity = sp;
      best.side = std::move(canon);
      best.crossing_edges = crossing;
    }
  }
  return best;
}

}  // namespace

Cut sparsest_cut(const SimpleGraph& g, const SparsestCutOptions& opt) {
  if (g.n < 2) throw EmptyGraph("sparsest cut needs at least two vertices");
  if (g.n <= opt.exact_threshold) return exact_sparsest_cut(g);
  return sweep_sparsest_cut(g);
}

double well_linked_chi(double alpha, std::size_t n, double constant_c) {
  double lg = std::max(std::log(static_cast<double>(std::max<std::size_t>(n, 1))), 1.0);
  double llg = std::max(std::log(lg), 1.0);
  return alpha / (constant_c * std::pow(lg, 1.5) * llg);
}

double noise_alpha(double zeta, std::size_t n) {
  if (zeta < 0.0) throw InvalidParameter("noise rate must be >= 0");
  double lg = std::max(std::log(static_cast<double>(std::max<std::size_t>(n, 1))), 1.0);
  double llg = std::max(std::log(lg), 1.0);
  return std::sqrt(zeta) * std::pow(lg, 0.75) * std::sqrt(llg);
}

WellLinkedDecomposition well_linked_decomposition(const Instance& inst, double alpha,
                                                  const WellLinkedOptions& opt) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha))
    throw InvalidParameter("well-linked decomposition needs finite alpha >= 0");
  validate_instance(inst);
  const auto& ids = inst.sorted_ids();
  ConstraintGraphS g = ConstraintGraphS::build(inst);

  WellLinkedDecomposition out;
  out.alpha = alpha;
  out.chi = well_linked_chi(alpha, ids.size(), opt.constant_c);
  out.edge_budget =
      alpha * static_cast<double>(inst.similar.size() + inst.dissimilar.size());

  std::deque<std::vector<int>> queue;
  for (auto& comp : g.graph.components()) queue.push_back(std::move(comp));

  std::vector<std::pair<std::vector<int>, double>> done;
  std::size_t removed = 0;
  std::set<std::pair<int, int>> removed_set;
  while (!queue.empty()) {
    std::vector<int> comp = std::move(queue.front());
    queue.pop_front();
    if (comp.size() < 2) {
      done.emplace_back(std::move(comp), std::numeric_limits<double>::infinity());
      continue;
    }
    SimpleGraph sub = induced(g.graph, comp);
    Cut cut = sparsest_cut(sub, opt.cut);
    if (cut.sparsity > out.chi * opt.slack) {
      done.emplace_back(std::move(comp), cut.sparsity);
      continue;
    }
    if (static_cast<double>(removed + cut.crossing_edges) > out.edge_budget) {
      out.budget_hit = true;
      done.emplace_back(std::move(comp), cut.sparsity);
      continue;
    }
    std::vector<char> in_side(comp.size(), 0);
    for (int v : cut.side) in_side[static_cast<std::size_t>(v)] = 1;
    for (const auto& e : sub.edges) {
      if (in_side[static_cast<std::size_t>(e.first)] ==
          in_side[static_cast<std::size_t>(e.second)])
        continue;
      int a = comp[static_cast<std::size_t>(e.first)];
      int b = comp[static_cast<std::size_t>(e.second)];
      removed_set.insert({std::min(a, b), std::max(a, b)});
      ++removed;
    }
    std::vector<int> side_g, rest_g;
    for (std::size_t i = 0; i < comp.size(); ++i)
      (in_side[i] ? side_g : rest_g).push_back(comp[i]);
    queue.push_back(std::move(side_g));
    queue.push_back(std::move(rest_g));
  }

  std::sort(done.begin(), done.end(),
            [](const auto& a, const auto& b) { return a.first.front() < b.first.front(); });
  for (auto& [comp, expansion] : done) {
    std::vector<std::string> names;
    names.reserve(comp.size());
    for (int v : comp) names.push_back(ids[static_cast<std::size_t>(v)]);
    out.components.push_back(std::move(names));
    out.achieved_expansion.push_back(expansion);
  }
  for (const auto& e : removed_set)
    out.removed_edges.push_back(make_pair_sorted(ids[static_cast<std::size_t>(e.first)],
                                                 ids[static_cast<std::size_t>(e.second)]));
  std::sort(out.removed_edges.begin(), out.removed_edges.end());
  return out;
}

std::vector<std::string> extract_core(const Instance& inst,
                                      const std::vector<std::string>& component,
                                      const std::vector<IdPair>& suspect_edges,
                                      double alpha_prime, const CoreOptions& opt) {
  if (!(alpha_prime >= 0.0) || !std::isfinite(alpha_prime))
    throw InvalidParameter("extract_core needs finite alpha_prime >= 0");
  if (component.empty()) return {};
  const auto& ids = inst.sorted_ids();
  ConstraintGraphS g = ConstraintGraphS::build(inst);

  std::vector<int> comp;
  comp.reserve(component.size());
  for (const auto& id : component) comp.push_back(static_cast<int>(inst.index_of_checked(id)));
  std::sort(comp.begin(), comp.end());
  if (std::adjacent_find(comp.begin(), comp.end()) != comp.end())
    throw InvalidParameter("extract_core: duplicate id in component");

  std::set<std::pair<int, int>> suspects;
  for (const auto& p : suspect_edges) {
    int a = static_cast<int>(inst.index_of_checked(p.first));
    int b = static_cast<int>(inst.index_of_checked(p.second));
    suspects.insert({std::min(a, b), std::max(a, b)});
  }

  // Survivor graph: the component's similarity edges minus suspects.
  std::map<int, int> local;
  for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> kept;
  for (const auto& e : g.graph.edges) {
    auto a = local.find(e.first);
    auto b = local.find(e.second);
    if (a == local.end() || b == local.end()) continue;
    if (suspects.count({std::min(e.first, e.second), std::max(e.first, e.second)})) continue;
    kept.emplace_back(a->second, b->second);
  }
  SimpleGraph survivor =
      SimpleGraph::from_edges(static_cast<int>(comp.size()), kept);
  std::vector<int> core_local;
  for (const auto& piece : survivor.components())
    if (piece.size() > core_local.size()) core_local = piece;

  std::vector<int> core;
  for (int v : core_local) core.push_back(comp[static_cast<std::size_t>(v)]);
  std::sort(core.begin(), core.end());

  // Peel off shallow cuts until the similarity expansion holds everywhere
  // (up to what the cut finder sees).
  const double need = opt.constant_c * alpha_prime;
  while (core.size() >= 2) {
    SimpleGraph sub = induced(g.graph, core);
    Cut cut = sparsest_cut(sub, opt.cut);
    if (cut.sparsity >= need) break;
    std::vector<char> drop(core.size(), 0);
    for (int v : cut.side) drop[static_cast<std::size_t>(v)] = 1;
    std::vector<int> next;
    for (std::size_t i = 0; i < core.size(); ++i)
      if (!drop[i]) next.push_back(core[i]);
    core = std::move(next);
  }

  // The expansion pass cannot promise the core avoids suspect edges, so
  // enforce that directly: drop the endpoint with the weaker similarity
  // degree inside the core until no suspect edge survives.
  while (true) {
    std::set<int> in_core(core.begin(), core.end());
    const std::pair<int, int>* offending = nullptr;
    for (const auto& e : suspects) {
      if (in_core.count(e.first) && in_core.count(e.second)) { offending = &e; break; }
    }
    if (!offending) break;
    auto degree_in = [&](int v) {
      int d = 0;
      for (int w : g.graph.adj[static_cast<std::size_t>(v)])
        if (in_core.count(w)) ++d;
      return d;
    };
    int da = degree_in(offending->first);
    int db = degree_in(offending->second);
    int victim;
    if (da != db) victim = (da < db) ? offending->first : offending->second;
    else victim = std::max(offending->first, offending->second);
    core.erase(std::remove(core.begin(), core.end(), victim), core.end());
  }

  std::vector<std::string> names;
  names.reserve(core.size());
  for (int v : core) names.push_back(ids[static_cast<std::size_t>(v)]);
  return names;
}

}  // namespace cml
