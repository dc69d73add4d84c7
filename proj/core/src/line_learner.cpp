#include "cml/line_learner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "cml/errors.hpp"
#include "cml/graph.hpp"

namespace cml {

using Rational = boost::multiprecision::cpp_rational;

Instance subinstance(const Instance& inst, const std::vector<std::string>& subset) {
  Instance out;
  out.u = inst.u;
  out.l = inst.l;
  std::set<std::string> keep(subset.begin(), subset.end());
  for (const auto& id : inst.objects)
    if (keep.count(id)) out.objects.push_back(id);
  for (const auto& pr : inst.similar)
    if (keep.count(pr.first) && keep.count(pr.second)) out.similar.push_back(pr);
  for (const auto& pr : inst.dissimilar)
    if (keep.count(pr.first) && keep.count(pr.second)) out.dissimilar.push_back(pr);
  return out;
}

std::vector<Ordering> candidate_orderings(const Instance& inst) {
  if (!inst.complete_information())
    throw IncompleteInformation("candidate orderings need complete information");
  ConstraintGraphS g = ConstraintGraphS::build(inst);
  if (g.components().size() > 1)
    throw NotConnected("candidate orderings need a connected similarity graph");

  int n = static_cast<int>(inst.n());
  const std::vector<std::string>& ids = g.ids;

  std::vector<Ordering> out;
  if (n <= 3) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
      Ordering ord;
      for (int v : perm) ord.sequence.push_back(ids[static_cast<std::size_t>(v)]);
      out.push_back(std::move(ord));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }

  for (int start = 0; start < n; ++start) {
    Ordering ord;
    std::vector<char> absorbed(static_cast<std::size_t>(n), 0);
    absorbed[static_cast<std::size_t>(start)] = 1;
    ord.sequence.push_back(ids[static_cast<std::size_t>(start)]);

    while (static_cast<int>(ord.sequence.size()) < n && ord.viable) {
      // Neighborhood of the contracted prefix vertex.
      std::vector<int> frontier;
      for (int v = 0; v < n; ++v) {
        if (absorbed[static_cast<std::size_t>(v)]) continue;
        for (int w : g.graph.adj[static_cast<std::size_t>(v)]) {
          if (absorbed[static_cast<std::size_t>(w)]) {
            frontier.push_back(v);
            break;
          }
        }
      }
      // The construction only works when that neighborhood is a clique.
      for (std::size_t a = 0; a < frontier.size() && ord.viable; ++a)
        for (std::size_t b = a + 1; b < frontier.size() && ord.viable; ++b)
          if (!g.graph.has_edge(frontier[a], frontier[b])) ord.viable = false;
      if (!ord.viable) break;

      // Minimum degree in the contracted graph; the contracted vertex counts
      // once for every frontier member.
      long min_deg = -1;
      std::vector<int> tied;
      for (int v : frontier) {
        long deg = 1;  // edge to the contracted prefix
        for (int w : g.graph.adj[static_cast<std::size_t>(v)])
          if (!absorbed[static_cast<std::size_t>(w)]) ++deg;
        if (min_deg < 0 || deg < min_deg) {
          min_deg = deg;
          tied.assign(1, v);
        } else if (deg == min_deg) {
          tied.push_back(v);
        }
      }

      // Equal contracted degree alone does not make tied vertices
      // interchangeable: a dissimilar pair against an already placed vertex
      // can force one of them further right. In any placement extending the
      // prefix the similar-to-prefix sets of unplaced vertices are nested,
      // so the vertex placed next must be similar to every prefix member
      // that any unplaced vertex is similar to. Keep only such candidates;
      // the survivors agree on both their prefix relations and their
      // contracted neighborhood, which makes them interchangeable.
      std::vector<std::vector<char>> prefix_sim(
          static_cast<std::size_t>(n),
          std::vector<char>(static_cast<std::size_t>(n), 0));
      for (int v = 0; v < n; ++v) {
        if (absorbed[static_cast<std::size_t>(v)]) continue;
        for (int w : g.graph.adj[static_cast<std::size_t>(v)])
          if (absorbed[static_cast<std::size_t>(w)])
            prefix_sim[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] = 1;
      }
      int best = -1;
      for (int v : tied) {
        bool dominates = true;
        for (int z = 0; z < n && dominates; ++z) {
          if (absorbed[static_cast<std::size_t>(z)] || z == v) continue;
          for (int w = 0; w < n; ++w) {
            if (prefix_sim[static_cast<std::size_t>(z)][static_cast<std::size_t>(w)] &&
                !prefix_sim[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) {
              dominates = false;
              break;
            }
          }
        }
        if (dominates && (best < 0 || ids[static_cast<std::size_t>(v)] <
                                          ids[static_cast<std::size_t>(best)]))
          best = v;
      }
      if (best < 0) {
        // No minimum-degree candidate is compatible with the prefix.
        ord.viable = false;
        break;
      }
      absorbed[static_cast<std::size_t>(best)] = 1;
      ord.sequence.push_back(ids[static_cast<std::size_t>(best)]);
    }
    out.push_back(std::move(ord));
  }
  return out;
}

std::optional<Embedding> feasible_embedding_for_ordering(
    const Instance& inst, const std::vector<std::string>& ordering) {
  int n = static_cast<int>(inst.n());
  if (static_cast<int>(ordering.size()) != n)
    throw InvalidParameter("ordering must list every object exactly once");
  std::map<std::string, int> pos;
  for (int i = 0; i < n; ++i) {
    if (!pos.emplace(ordering[static_cast<std::size_t>(i)], i).second)
      throw InvalidParameter("ordering repeats an object");
  }
  for (const auto& id : inst.objects)
    if (!pos.count(id)) throw InvalidParameter("ordering misses object " + id);

  // Difference constraints x_j - x_i <= w as edges i -> j with weight w.
  struct Edge {
    int from, to;
    Rational w;
  };
  std::vector<Edge> edges;
  Rational u(inst.u), l(inst.l);
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i + 1, i, Rational(0)});  // monotone
  for (const auto& pr : inst.similar) {
    int i = pos[pr.first], j = pos[pr.second];
    if (i > j) std::swap(i, j);
    edges.push_back({i, j, u});
  }
  for (const auto& pr : inst.dissimilar) {
    int i = pos[pr.first], j = pos[pr.second];
    if (i > j) std::swap(i, j);
    edges.push_back({j, i, -l});
  }

  // Bellman-Ford from a virtual source connected to every vertex with weight
  // zero, i.e. all distances start at zero.
  std::vector<Rational> dist(static_cast<std::size_t>(n), Rational(0));
  for (int round = 0; round < n; ++round) {
    bool changed = false;
    for (const auto& e : edges) {
      Rational cand = dist[static_cast<std::size_t>(e.from)] + e.w;
      if (cand < dist[static_cast<std::size_t>(e.to)]) {
        dist[static_cast<std::size_t>(e.to)] = cand;
        changed = true;
      }
    }
    if (!changed) break;
    if (round == n - 1) return std::nullopt;  // still relaxing: negative cycle
  }

  Embedding emb = Embedding::line();
  Rational base = dist[0];
  for (int i = 0; i < n; ++i) {
    Rational x = dist[static_cast<std::size_t>(i)] - base;
    emb.coords[ordering[static_cast<std::size_t>(i)]] = {
        static_cast<double>(x)};
  }
  return emb;
}

LineResult learn_line(const Instance& inst) {
  validate_instance(inst);
  if (!inst.complete_information())
    throw IncompleteInformation("learn_line needs complete information");

  LineResult res;
  if (inst.n() == 0) {
    res.feasible = true;
    res.embedding = Embedding::line();
    return res;
  }

  ConstraintGraphS g = ConstraintGraphS::build(inst);
  std::vector<std::vector<int>> comps = g.components();

  Embedding emb = Embedding::line();
  double offset = 0.0;
  bool first = true;
  for (const auto& comp : comps) {
    std::vector<std::string> ids;
    ids.reserve(comp.size());
    for (int v : comp) ids.push_back(g.ids[static_cast<std::size_t>(v)]);
    Instance sub = subinstance(inst, ids);

    std::optional<Embedding> witness;
    for (const auto& ord : candidate_orderings(sub)) {
      if (!ord.viable) continue;
      witness = feasible_embedding_for_ordering(sub, ord.sequence);
      if (witness) break;
    }
    if (!witness) return res;  // some component admits no exact embedding

    double lo = 0.0, hi = 0.0;
    bool any = false;
    for (const auto& [id, xy] : witness->coords) {
      (void)id;
      lo = any ? std::min(lo, xy[0]) : xy[0];
      hi = any ? std::max(hi, xy[0]) : xy[0];
      any = true;
    }
    double shift = (first ? 0.0 : offset + inst.l) - lo;
    for (const auto& [id, xy] : witness->coords) emb.coords[id] = {xy[0] + shift};
    offset = hi + shift;
    first = false;
  }
  res.feasible = true;
  res.embedding = std::move(emb);
  return res;
}

}  // namespace cml
