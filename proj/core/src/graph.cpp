#include "cml/graph.hpp"

#include <algorithm>
#include <deque>

#include "cml/errors.hpp"

namespace cml {

SimpleGraph SimpleGraph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  SimpleGraph g;
  g.n = n;
  for (auto& [a, b] : edges) {
    if (a == b) throw InvalidParameter("self loop in graph");
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw InvalidParameter("edge endpoint out of range");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);
  g.adj.assign(static_cast<std::size_t>(n), {});
  for (const auto& [a, b] : g.edges) {
    g.adj[static_cast<std::size_t>(a)].push_back(b);
    g.adj[static_cast<std::size_t>(b)].push_back(a);
  }
  return g;
}

bool SimpleGraph::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

std::vector<std::vector<int>> SimpleGraph::components() const {
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::deque<int> queue{s};
    comp[static_cast<std::size_t>(s)] = id;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      out.back().push_back(v);
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          queue.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;  // ordered by smallest member because sources are scanned in order
}

std::vector<int> SimpleGraph::bfs_hops(int source) const {
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::deque<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

ConstraintGraphS ConstraintGraphS::build(const Instance& inst) {
  ConstraintGraphS g;
  g.ids = inst.sorted_ids();
  g.u = inst.u;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(inst.similar.size());
  for (const auto& [a, b] : inst.similar)
    edges.emplace_back(static_cast<int>(*inst.index_of(a)),
                       static_cast<int>(*inst.index_of(b)));
  g.graph = SimpleGraph::from_edges(static_cast<int>(g.ids.size()), std::move(edges));
  return g;
}

std::vector<double> ConstraintGraphS::rho_from(int source) const {
  std::vector<int> hops = graph.bfs_hops(source);
  std::vector<double> out(hops.size(), kUnreachable);
  for (std::size_t i = 0; i < hops.size(); ++i)
    if (hops[i] >= 0) out[i] = u * static_cast<double>(hops[i]);
  return out;
}

double ConstraintGraphS::rho_diameter(const std::vector<int>& subset) const {
  double best = 0.0;
  for (int v : subset) {
    std::vector<double> d = rho_from(v);
    for (int w : subset) best = std::max(best, d[static_cast<std::size_t>(w)]);
  }
  return best;
}

}  // namespace cml
