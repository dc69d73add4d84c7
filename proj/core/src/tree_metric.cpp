#include "cml/tree_metric.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cml/errors.hpp"

namespace cml {

void TreeMetric::build_adjacency() const {
  if (!adj_.empty() && adj_.size() == vertices.size()) return;
  index_.clear();
  for (std::size_t i = 0; i < vertices.size(); ++i)
    index_[vertices[i]] = static_cast<int>(i);
  adj_.assign(vertices.size(), {});
  for (const auto& [a, b, len] : edges) {
    auto ia = index_.find(a);
    auto ib = index_.find(b);
    if (ia == index_.end() || ib == index_.end())
      throw InvalidParameter("tree edge uses unknown vertex");
    adj_[static_cast<std::size_t>(ia->second)].emplace_back(ib->second, len);
    adj_[static_cast<std::size_t>(ib->second)].emplace_back(ia->second, len);
  }
}

void TreeMetric::validate() const {
  if (vertices.empty()) throw InvalidParameter("tree has no vertices");
  std::set<std::string> seen;
  for (const auto& v : vertices)
    if (!seen.insert(v).second) throw InvalidParameter("duplicate tree vertex: " + v);
  if (edges.size() + 1 != vertices.size())
    throw InvalidParameter("tree must have |V| - 1 edges");
  for (const auto& [a, b, len] : edges) {
    if (len <= 0.0) throw InvalidParameter("tree edge length must be positive");
    if (a == b) throw InvalidParameter("tree self loop");
  }
  if (!root.empty() && !seen.count(root))
    throw InvalidParameter("tree root is not a vertex: " + root);

  adj_.clear();
  build_adjacency();
  std::vector<double> dist = distances_from(vertices.front());
  for (std::size_t i = 0; i < dist.size(); ++i)
    if (dist[i] < 0.0) throw InvalidParameter("tree is not connected");
}

int TreeMetric::index_of(const std::string& v) const {
  build_adjacency();
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

std::vector<double> TreeMetric::distances_from(const std::string& source) const {
  build_adjacency();
  int s = index_of(source);
  if (s < 0) throw InvalidParameter("unknown tree vertex: " + source);
  std::vector<double> dist(vertices.size(), -1.0);
  std::deque<int> queue{s};
  dist[static_cast<std::size_t>(s)] = 0.0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const auto& [w, len] : adj_[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(w)] < 0.0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + len;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

double TreeMetric::distance(const std::string& a, const std::string& b) const {
  int ib = index_of(b);
  if (ib < 0) throw InvalidParameter("unknown tree vertex: " + b);
  return distances_from(a)[static_cast<std::size_t>(ib)];
}

std::vector<std::vector<double>> TreeMetric::all_pairs() const {
  std::vector<std::vector<double>> out;
  out.reserve(vertices.size());
  for (const auto& v : vertices) out.push_back(distances_from(v));
  return out;
}

std::size_t canonical_tree_size(int depth, int arity, std::size_t vertex_budget) {
  std::size_t total = 0;
  std::size_t level = 1;
  for (int d = 0; d <= depth; ++d) {
    if (level > vertex_budget || total > vertex_budget - level)
      return vertex_budget + 1;  // saturate instead of overflowing
    total += level;
    if (d < depth) {
      if (level > vertex_budget / static_cast<std::size_t>(arity))
        level = vertex_budget + 1;
      else
        level *= static_cast<std::size_t>(arity);
    }
  }
  return total;
}

TreeMetric canonical_tree(double alpha, int depth, int arity, std::size_t vertex_budget) {
  if (alpha <= 0.0) throw InvalidParameter("canonical tree edge length must be positive");
  if (depth < 0) throw InvalidParameter("canonical tree depth must be >= 0");
  if (arity < 1) throw InvalidParameter("canonical tree arity must be >= 1");
  if (canonical_tree_size(depth, arity, vertex_budget) > vertex_budget)
    throw SizeBudgetExceeded("canonical tree would exceed vertex budget");

  TreeMetric t;
  t.root = "r";
  t.vertices.push_back(t.root);
  std::vector<std::string> frontier{t.root};
  for (int d = 0; d < depth; ++d) {
    std::vector<std::string> next;
    next.reserve(frontier.size() * static_cast<std::size_t>(arity));
    for (const auto& parent : frontier) {
      for (int c = 0; c < arity; ++c) {
        std::string child = parent + "." + std::to_string(c);
        t.vertices.push_back(child);
        t.edges.emplace_back(parent, child, alpha);
        next.push_back(child);
      }
    }
    frontier = std::move(next);
  }
  return t;
}

}  // namespace cml
