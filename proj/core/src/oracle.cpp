#include "cml/oracle.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cml/errors.hpp"
#include "cml/tree_metric.hpp"

namespace cml {
namespace {

using Rational = boost::multiprecision::cpp_rational;

// Difference-constraint graph over positions 0..t of an ordering prefix:
// edge i -> j with weight w encodes p_j - p_i <= w.
struct PrefixEdges {
  std::vector<std::vector<std::pair<int, double>>> out;  // per source
};

// Floyd-Warshall negative-cycle probe over an arbitrary arithmetic type.
// Unreachable entries are tracked explicitly so exact rationals work too.
template <typename T>
struct Apsp {
  std::vector<std::vector<T>> d;
  std::vector<std::vector<char>> has;
};

template <typename T>
Apsp<T> all_pairs_shortest(const PrefixEdges& g, int n) {
  Apsp<T> r;
  r.d.assign(static_cast<std::size_t>(n),
             std::vector<T>(static_cast<std::size_t>(n), T(0)));
  r.has.assign(static_cast<std::size_t>(n),
               std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) r.has[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  for (int i = 0; i < n; ++i)
    for (const auto& [j, w] : g.out[static_cast<std::size_t>(i)]) {
      auto& dij = r.d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      auto& hij = r.has[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      T tw(w);
      if (!hij || tw < dij) { dij = tw; hij = 1; }
    }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!r.has[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) continue;
      for (int j = 0; j < n; ++j) {
        if (!r.has[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) continue;
        T via = r.d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                r.d[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        auto& dij = r.d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        auto& hij = r.has[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (!hij || via < dij) { dij = via; hij = 1; }
      }
    }
  return r;
}

template <typename T>
bool has_negative_diagonal(const Apsp<T>& r) {
  for (std::size_t i = 0; i < r.d.size(); ++i)
    if (r.d[i][i] < T(0)) return true;
  return false;
}

template <typename T>
T worst_diagonal(const Apsp<T>& r) {
  T worst(0);
  for (std::size_t i = 0; i < r.d.size(); ++i)
    if (r.d[i][i] < worst) worst = r.d[i][i];
  return worst;
}

}  // namespace

FiniteOracleResult brute_force_finite(const PairSystem& sub, const FiniteMetric& host,
                                      double c, std::uint64_t cap) {
  if (!(c >= 1.0)) throw InvalidParameter("distortion must be >= 1");
  const std::size_t n = sub.ids.size();
  const std::size_t k = host.size();
  FiniteOracleResult out;
  if (n == 0) {
    out.accuracy = 1.0;
    return out;
  }
  if (k == 0) throw InvalidParameter("finite oracle needs a nonempty host");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (k > 1 && total > cap / k) throw OracleBudgetExceeded("assignment space exceeds cap");
    total *= k;
  }
  if (total > cap) throw OracleBudgetExceeded("assignment space exceeds cap");

  const double sim_limit = sub.u * c + 1e-9;
  const double dis_limit = sub.l / c - 1e-9;
  const std::size_t pairs = sub.similar.size() + sub.dissimilar.size();

  std::vector<int> assign(n, 0);
  std::vector<int> best;
  long long best_sat = -1;
  while (true) {
    long long sat = 0;
    for (const auto& [i, j] : sub.similar) {
      double d = host.dist[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])]
                          [static_cast<std::size_t>(assign[static_cast<std::size_t>(j)])];
      if (d <= sim_limit) ++sat;
    }
    for (const auto& [i, j] : sub.dissimilar) {
      double d = host.dist[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])]
                          [static_cast<std::size_t>(assign[static_cast<std::size_t>(j)])];
      if (d >= dis_limit) ++sat;
    }
    ++out.evaluated;
    if (sat > best_sat) {
      best_sat = sat;
      best = assign;
    }
    // next assignment in lexicographic order, last position fastest
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (assign[pos] + 1 < static_cast<int>(k)) {
        ++assign[pos];
        std::fill(assign.begin() + static_cast<std::ptrdiff_t>(pos) + 1, assign.end(), 0);
        break;
      }
      if (pos == 0) { pos = n; break; }
    }
    if (pos == n) break;
  }
  out.point_of = std::move(best);
  out.accuracy = pairs == 0 ? 1.0
                            : static_cast<double>(best_sat) / static_cast<double>(pairs);
  return out;
}

LineOracleResult brute_force_line_feasible(const Instance& inst, std::uint64_t cap) {
  validate_instance(inst);
  if (!inst.complete_information())
    throw IncompleteInformation("line oracle needs every pair labelled");
  const auto& ids = inst.sorted_ids();
  const std::size_t n = ids.size();
  LineOracleResult out;
  if (n == 0) {
    out.feasible = true;
    return out;
  }

  // label matrix: +1 similar, -1 dissimilar
  std::vector<std::vector<int>> label(n, std::vector<int>(n, 0));
  for (const auto& p : inst.similar) {
    std::size_t a = inst.index_of_checked(p.first);
    std::size_t b = inst.index_of_checked(p.second);
    label[a][b] = label[b][a] = 1;
  }
  for (const auto& p : inst.dissimilar) {
    std::size_t a = inst.index_of_checked(p.first);
    std::size_t b = inst.index_of_checked(p.second);
    label[a][b] = label[b][a] = -1;
  }

  const double scale = std::max({1.0, inst.u, inst.l}) * static_cast<double>(n);
  const double certain = -1e-7 * scale;

  auto edges_for_prefix = [&](const std::vector<int>& prefix) {
    PrefixEdges g;
    int t = static_cast<int>(prefix.size());
    g.out.assign(static_cast<std::size_t>(t), {});
    for (int i = 0; i < t; ++i) {
      if (i + 1 < t) g.out[static_cast<std::size_t>(i + 1)].push_back({i, 0.0});
      for (int j = i + 1; j < t; ++j) {
        int lab = label[static_cast<std::size_t>(prefix[static_cast<std::size_t>(i)])]
                       [static_cast<std::size_t>(prefix[static_cast<std::size_t>(j)])];
        if (lab == 1) g.out[static_cast<std::size_t>(i)].push_back({j, inst.u});
        else if (lab == -1) g.out[static_cast<std::size_t>(j)].push_back({i, -inst.l});
      }
    }
    return g;
  };

  std::vector<int> prefix;
  std::vector<char> used(n, 0);
  // Depth-first over orderings in lexicographic id order. A prefix whose
  // constraints already close a negative cycle cannot be extended, so it
  // prunes the whole subtree. Doubles drive the pruning with a conservative
  // margin; exact arithmetic has the final say at full-length leaves.
  auto dfs = [&](auto&& self) -> bool {
    if (++out.nodes > cap) throw OracleBudgetExceeded("line oracle search cap hit");
    PrefixEdges g = edges_for_prefix(prefix);
    int t = static_cast<int>(prefix.size());
    if (t >= 2) {
      auto d = all_pairs_shortest<double>(g, t);
      if (worst_diagonal(d) < certain) return false;
      if (t == static_cast<int>(n)) {
        auto dr = all_pairs_shortest<Rational>(g, t);
        if (has_negative_diagonal(dr)) return false;
        // feasible: positions from exact column minima (a virtual source
        // with zero edges everywhere), shifted to start at 0
        std::vector<Rational> p(static_cast<std::size_t>(t), Rational(0));
        for (int v = 0; v < t; ++v) {
          Rational m(0);
          for (int i = 0; i < t; ++i) {
            if (!dr.has[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)]) continue;
            const Rational& div = dr.d[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
            if (div < m) m = div;
          }
          p[static_cast<std::size_t>(v)] = m;
        }
        Rational base = p[0];
        for (int v = 0; v < t; ++v)
          out.witness[ids[static_cast<std::size_t>(prefix[static_cast<std::size_t>(v)])]] =
              static_cast<double>(p[static_cast<std::size_t>(v)] - base);
        return true;
      }
    } else if (t == static_cast<int>(n)) {
      for (int v = 0; v < t; ++v)
        out.witness[ids[static_cast<std::size_t>(prefix[static_cast<std::size_t>(v)])]] = 0.0;
      return true;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      prefix.push_back(static_cast<int>(v));
      if (self(self)) return true;
      prefix.pop_back();
      used[v] = 0;
    }
    return false;
  };
  out.feasible = dfs(dfs);
  if (!out.feasible) out.witness.clear();
  return out;
}

FiniteOracleResult brute_force_tree_small(const PairSystem& sub, double alpha, int depth,
                                          int arity, double c, std::uint64_t cap,
                                          std::size_t tree_budget) {
  TreeMetric tree = canonical_tree(alpha, depth, arity, tree_budget);
  FiniteMetric host;
  host.points = tree.vertices;
  host.dist = tree.all_pairs();
  return brute_force_finite(sub, host, c, cap);
}

}  // namespace cml
