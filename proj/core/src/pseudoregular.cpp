#include "cml/pseudoregular.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "cml/errors.hpp"
#include "cml/rng.hpp"

namespace cml {

namespace {

std::vector<int> part_of_map(const std::vector<std::vector<int>>& parts, int n) {
  std::vector<int> part_of(static_cast<std::size_t>(n), -1);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int v : parts[p]) {
      if (v < 0 || v >= n || part_of[static_cast<std::size_t>(v)] >= 0)
        throw GroundSetMismatch("parts do not partition the vertex set");
      part_of[static_cast<std::size_t>(v)] = static_cast<int>(p);
    }
  for (int v = 0; v < n; ++v)
    if (part_of[static_cast<std::size_t>(v)] < 0)
      throw GroundSetMismatch("vertex missing from partition");
  return part_of;
}

std::vector<std::vector<double>> densities(const SimpleGraph& g,
                                           const std::vector<std::vector<int>>& parts,
                                           const std::vector<int>& part_of) {
  std::size_t k = parts.size();
  std::vector<std::vector<double>> e(k, std::vector<double>(k, 0.0));
  for (const auto& [a, b] : g.edges) {
    int pa = part_of[static_cast<std::size_t>(a)];
    int pb = part_of[static_cast<std::size_t>(b)];
    e[static_cast<std::size_t>(pa)][static_cast<std::size_t>(pb)] += 1.0;
    if (pa != pb) e[static_cast<std::size_t>(pb)][static_cast<std::size_t>(pa)] += 1.0;
  }
  std::vector<std::vector<double>> d(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      double denom = static_cast<double>(parts[i].size()) *
                     static_cast<double>(parts[j].size());
      double count = i == j ? 2.0 * e[i][j] : e[i][j];
      d[i][j] = denom > 0.0 ? count / denom : 0.0;
    }
  }
  return d;
}

// Normalized discrepancy of one disjoint (S, T) assignment (0 none / 1 S / 2 T).
double discrepancy(const SimpleGraph& g, const std::vector<std::vector<int>>& parts,
                   const std::vector<int>& part_of,
                   const std::vector<std::vector<double>>& dens,
                   const std::vector<int>& side) {
  std::size_t k = parts.size();
  double actual = 0.0;
  for (const auto& [a, b] : g.edges) {
    int sa = side[static_cast<std::size_t>(a)];
    int sb = side[static_cast<std::size_t>(b)];
    if ((sa == 1 && sb == 2) || (sa == 2 && sb == 1)) actual += 1.0;
  }
  std::vector<double> in_s(k, 0.0), in_t(k, 0.0);
  for (std::size_t v = 0; v < side.size(); ++v) {
    if (side[v] == 1) in_s[static_cast<std::size_t>(part_of[v])] += 1.0;
    if (side[v] == 2) in_t[static_cast<std::size_t>(part_of[v])] += 1.0;
  }
  double predicted = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    if (in_s[i] == 0.0) continue;
    for (std::size_t j = 0; j < k; ++j) predicted += dens[i][j] * in_s[i] * in_t[j];
  }
  double n2 = static_cast<double>(g.n) * static_cast<double>(g.n);
  return std::fabs(actual - predicted) / n2;
}

}  // namespace

DefectWitness exact_defect(const SimpleGraph& g,
                           const std::vector<std::vector<int>>& parts) {
  if (g.n == 0) throw EmptyGraph("defect of an empty graph");
  std::vector<int> part_of = part_of_map(parts, g.n);

  DefectWitness best;
  best.side_of.assign(static_cast<std::size_t>(g.n), 0);

  // All-singleton partitions predict every pair exactly, so the defect is 0
  // for any S, T and the scan is unnecessary.
  bool all_singletons = true;
  for (const auto& part : parts) all_singletons &= part.size() == 1;
  if (all_singletons) return best;

  std::vector<std::vector<double>> dens = densities(g, parts, part_of);
  std::size_t k = parts.size();

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
  for (const auto& [a, b] : g.edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }

  // Incremental odometer over {0,1,2}^n. Maintained so that
  //   predicted = sum_{i,j} dens[i][j] * in_s[i] * in_t[j],
  //   row_t[i]  = sum_j dens[i][j] * in_t[j],
  //   row_s[j]  = sum_i dens[i][j] * in_s[i],
  // letting a single vertex move cost O(deg + k) instead of O(|E| + k^2).
  std::vector<int> side(static_cast<std::size_t>(g.n), 0);
  std::vector<double> in_s(k, 0.0), in_t(k, 0.0), row_s(k, 0.0), row_t(k, 0.0);
  double crossing = 0.0, predicted = 0.0;
  int ns = 0, nt = 0;

  auto move_vertex = [&](int v, int to) {
    int from = side[static_cast<std::size_t>(v)];
    for (int w : adj[static_cast<std::size_t>(v)]) {
      int sw = side[static_cast<std::size_t>(w)];
      if ((from == 1 && sw == 2) || (from == 2 && sw == 1)) crossing -= 1.0;
      if ((to == 1 && sw == 2) || (to == 2 && sw == 1)) crossing += 1.0;
    }
    std::size_t p = static_cast<std::size_t>(part_of[static_cast<std::size_t>(v)]);
    if (from == 1) {
      predicted -= row_t[p];
      in_s[p] -= 1.0;
      for (std::size_t j = 0; j < k; ++j) row_s[j] -= dens[p][j];
      --ns;
    } else if (from == 2) {
      predicted -= row_s[p];
      in_t[p] -= 1.0;
      for (std::size_t i = 0; i < k; ++i) row_t[i] -= dens[i][p];
      --nt;
    }
    if (to == 1) {
      predicted += row_t[p];
      in_s[p] += 1.0;
      for (std::size_t j = 0; j < k; ++j) row_s[j] += dens[p][j];
      ++ns;
    } else if (to == 2) {
      predicted += row_s[p];
      in_t[p] += 1.0;
      for (std::size_t i = 0; i < k; ++i) row_t[i] += dens[i][p];
      ++nt;
    }
    side[static_cast<std::size_t>(v)] = to;
  };

  double n2 = static_cast<double>(g.n) * static_cast<double>(g.n);
  while (true) {
    if (ns > 0 && nt > 0) {
      double d = std::fabs(crossing - predicted) / n2;
      if (d > best.defect) {
        best.defect = d;
        best.side_of = side;
      }
    }
    std::size_t pos = 0;
    while (pos < side.size() && side[pos] == 2) {
      move_vertex(static_cast<int>(pos), 0);
      ++pos;
    }
    if (pos == side.size()) break;
    move_vertex(static_cast<int>(pos), side[pos] + 1);
  }
  return best;
}

DefectWitness estimate_defect(const SimpleGraph& g,
                              const std::vector<std::vector<int>>& parts,
                              double epsilon, double delta, std::uint64_t seed,
                              const PseudoregularOptions& opt) {
  if (g.n == 0) throw EmptyGraph("defect of an empty graph");
  if (g.n <= opt.exact_defect_limit) return exact_defect(g, parts);

  std::vector<int> part_of = part_of_map(parts, g.n);
  std::vector<std::vector<double>> dens = densities(g, parts, part_of);

  double eps_eff = std::max(epsilon, 1e-3);
  int samples = static_cast<int>(std::ceil(4.0 / (eps_eff * eps_eff * delta)));
  samples = std::clamp(samples, 200, opt.sample_cap);

  Rng rng(seed);
  DefectWitness best;
  best.side_of.assign(static_cast<std::size_t>(g.n), 0);
  std::vector<int> side(static_cast<std::size_t>(g.n), 0);
  for (int s = 0; s < samples; ++s) {
    for (auto& x : side) x = static_cast<int>(rng.below(3));
    double d = discrepancy(g, parts, part_of, dens, side);
    if (d > best.defect) {
      best.defect = d;
      best.side_of = side;
    }
  }
  // Single-vertex polish of the worst cut found.
  side = best.side_of;
  for (int pass = 0; pass < opt.improve_passes; ++pass) {
    bool changed = false;
    for (int v = 0; v < g.n; ++v) {
      int orig = side[static_cast<std::size_t>(v)];
      int arg = orig;
      double cur = discrepancy(g, parts, part_of, dens, side);
      for (int cand = 0; cand < 3; ++cand) {
        if (cand == orig) continue;
        side[static_cast<std::size_t>(v)] = cand;
        double d = discrepancy(g, parts, part_of, dens, side);
        if (d > cur) {
          cur = d;
          arg = cand;
        }
      }
      side[static_cast<std::size_t>(v)] = arg;
      changed |= arg != orig;
      if (cur > best.defect) {
        best.defect = cur;
        best.side_of = side;
      }
    }
    if (!changed) break;
  }
  return best;
}

std::vector<std::vector<int>> refine_partitions(const std::vector<std::vector<int>>& a,
                                                const std::vector<std::vector<int>>& b) {
  int n = 0;
  for (const auto& part : a) n += static_cast<int>(part.size());
  std::vector<int> in_a = part_of_map(a, n);
  std::vector<int> in_b;
  try {
    in_b = part_of_map(b, n);
  } catch (const GroundSetMismatch&) {
    throw GroundSetMismatch("partitions cover different ground sets");
  }

  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> index(a.size(), std::vector<int>(b.size(), -1));
  for (std::size_t pa = 0; pa < a.size(); ++pa) {
    for (int v : a[pa]) {
      int pb = in_b[static_cast<std::size_t>(v)];
      int& slot = index[pa][static_cast<std::size_t>(pb)];
      if (slot < 0) {
        slot = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[static_cast<std::size_t>(slot)].push_back(v);
    }
  }
  for (auto& part : out) std::sort(part.begin(), part.end());
  return out;
}

PseudoregularPartition pseudoregular_partition(const SimpleGraph& g, double epsilon,
                                               double delta, std::uint64_t seed,
                                               PseudoregularOptions opt) {
  if (g.n == 0) throw EmptyGraph("cannot partition an empty graph");
  if (!(epsilon > 0.0)) throw InvalidParameter("epsilon must be positive");
  if (!(delta > 0.0) || !(delta < 1.0))
    throw InvalidParameter("failure probability delta must lie in (0, 1)");

  int n = g.n;
  int cap = std::min(opt.part_cap, n);
  if (cap < 1) throw InvalidParameter("part cap must be >= 1");

  // Vertex order refined by witness cuts; blocks are consecutive chunks, so
  // equitability holds by construction.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<std::uint8_t>> sig(static_cast<std::size_t>(n));

  auto chop = [&](int k) {
    std::vector<std::vector<int>> parts;
    parts.reserve(static_cast<std::size_t>(k));
    int base = n / k, rem = n % k, at = 0;
    for (int p = 0; p < k; ++p) {
      int len = base + (p < rem ? 1 : 0);
      std::vector<int> part(order.begin() + at, order.begin() + at + len);
      std::sort(part.begin(), part.end());
      parts.push_back(std::move(part));
      at += len;
    }
    return parts;
  };

  Rng rng(seed);
  int k = 1;
  int round = 0;
  std::vector<std::vector<int>> parts = chop(k);
  while (true) {
    DefectWitness w =
        estimate_defect(g, parts, epsilon, delta, rng.split(static_cast<std::uint64_t>(round)).next(), opt);
    if (w.defect <= epsilon || k >= n) {
      PseudoregularPartition out;
      out.parts = std::move(parts);
      out.epsilon = epsilon;
      out.defect_estimate = w.defect;
      std::vector<int> part_of = part_of_map(out.parts, n);
      out.density = densities(g, out.parts, part_of);
      return out;
    }
    if (k >= cap)
      throw PartBudgetExceeded("defect target not reached within the part cap");
    for (int v = 0; v < n; ++v)
      sig[static_cast<std::size_t>(v)].push_back(
          static_cast<std::uint8_t>(w.side_of[static_cast<std::size_t>(v)]));
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      const auto& sx = sig[static_cast<std::size_t>(x)];
      const auto& sy = sig[static_cast<std::size_t>(y)];
      // Signatures grow one entry per round, so they always have equal length.
      for (std::size_t i = 0; i < sx.size(); ++i)
        if (sx[i] != sy[i]) return sx[i] < sy[i];
      return x < y;
    });
    k = std::min(2 * k, cap);
    parts = chop(k);
    ++round;
  }
}

}  // namespace cml
