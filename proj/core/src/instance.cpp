#include "cml/instance.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "cml/errors.hpp"

namespace cml {

IdPair make_pair_sorted(const std::string& a, const std::string& b) {
  return a <= b ? IdPair{a, b} : IdPair{b, a};
}

std::optional<std::size_t> Instance::index_of(const std::string& id) const {
  const auto& s = sorted_ids();
  auto it = std::lower_bound(s.begin(), s.end(), id);
  if (it == s.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - s.begin());
}

std::size_t Instance::index_of_checked(const std::string& id) const {
  auto at = index_of(id);
  if (!at) throw InvalidParameter("unknown object id '" + id + "'");
  return *at;
}

const std::vector<std::string>& Instance::sorted_ids() const {
  if (sorted_.size() != objects.size()) {
    sorted_ = objects;
    std::sort(sorted_.begin(), sorted_.end());
  }
  return sorted_;
}

void Instance::reindex() { sorted_.clear(); }

void validate_instance(const Instance& inst) {
  if (!(inst.u > 0.0) || !std::isfinite(inst.u))
    throw InvalidInstance("u must be finite and positive");
  if (!(inst.l > 0.0) || !std::isfinite(inst.l))
    throw InvalidInstance("l must be finite and positive");

  std::set<std::string> seen;
  for (const auto& id : inst.objects) {
    if (id.empty()) throw InvalidInstance("empty object id");
    if (!seen.insert(id).second)
      throw InvalidInstance("duplicate object id: " + id);
  }

  auto check_pairs = [&](const std::vector<IdPair>& pairs, const char* side) {
    std::set<IdPair> dedup;
    for (const auto& [a, b] : pairs) {
      if (a == b)
        throw InvalidInstance(std::string(side) + " pair with equal endpoints: " + a);
      if (!seen.count(a))
        throw InvalidInstance(std::string(side) + " pair uses unknown id: " + a);
      if (!seen.count(b))
        throw InvalidInstance(std::string(side) + " pair uses unknown id: " + b);
      if (!dedup.insert(make_pair_sorted(a, b)).second)
        throw InvalidInstance(std::string(side) + " pair listed twice: " + a + "," + b);
    }
  };
  check_pairs(inst.similar, "similar");
  check_pairs(inst.dissimilar, "dissimilar");

  std::set<IdPair> sim;
  for (const auto& [a, b] : inst.similar) sim.insert(make_pair_sorted(a, b));
  for (const auto& [a, b] : inst.dissimilar)
    if (sim.count(make_pair_sorted(a, b)))
      throw InvalidInstance("pair labeled both similar and dissimilar: " + a + "," + b);
}

namespace {

// Union-find over sorted-id indices; small enough to live here.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ValidationReport validate(const Instance& inst) {
  validate_instance(inst);
  ValidationReport rep;
  rep.complete = inst.complete_information();
  rep.n_similar = inst.similar.size();
  rep.n_dissimilar = inst.dissimilar.size();

  Dsu dsu(inst.n());
  for (const auto& [a, b] : inst.similar)
    dsu.unite(static_cast<int>(*inst.index_of(a)), static_cast<int>(*inst.index_of(b)));
  std::set<int> roots;
  for (std::size_t i = 0; i < inst.n(); ++i) roots.insert(dsu.find(static_cast<int>(i)));
  rep.s_graph_components = roots.size();
  rep.s_graph_connected = roots.size() <= 1;
  return rep;
}

PairSystem restrict_to(const Instance& inst, const std::vector<std::string>& subset) {
  PairSystem sys;
  sys.ids = subset;
  std::sort(sys.ids.begin(), sys.ids.end());
  sys.ids.erase(std::unique(sys.ids.begin(), sys.ids.end()), sys.ids.end());
  sys.u = inst.u;
  sys.l = inst.l;

  std::map<std::string, int> local;
  for (std::size_t i = 0; i < sys.ids.size(); ++i)
    local[sys.ids[i]] = static_cast<int>(i);

  auto collect = [&](const std::vector<IdPair>& pairs,
                     std::vector<std::pair<int, int>>& out) {
    for (const auto& [a, b] : pairs) {
      auto ia = local.find(a);
      auto ib = local.find(b);
      if (ia == local.end() || ib == local.end()) continue;
      int i = ia->second, j = ib->second;
      if (i > j) std::swap(i, j);
      out.emplace_back(i, j);
    }
    std::sort(out.begin(), out.end());
  };
  collect(inst.similar, sys.similar);
  collect(inst.dissimilar, sys.dissimilar);
  return sys;
}

PairSystem full_system(const Instance& inst) { return restrict_to(inst, inst.objects); }

}  // namespace cml
