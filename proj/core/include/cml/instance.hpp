#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cml {

using IdPair = std::pair<std::string, std::string>;

/// Returns the pair in canonical form: lexicographically smaller id first.
IdPair make_pair_sorted(const std::string& a, const std::string& b);

/// A labeled instance: objects plus similarity / dissimilarity constraints
/// with thresholds u (similar pairs must end up within u) and l (dissimilar
/// pairs must end up at least l apart). Pair lists are kept sorted with the
/// smaller id first; `objects` keeps the order it was constructed with.
struct Instance {
  std::vector<std::string> objects;
  double u = 0.0;
  double l = 0.0;
  std::vector<IdPair> similar;
  std::vector<IdPair> dissimilar;

  std::size_t n() const { return objects.size(); }
  std::size_t total_pairs() const { return n() * (n() - 1) / 2; }

  /// Every unordered pair is labeled exactly once.
  bool complete_information() const {
    return similar.size() + dissimilar.size() == total_pairs();
  }

  /// Index of an id in sorted-id order; nullopt if unknown.
  std::optional<std::size_t> index_of(const std::string& id) const;
  std::size_t index_of_checked(const std::string& id) const;  // throws InvalidParameter

  /// Object ids in sorted order (the canonical internal indexing).
  const std::vector<std::string>& sorted_ids() const;

  /// Re-derives the sorted index after the id lists were edited in place.
  void reindex();

 private:
  mutable std::vector<std::string> sorted_;  // lazily built by sorted_ids()
};

/// Normalizes pair lists (canonical pair order, sorted lists) and checks the
/// validity rules. Throws InvalidInstance naming the violated rule.
void validate_instance(const Instance& inst);

struct ValidationReport {
  bool complete = false;
  std::size_t n_similar = 0;
  std::size_t n_dissimilar = 0;
  std::size_t s_graph_components = 0;
  bool s_graph_connected = false;
};

/// Validates and summarizes; throws InvalidInstance on rule violations.
ValidationReport validate(const Instance& inst);

/// Restriction of an instance to a subset of objects, with ids resolved to
/// local indices (positions in `ids`, which is sorted). Learners work on
/// these views when they split an instance into clusters.
struct PairSystem {
  std::vector<std::string> ids;  // sorted
  double u = 0.0;
  double l = 0.0;
  std::vector<std::pair<int, int>> similar;     // local index pairs, i < j
  std::vector<std::pair<int, int>> dissimilar;  // local index pairs, i < j

  std::size_t n() const { return ids.size(); }
  std::size_t total_pairs() const { return n() * (n() - 1) / 2; }
};

/// Builds the restriction of `inst` to `subset` (ids; need not be sorted).
/// Pairs with exactly one endpoint inside the subset are dropped.
PairSystem restrict_to(const Instance& inst, const std::vector<std::string>& subset);

/// Restriction to the full object set.
PairSystem full_system(const Instance& inst);

}  // namespace cml
