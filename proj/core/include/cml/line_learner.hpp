#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cml/embedding.hpp"
#include "cml/instance.hpp"

namespace cml {

/// A candidate left-to-right ordering. Construction can abandon an ordering
/// when the contracted prefix neighborhood fails to be a clique; those come
/// back with viable = false and a partial sequence.
struct Ordering {
  std::vector<std::string> sequence;
  bool viable = true;
};

/// Restriction of an instance to a subset of its objects (pairs with an
/// endpoint outside the subset are dropped).
Instance subinstance(const Instance& inst, const std::vector<std::string>& subset);

/// Candidate orderings for an instance whose similarity graph is connected
/// (NotConnected otherwise; IncompleteInformation without full labels).
/// For n <= 3 all n! permutations are returned; otherwise exactly one
/// ordering per starting object, built greedily: contract the prefix, require
/// the contracted vertex's neighborhood to be a clique, and among its
/// minimum-degree members append the lexicographically smallest one whose
/// similar-to-prefix set contains that of every other unplaced object
/// (dissimilar pairs against the prefix push an object right, so the next
/// object must dominate on prefix similarity).
std::vector<Ordering> candidate_orderings(const Instance& inst);

/// Decides whether some embedding compatible with `ordering` satisfies every
/// pair at c = 1, via the gap system: consecutive positions may only grow,
/// similar pairs span at most u, dissimilar pairs at least l. Solved as a
/// difference-constraint graph with exact rational arithmetic; returns a
/// witness with f(first) = 0, or nullopt when the system has a negative
/// cycle.
std::optional<Embedding> feasible_embedding_for_ordering(
    const Instance& inst, const std::vector<std::string>& ordering);

struct LineResult {
  bool feasible = false;
  std::optional<Embedding> embedding;
};

/// Exact line learner: per similarity component, tries the candidate
/// orderings; feasible components are concatenated left to right with gaps of
/// exactly l, which satisfies every cross-component (dissimilar) pair. The
/// instance is feasible iff every component is.
LineResult learn_line(const Instance& inst);

}  // namespace cml
