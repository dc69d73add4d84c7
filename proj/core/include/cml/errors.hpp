#pragma once

#include <stdexcept>
#include <string>

namespace cml {

/// Base class of every error raised by the library. Callers that want a
/// single catch-all can catch this; the concrete subclasses below carry the
/// failure category in the type.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A document could not be read (malformed syntax, missing field, wrong type).
struct ParseError : Error {
  using Error::Error;
};

/// A structurally well-formed instance violates a validity rule. The message
/// names the rule (duplicate id, unknown id, overlapping pair, u/l out of
/// range, ...).
struct InvalidInstance : Error {
  using Error::Error;
};

/// A numeric parameter is out of its documented range (c < 1, epsilon <= 0,
/// nonpositive delta, ...).
struct InvalidParameter : Error {
  using Error::Error;
};

/// An embedding does not assign every object of the instance.
struct MissingAssignment : Error {
  using Error::Error;
};

/// A coordinate vector has the wrong dimension for its host.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// An operation that requires a connected similarity graph was given a
/// disconnected one.
struct NotConnected : Error {
  using Error::Error;
};

/// An operation that requires complete information (every pair labeled) was
/// given a partial instance.
struct IncompleteInformation : Error {
  using Error::Error;
};

/// Two partitions (or a partition and a graph) disagree on the ground set.
struct GroundSetMismatch : Error {
  using Error::Error;
};

/// A graph operation needs at least one vertex (or at least two for a cut).
struct EmptyGraph : Error {
  using Error::Error;
};

/// The planted-instance generator exhausted its redraw budget while trying to
/// avoid the open distance gap (u, l).
struct GenerationBudgetExceeded : Error {
  using Error::Error;
};

/// A partition refinement hit its part-count cap before reaching the defect
/// target.
struct PartBudgetExceeded : Error {
  using Error::Error;
};

/// A discretization produced more host points than the caller allowed.
struct PointBudgetExceeded : Error {
  using Error::Error;
};

/// A canonical tree would exceed its vertex cap.
struct SizeBudgetExceeded : Error {
  using Error::Error;
};

/// A brute-force oracle was asked to enumerate more candidates than its cap.
struct OracleBudgetExceeded : Error {
  using Error::Error;
};

}  // namespace cml
