#pragma once

#include <stdexcept>
#include <string>

namespace dfm {

// Base of every error raised by the library. Verification failures are not
// errors; they are recorded in a Report.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Principal logarithm is ambiguous (rotation at the branch boundary) or the
// element lies outside the domain of log.
class BranchCutError : public Error {
 public:
  using Error::Error;
};

// Operands belong to different groups, lattices or field kinds.
class SpecMismatch : public Error {
 public:
  using Error::Error;
};

// The group has no H x J decomposition.
class NoSplitError : public Error {
 public:
  using Error::Error;
};

// Requested Fourier band exceeds n/4 on some axis.
class BandLimitError : public Error {
 public:
  using Error::Error;
};

// Least-squares slope is undefined (too few points, coincident h, e <= 0).
class DegenerateFit : public Error {
 public:
  using Error::Error;
};

// A group-valued field is too far from the group for its Maurer-Cartan form
// to be trusted.
class AlgebraProjectionError : public Error {
 public:
  using Error::Error;
};

// A PointFrame carries differentials that are not tangent to the group.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// The scalar doublet vanishes somewhere, so the dressing is undefined.
class VacuumZeroError : public Error {
 public:
  using Error::Error;
};

// Malformed field file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace dfm
