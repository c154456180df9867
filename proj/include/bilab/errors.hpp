#pragma once

#include <stdexcept>
#include <string>

namespace bilab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A scalar could not be formed (zero denominator, malformed "p/q" text).
class InvalidScalar : public Error {
 public:
  using Error::Error;
};

/// Exact division by a linear factor left a remainder.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// The Casimir element did not act as a single scalar.
class NonScalarCasimir : public Error {
 public:
  using Error::Error;
};

/// A denominator or lower hypergeometric parameter vanished.
class DegenerateParameters : public Error {
 public:
  using Error::Error;
};

/// Two eigenvalues of the triangular K1 matrix collide.
class DegenerateSpectrum : public Error {
 public:
  using Error::Error;
};

/// The recurrence does not truncate to a positive finite Jacobi matrix.
class NotFinitelyOrthogonal : public Error {
 public:
  using Error::Error;
};

/// Off-diagonal products B_{k-1} D_k are not all positive.
class NotUnitary : public Error {
 public:
  using Error::Error;
};

/// B_N does not vanish, so the representation does not close.
class TruncationFailure : public Error {
 public:
  using Error::Error;
};

/// Parameters outside their admissible range (e.g. mu <= -1/2).
class InvalidParameters : public Error {
 public:
  using Error::Error;
};

}  // namespace bilab
