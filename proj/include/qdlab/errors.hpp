#pragma once

#include <stdexcept>
#include <string>

namespace qdlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands have incompatible sizes (state vs POVM, distribution vs distribution, ...).
struct DimensionError : Error {
  using Error::Error;
};

// A domain invariant failed to hold (non-PSD POVM element, non-unitary matrix,
// broken matching, non-normalized state, ...).
struct ValidationError : Error {
  using Error::Error;
};

// Second measurement of a single-use register: attempted data re-use.
struct RegisterConsumedError : Error {
  using Error::Error;
};

// A run requested capabilities the scenario forbids (e.g. a quantum
// interconnect between receivers).
struct ScenarioViolationError : Error {
  using Error::Error;
};

struct UnknownProtocolError : Error {
  using Error::Error;
};

// Target distribution undefined: the pseudoinverse maps the input vector to zero.
struct IllPosedError : Error {
  using Error::Error;
};

}  // namespace qdlab
