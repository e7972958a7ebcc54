#pragma once

#include <stdexcept>
#include <string>

namespace arakelov {

// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad user input: invalid parameters, malformed files, missing bindings.
class InputError : public Error {
  public:
    using Error::Error;
};

// An exact identity that must hold by construction failed; indicates a bug
// or corrupted state, never bad input.
class InternalCheckError : public Error {
  public:
    using Error::Error;
};

class DimensionMismatch : public InputError {
  public:
    using InputError::InputError;
};

// Right-hand side not in the column space of the matrix.
class InconsistentSystem : public InputError {
  public:
    using InputError::InputError;
};

// Kernel still nontrivial after pinning one coordinate; for fiber systems
// this signals a disconnected configuration.
class AmbiguousKernel : public InputError {
  public:
    using InputError::InputError;
};

class UnboundSymbol : public InputError {
  public:
    explicit UnboundSymbol(const std::string& name)
        : InputError("unbound symbol: " + name), symbol(name) {}
    std::string symbol;
};

class InvalidFiber : public InputError {
  public:
    using InputError::InputError;
};

class SingleComponent : public InputError {
  public:
    explicit SingleComponent(long long r_)
        : InputError("dual-graph statistics u, l, c are undefined for a "
                     "single-component fiber"),
          r(r_) {}
    long long r;
};

class AdjunctionMismatch : public InputError {
  public:
    using InputError::InputError;
};

class WidthMismatch : public InputError {
  public:
    using InputError::InputError;
};

class DegenerateStats : public InputError {
  public:
    using InputError::InputError;
};

class InvalidCurveParameter : public InputError {
  public:
    using InputError::InputError;
};

class ManinDrinfeldNotAsserted : public InputError {
  public:
    ManinDrinfeldNotAsserted()
        : InputError("total bound drops Neron-Tate heights; caller must "
                     "assert that all cuspidal divisors are torsion") {}
};

class InvalidSurface : public InputError {
  public:
    using InputError::InputError;
};

class InvalidMeasure : public InputError {
  public:
    using InputError::InputError;
};

}  // namespace arakelov
