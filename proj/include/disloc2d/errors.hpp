#pragma once

#include <stdexcept>
#include <string>

namespace disloc {

struct InvalidGrid : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GridMismatch : std::invalid_argument {
  GridMismatch() : std::invalid_argument("fields live on different grids") {}
  using std::invalid_argument::invalid_argument;
};

/// Inverse transform asked to produce a real field from coefficients whose
/// imaginary residue exceeds tolerance.
struct NonHermitianSpectrum : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IntegerOrder : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct VelocityUnavailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonFiniteField : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PicardDivergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BlowupSuspected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonPositiveInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SpectrumLeak : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroField : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InsufficientTrace : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PreconditionViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct MissingReport : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SnapshotFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace disloc
