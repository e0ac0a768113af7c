#pragma once

#include <stdexcept>
#include <string>

namespace ptaplan {

/// Base class for all ptaplan errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inconsistent or out-of-range configuration input.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed data file (CSV/JSON/MPS) or unusable history.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Solution vector does not match the instance's variable index map.
class DecodeError : public Error {
 public:
  using Error::Error;
};

/// Charnes-Cooper scale variable u fell below its safe threshold.
class DegenerateScale : public Error {
 public:
  using Error::Error;
};

/// Iterative method exhausted its iteration budget.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// LP pivoting stalled or produced an uncertifiable result.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace ptaplan
