#pragma once

#include <stdexcept>

namespace steercert {

// Dimension mismatch between operands.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Parameter outside its mathematical domain (d < 2, v outside [0,1], ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Malformed or unusable input data (CSV rows, empty bases, ...).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structural invariant fails beyond tolerance (no-signalling, PSD, ...).
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A dual certificate fails its feasibility check.
struct CertificateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace steercert
