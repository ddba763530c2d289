#pragma once

#include <stdexcept>
#include <string>

namespace eur {

// All library failures derive from Error so the CLI can map them to exit 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};
struct NotPositiveError : Error {
  using Error::Error;
};
struct ParameterError : Error {
  using Error::Error;
};
struct UnsupportedDimensionError : Error {
  using Error::Error;
};
struct UnsupportedFamilyError : Error {
  using Error::Error;
};
struct DesignDefectError : Error {
  using Error::Error;
};
struct FormatError : Error {
  using Error::Error;
};
// Tr[rho^0 sigma] vanished: the relative 0-entropy is +infinity.
struct InfiniteDivergence : Error {
  using Error::Error;
};

}  // namespace eur
