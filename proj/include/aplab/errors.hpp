#pragma once

#include <stdexcept>
#include <string>

namespace aplab {

// Construction name not one of the registered ones.
struct UnknownConstruction : std::invalid_argument {
  explicit UnknownConstruction(const std::string& what) : std::invalid_argument(what) {}
};

// Replacement requested for an interval that is not open/uncoloured.
struct NotReplaceable : std::invalid_argument {
  explicit NotReplaceable(const std::string& what) : std::invalid_argument(what) {}
};

// Argument outside its documented domain (non-positive window, bad case id, ...).
struct InvalidParameter : std::invalid_argument {
  explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

// Value outside the range a builder accepts (e.g. ladder difference outside its band).
struct OutOfRange : std::invalid_argument {
  explicit OutOfRange(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace aplab
