#pragma once

#include <stdexcept>
#include <string>

namespace scoin {

/// A job would exceed a configured enumeration cap or memory budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed object violates an identity that must hold by construction.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace scoin
