#ifndef CHAINMON_ERRORS_HPP_
#define CHAINMON_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace chainmon {

/// Thrown when a computation would exceed a hard resource guard. Guards are
/// always explicit errors, never silent truncation.
class guard_error : public std::runtime_error {
 public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chainmon

#endif  // CHAINMON_ERRORS_HPP_
