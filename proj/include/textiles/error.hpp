#pragma once

#include <stdexcept>
#include <string>

namespace textiles {

// Domain error: invalid input data, failed hypothesis, size guard, table miss.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace textiles
