#ifndef SFP_ERRORS_HPP
#define SFP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sfp {

// Error categories map 1:1 onto CLI exit codes (2/3/4).
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sfp

#endif
