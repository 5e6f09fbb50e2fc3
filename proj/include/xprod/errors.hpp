#pragma once

#include <stdexcept>
#include <string>

namespace xprod {

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Input could not be parsed into valid domain objects.
struct parse_error : error {
  explicit parse_error(const std::string& what) : error(what) {}
};

// A size or complexity guard was exceeded.
struct guard_error : error {
  explicit guard_error(const std::string& what) : error(what) {}
};

// A structural invariant that must hold by construction was violated.
struct internal_error : error {
  explicit internal_error(const std::string& what) : error(what) {}
};

}  // namespace xprod
