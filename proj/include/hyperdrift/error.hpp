#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperdrift {

/// Malformed hypergraph, instance, assignment or schedule text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hyperdrift
