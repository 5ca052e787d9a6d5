#include "srlab/error.hpp"

namespace srlab {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column,
                       std::vector<std::string> expected)
    : Error(message + " at " + std::to_string(line) + ":" + std::to_string(column)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

}  // namespace srlab
