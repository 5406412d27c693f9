#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slate {

/// Syntax error in any of the text front ends; position is the byte
/// offset of the offending character in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace slate
