#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "twistzhu/tensor.hpp"
#include "twistzhu/voa.hpp"

namespace twistzhu {

/// Malformed input; position is the 0-based offset of the offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Vector literals:
///   expr  := ['-'] term (('+' | '-') term)*
///   term  := [rational '*'] mono
///   mono  := ('a(-' n ')' ['^' e])* '|0>'
/// e.g. "1/2*a(-1)^2|0> - a(-2)|0>", "|0>". Whitespace is ignored.
Vector parse_vector(std::string_view text);

/// Tensor literals: sums of [rational '*'] '[' expr '|' ... '|' expr ']' with
/// exactly k slots, each slot a vector literal. A plain vector literal is
/// read as a one-tensor in slot 1.
TensorVector parse_tensor(std::string_view text, int k);

}  // namespace twistzhu
