#pragma once

#include <string>
#include <string_view>

#include "vnumlab/module.hpp"

namespace vnl {

/// Parses the line-oriented family format:
///
///   ring X Y Z
///   weights 1 1 1                      (optional)
///   ideal I = (X*Y, Z)
///   module M += [0] / (X^3, Y, X*Z)    (one line per component)
///   submodule N += (X^3, X*Y)          (optional, aligned by position)
///
/// `#` starts a comment. Throws ParseError with line and column, or Domain
/// for semantic problems such as a unit ideal I.
FamilySpec parse_input(std::string_view text);

/// Canonical text that parse_input maps back to an equal spec.
std::string echo(const FamilySpec& spec);

}  // namespace vnl
