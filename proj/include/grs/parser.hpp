#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "grs/program.hpp"

namespace grs {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, uint32_t line, uint32_t column);
  uint32_t line() const { return line_; }
  uint32_t column() const { return column_; }

 private:
  uint32_t line_;
  uint32_t column_;
};

/// Parses a program in the textual format:
///
///   head :- b1, not c1, X != Y.     % rule
///   fact.                           % fact
///   #abducible pred/arity.          % abducible declaration
///   #domain 1..n.                   % constants for body-only variables
///
/// Comments run from '%' to end of line. Validates that abducible
/// predicates never occur in rule heads and that body-only variables have a
/// domain to range over.
Program parse_program(std::string_view text);

/// Parses a ground query literal, `atom` or `-atom`. New predicate or
/// constant symbols are interned into the program's tables.
Literal parse_query(std::string_view text, Program& program);

}  // namespace grs
